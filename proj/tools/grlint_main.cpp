#include "grl/io.hpp"
#include "grl/scenario.hpp"
#include "grl/theorems.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using grl::io::json;

constexpr int kExitComputed = 0;
constexpr int kExitFailure = 1;   // suite or example mismatch
constexpr int kExitInput = 2;     // parse/validation problems
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw grl::ParseError("cannot write to '" + out_path + "'");
    os << text;
}

int cmd_integrate(const std::string& path, const std::string& format, const std::string& out,
                  bool probe) {
    grl::Scenario sc = grl::io::load_scenario(path);
    grl::GRLOptions opts;
    opts.attach_probe = probe;
    grl::GRLReport rep = grl::grl_integrate(sc, opts);
    if (format == "structured")
        emit(grl::io::report_to_json(rep).dump(2), out);
    else
        emit(grl::io::report_to_text(rep), out);
    return kExitComputed;
}

int cmd_classify(const std::string& path, const std::string& format, const std::string& out) {
    grl::Capacity c = grl::io::load_capacity(path);
    grl::PropertyFlags flags = grl::classify(c);
    if (format == "structured") {
        emit(grl::io::flags_to_json(flags).dump(2), out);
    } else {
        std::ostringstream os;
        auto row = [&](const char* name, bool v) { os << name << ": " << (v ? "yes" : "no") << "\n"; };
        row("monotone", flags.monotone);
        row("fuzzy", flags.fuzzy);
        row("submodular", flags.submodular);
        row("additive", flags.additive);
        row("subadditive", flags.subadditive);
        row("superadditive", flags.superadditive);
        emit(os.str(), out);
    }
    return kExitComputed;
}

grl::SubsetMask parse_subset_flag(const std::string& spec, const grl::GroundSpace& space) {
    if (spec == "full") return space.full_mask();
    if (spec.empty()) return 0;
    grl::SubsetMask mask = 0;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        int s;
        try {
            s = std::stoi(item);
        } catch (const std::exception&) {
            throw grl::ParseError("subset: '" + item + "' is not an index");
        }
        if (s < 0 || s >= space.size) throw grl::ParseError("subset: index out of range");
        mask |= grl::SubsetMask(1) << s;
    }
    return mask;
}

int cmd_variation(const std::string& path, const std::string& subset_spec,
                  const std::string& format, const std::string& out) {
    grl::Capacity c = grl::io::load_capacity(path);
    grl::SubsetMask subset = parse_subset_flag(subset_spec, c.space());
    grl::Rational var = grl::variation(c, subset);
    if (format == "structured") {
        json j{{"subset", grl::io::subset_to_json(subset, c.space().size)},
               {"variation", grl::io::rational_to_json(var)}};
        emit(j.dump(2), out);
    } else {
        emit("variation = " + grl::to_string(var), out);
    }
    return kExitComputed;
}

// the four built-in demonstration scenarios: zero capacity, constant
// integrand, the squared-Lebesgue distortion on [0,1], and the
// counting-style space with a vanishing-on-bounded nu (run at several
// truncations; the value does not depend on the cutoff)
int cmd_examples(const std::string& format, const std::string& out) {
    struct Row {
        std::string name;
        std::string expected;
        std::string computed;
        bool ok;
    };
    std::vector<Row> rows;

    auto record = [&](const std::string& name, const grl::Rational& expected,
                      const grl::GRLReport& rep) {
        bool ok = rep.integrable && rep.value.is_exact() && rep.value.exact_value() == expected;
        rows.push_back({name, grl::to_string(expected), rep.value.str(), ok});
    };

    {
        grl::ScenarioFinite sc;
        sc.space = grl::GroundSpace(2);
        sc.mu = grl::Capacity(sc.space, {grl::Rational(0), grl::Rational(0), grl::Rational(0),
                                         grl::Rational(0)});
        sc.nu = grl::AlphaCapacity::lebesgue_on(grl::Rational(10));
        sc.f = {grl::Rational(1), grl::Rational(2)};
        sc.A = sc.space.full_mask();
        record("zero capacity", grl::Rational(0), grl::grl_integrate(sc));
    }
    {
        grl::ScenarioFinite sc;
        sc.space = grl::GroundSpace(2);
        sc.mu = grl::Capacity(sc.space, {grl::Rational(0), grl::Rational(1, 2), grl::Rational(1, 3),
                                         grl::Rational(1)});
        sc.nu = grl::AlphaCapacity::lebesgue();
        sc.f = {grl::Rational(2), grl::Rational(2)};
        sc.A = sc.space.full_mask();
        // mu(S) * nu([0, c]) with c = 2
        record("constant integrand", grl::Rational(2), grl::grl_integrate(sc));
    }
    {
        grl::ScenarioInterval sc;
        sc.domain_end = grl::Rational(1);
        sc.mu_exponent = grl::Rational(2);
        sc.nu = grl::AlphaCapacity::lebesgue();
        sc.knots = {{grl::Rational(0), grl::Rational(0)}, {grl::Rational(1), grl::Rational(1)}};
        sc.subsets = {{grl::Rational(0), grl::Rational(1)}};
        record("squared distortion on [0,1]", grl::Rational(1, 3), grl::grl_integrate(sc));
    }
    for (int truncation : {4, 6, 8}) {
        grl::ScenarioFinite sc;
        sc.space = grl::GroundSpace(truncation);
        std::vector<grl::Rational> values(sc.space.subset_count(), grl::Rational(1));
        values[0] = 0;
        sc.mu = grl::Capacity(sc.space, std::move(values));
        sc.nu = grl::AlphaCapacity::vanishing_on_bounded(grl::Rational(1));
        for (int s = 0; s < truncation; ++s) sc.f.push_back(grl::Rational(s));
        sc.A = sc.space.full_mask();
        record("vanishing nu, truncation " + std::to_string(truncation), grl::Rational(0),
               grl::grl_integrate(sc));
    }

    bool all_ok = true;
    for (const Row& r : rows) all_ok &= r.ok;

    if (format == "structured") {
        json arr = json::array();
        for (const Row& r : rows)
            arr.push_back(json{{"name", r.name},
                               {"expected", r.expected},
                               {"computed", r.computed},
                               {"ok", r.ok}});
        emit(json{{"examples", arr}, {"all_ok", all_ok}}.dump(2), out);
    } else {
        std::ostringstream os;
        for (const Row& r : rows)
            os << (r.ok ? "  ok  " : " FAIL ") << r.name << ": expected " << r.expected
               << ", computed " << r.computed << "\n";
        emit(os.str(), out);
    }
    return all_ok ? kExitComputed : kExitFailure;
}

std::vector<grl::theorems::TheoremId> parse_theorem_filter(const std::string& spec) {
    std::vector<grl::theorems::TheoremId> ids;
    if (spec == "all" || spec.empty()) return ids;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto id = grl::theorems::theorem_from_string(item);
        if (!id) throw UsageError("unknown theorem id '" + item + "' (expected T1..T16)");
        ids.push_back(*id);
    }
    return ids;
}

int cmd_verify(const std::string& filter, int instances, std::uint64_t seed,
               const std::string& format, const std::string& out) {
    grl::theorems::SuiteConfig config;
    config.theorems = parse_theorem_filter(filter);
    config.instances_per_theorem = instances;
    config.seed = seed;
    grl::theorems::SuiteReport report = grl::theorems::run_suite(config);
    if (format == "structured")
        std::cout << grl::io::suite_to_json(report).dump(2) << "\n";
    else
        std::cout << grl::io::suite_to_text(report);
    if (!out.empty()) emit(grl::io::suite_to_csv(report), out);
    return report.suite_passed() ? kExitComputed : kExitFailure;
}

int cmd_sweep(const std::string& template_path, const std::vector<std::string>& sets,
              const std::string& out) {
    json base = grl::io::parse_file(template_path);
    struct Axis {
        std::string pointer;
        std::vector<json> values;
    };
    std::vector<Axis> axes;
    for (const std::string& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw UsageError("--set expects <json-pointer>=<v1,v2,...>, got '" + s + "'");
        Axis axis;
        axis.pointer = s.substr(0, eq);
        std::stringstream ss(s.substr(eq + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            json v;
            try {
                v = json::parse(item);
            } catch (const json::parse_error&) {
                v = item;  // bare strings like 1/2 stay strings
            }
            axis.values.push_back(v);
        }
        if (axis.values.empty()) throw UsageError("--set '" + s + "' carries no values");
        axes.push_back(std::move(axis));
    }
    if (axes.empty()) throw UsageError("sweep needs at least one --set axis");

    std::ostringstream csv;
    for (const Axis& a : axes) csv << grl::io::csv_field(a.pointer) << ",";
    csv << "integrable,value,method\n";

    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
        json j = base;
        for (std::size_t i = 0; i < axes.size(); ++i)
            j[json::json_pointer(axes[i].pointer)] = axes[i].values[idx[i]];
        grl::Scenario sc = grl::io::scenario_from_json(j);
        grl::GRLReport rep = grl::grl_integrate(sc);
        for (std::size_t i = 0; i < axes.size(); ++i) {
            const json& v = axes[i].values[idx[i]];
            csv << grl::io::csv_field(v.is_string() ? v.get<std::string>() : v.dump()) << ",";
        }
        csv << (rep.integrable ? "true" : "false") << "," << grl::io::csv_field(rep.value.str())
            << "," << to_string(rep.rl.method) << "\n";

        std::size_t k = 0;
        for (; k < axes.size(); ++k) {
            if (++idx[k] < axes[k].values.size()) break;
            idx[k] = 0;
        }
        if (k == axes.size()) break;
    }
    emit(csv.str(), out);
    return kExitComputed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Riemann-Lebesgue decomposition integrals over a pair of set functions"};
    app.set_version_flag("--version", "grlint 0.1.0");
    app.require_subcommand(1);

    std::string format = "human";
    std::string out;
    auto add_io_flags = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"human", "structured"}));
        sub->add_option("--out", out, "write the report to a file instead of stdout");
    };

    auto* integrate = app.add_subcommand("integrate", "compute a generalized integral from a scenario file");
    std::string scenario_path;
    integrate->add_option("scenario", scenario_path, "scenario JSON file")->required();
    bool probe = false;
    integrate->add_flag("--probe", probe, "attach a refinement-envelope probe to the report");
    add_io_flags(integrate);

    auto* classify = app.add_subcommand("classify", "classification flags of a capacity file");
    std::string capacity_path;
    classify->add_option("capacity", capacity_path, "capacity JSON file")->required();
    add_io_flags(classify);

    auto* variation = app.add_subcommand("variation", "exact variation of a capacity on a subset");
    std::string variation_path, subset_spec = "full";
    variation->add_option("capacity", variation_path, "capacity JSON file")->required();
    variation->add_option("--subset", subset_spec, "comma-separated point indices, or 'full'");
    add_io_flags(variation);

    auto* examples = app.add_subcommand("examples", "run the built-in reference scenarios");
    add_io_flags(examples);

    auto* verify = app.add_subcommand("verify", "run the theorem suite on seeded random instances");
    std::string theorems_filter = "all";
    int instances = 200;
    std::uint64_t seed = 42;
    verify->add_option("--theorems", theorems_filter, "comma-separated ids (T1..T16) or 'all'")
        ->capture_default_str();
    verify->add_option("--instances", instances, "instances per theorem")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--seed", seed, "root seed; all randomness flows from it")
        ->capture_default_str();
    add_io_flags(verify);

    auto* sweep = app.add_subcommand("sweep", "integrate a scenario template over a parameter grid");
    std::string template_path;
    std::vector<std::string> sets;
    sweep->add_option("--template", template_path, "scenario template JSON file")->required();
    sweep->add_option("--set", sets, "<json-pointer>=<v1,v2,...>; repeat for a grid");
    sweep->add_option("--out", out, "write the CSV to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (integrate->parsed()) return cmd_integrate(scenario_path, format, out, probe);
        if (classify->parsed()) return cmd_classify(capacity_path, format, out);
        if (variation->parsed()) return cmd_variation(variation_path, subset_spec, format, out);
        if (examples->parsed()) return cmd_examples(format, out);
        if (verify->parsed()) return cmd_verify(theorems_filter, instances, seed, format, out);
        if (sweep->parsed()) return cmd_sweep(template_path, sets, out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const grl::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const grl::DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const grl::GenerationError& e) {
        std::cerr << "generation error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
