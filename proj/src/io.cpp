#include "grl/io.hpp"

#include <fstream>
#include <sstream>

namespace grl::io {

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j, const std::string& context) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError(context + ": expected a rational as \"p/q\" or an integer");
}

json ext_value_to_json(const ExtValue& v) {
    switch (v.kind()) {
        case ExtValue::Kind::Exact: return rational_to_json(v.exact_value());
        case ExtValue::Kind::PosInf: return "inf";
        case ExtValue::Kind::Approx:
            return json{{"decimal", v.approx_value()}, {"error_bound", v.error_bound()}};
    }
    return nullptr;
}

json subset_to_json(SubsetMask mask, int n) {
    json arr = json::array();
    for (int s = 0; s < n; ++s)
        if ((mask >> s) & 1) arr.push_back(s);
    return arr;
}

SubsetMask subset_from_json(const json& j, int n, const std::string& context) {
    if (!j.is_array()) throw ParseError(context + ": expected an array of point indices");
    SubsetMask mask = 0;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError(context + ": indices must be integers");
        long long s = e.get<long long>();
        if (s < 0 || s >= n) throw ParseError(context + ": index out of range");
        mask |= SubsetMask(1) << s;
    }
    return mask;
}

namespace {

GroundSpace space_from_json(const json& j) {
    if (!j.contains("size")) throw ParseError("space: missing \"size\"");
    int n = j.at("size").get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels") && !j.at("labels").is_null())
        labels = j.at("labels").get<std::vector<std::string>>();
    return GroundSpace(n, std::move(labels));
}

json space_to_json(const GroundSpace& s) {
    json j{{"size", s.size}};
    if (!s.labels.empty()) j["labels"] = s.labels;
    return j;
}

Rational nonneg(Rational r, const std::string& context) {
    if (r < 0) throw ParseError(context + ": must be non-negative");
    return r;
}

}  // namespace

json capacity_to_json(const Capacity& c) {
    json values = json::object();
    for (SubsetMask b = 0; b < c.values().size(); ++b)
        values[std::to_string(b)] = rational_to_json(c.at(b));
    return json{{"space", space_to_json(c.space())}, {"values", values}};
}

Capacity capacity_from_json(const json& j) {
    if (!j.contains("space")) throw ParseError("capacity: missing \"space\"");
    if (!j.contains("values")) throw ParseError("capacity: missing \"values\"");
    GroundSpace space = space_from_json(j.at("space"));
    const json& vals = j.at("values");
    if (!vals.is_object()) throw ParseError("capacity: \"values\" must map subsets to rationals");
    std::vector<Rational> out(space.subset_count());
    std::vector<bool> seen(space.subset_count(), false);
    for (const auto& [key, val] : vals.items()) {
        std::size_t mask;
        try {
            mask = std::stoull(key);
        } catch (const std::exception&) {
            throw ParseError("capacity: subset key '" + key + "' is not a bitmask");
        }
        if (mask >= out.size())
            throw ParseError("capacity: subset key '" + key + "' outside the power set");
        if (seen[mask]) throw ParseError("capacity: duplicate subset key '" + key + "'");
        seen[mask] = true;
        out[mask] = nonneg(rational_from_json(val, "capacity value " + key), "capacity value " + key);
    }
    for (std::size_t b = 0; b < seen.size(); ++b)
        if (!seen[b])
            throw ParseError("capacity: map is not total, subset " + std::to_string(b) + " missing");
    return Capacity(std::move(space), std::move(out));
}

Capacity load_capacity(const std::string& path) { return capacity_from_json(parse_file(path)); }

json alpha_to_json(const AlphaCapacity& v) {
    json j{{"kind", v.kind_name()}};
    switch (v.kind()) {
        case AlphaCapacity::Kind::SigmaAdditive: {
            json atoms = json::array();
            for (const auto& a : v.atoms())
                atoms.push_back(json::array({rational_to_json(a.location), rational_to_json(a.mass)}));
            json segments = json::array();
            for (const auto& s : v.segments()) {
                json hi = s.where.unbounded ? json("inf") : rational_to_json(s.where.hi);
                segments.push_back(
                    json::array({rational_to_json(s.where.lo), hi, rational_to_json(s.density)}));
            }
            j["atoms"] = atoms;
            j["segments"] = segments;
            break;
        }
        case AlphaCapacity::Kind::Dirac:
            j["location"] = rational_to_json(v.dirac_location());
            break;
        case AlphaCapacity::Kind::VanishingOnBounded:
            j["level"] = rational_to_json(v.vanishing_level());
            break;
        case AlphaCapacity::Kind::DistortedPower:
            j["exponent"] = rational_to_json(v.exponent());
            break;
    }
    return j;
}

AlphaCapacity alpha_from_json(const json& j) {
    if (!j.contains("kind")) throw ParseError("nu: missing \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "lebesgue") return AlphaCapacity::lebesgue();
    if (kind == "sigma_additive") {
        std::vector<AlphaCapacity::Atom> atoms;
        if (j.contains("atoms")) {
            for (const auto& a : j.at("atoms")) {
                if (!a.is_array() || a.size() != 2)
                    throw ParseError("nu: atoms must be [location, mass] pairs");
                atoms.push_back({rational_from_json(a[0], "atom location"),
                                 rational_from_json(a[1], "atom mass")});
            }
        }
        std::vector<AlphaCapacity::Segment> segments;
        if (j.contains("segments")) {
            for (const auto& s : j.at("segments")) {
                if (!s.is_array() || s.size() != 3)
                    throw ParseError("nu: segments must be [lo, hi, density] triples");
                Rational lo = rational_from_json(s[0], "segment lo");
                Rational density = rational_from_json(s[2], "segment density");
                if (s[1].is_string() && s[1].get<std::string>() == "inf") {
                    segments.push_back({Interval::tail(lo, false), density});
                } else {
                    Rational hi = rational_from_json(s[1], "segment hi");
                    segments.push_back({Interval::make(lo, hi, false, true), density});
                }
            }
        }
        return AlphaCapacity::sigma_additive(std::move(atoms), std::move(segments));
    }
    if (kind == "dirac") {
        if (!j.contains("location")) throw ParseError("nu: dirac needs \"location\"");
        return AlphaCapacity::dirac(rational_from_json(j.at("location"), "dirac location"));
    }
    if (kind == "vanishing_on_bounded") {
        if (!j.contains("level")) throw ParseError("nu: vanishing_on_bounded needs \"level\"");
        return AlphaCapacity::vanishing_on_bounded(rational_from_json(j.at("level"), "level"));
    }
    if (kind == "distorted_power") {
        if (!j.contains("exponent")) throw ParseError("nu: distorted_power needs \"exponent\"");
        return AlphaCapacity::distorted_power(rational_from_json(j.at("exponent"), "exponent"));
    }
    throw ParseError("nu: unknown kind '" + kind + "'");
}

json scenario_to_json(const Scenario& sc) {
    if (const auto* fin = std::get_if<ScenarioFinite>(&sc)) {
        json space = space_to_json(fin->space);
        space["kind"] = "finite";
        json f = json::array();
        for (const auto& v : fin->f) f.push_back(rational_to_json(v));
        json mu = json::object();
        json values = json::object();
        for (SubsetMask b = 0; b < fin->mu.values().size(); ++b)
            values[std::to_string(b)] = rational_to_json(fin->mu.at(b));
        mu["values"] = values;
        return json{{"space", space},
                    {"mu", mu},
                    {"nu", alpha_to_json(fin->nu)},
                    {"f", f},
                    {"A", subset_to_json(fin->A, fin->space.size)},
                    {"assume_nu_zero_at_origin", fin->assume_nu_zero_at_origin}};
    }
    const auto& iv = std::get<ScenarioInterval>(sc);
    json knots = json::array();
    for (const auto& [x, y] : iv.knots)
        knots.push_back(json::array({rational_to_json(x), rational_to_json(y)}));
    json subsets = json::array();
    for (const auto& [a, b] : iv.subsets)
        subsets.push_back(json::array({rational_to_json(a), rational_to_json(b)}));
    return json{{"space", json{{"kind", "interval"}, {"domain", json::array({"0", rational_to_json(iv.domain_end)})}}},
                {"mu", json{{"exponent", rational_to_json(iv.mu_exponent)}}},
                {"nu", alpha_to_json(iv.nu)},
                {"f", json{{"knots", knots}}},
                {"A", subsets},
                {"assume_nu_zero_at_origin", iv.assume_nu_zero_at_origin}};
}

Scenario scenario_from_json(const json& j) {
    if (!j.contains("space")) throw ParseError("scenario: missing \"space\"");
    const json& sp = j.at("space");
    const std::string kind = sp.contains("kind") ? sp.at("kind").get<std::string>() : "finite";
    const bool assume = j.value("assume_nu_zero_at_origin", false);
    if (!j.contains("mu")) throw ParseError("scenario: missing \"mu\"");
    if (!j.contains("nu")) throw ParseError("scenario: missing \"nu\"");
    if (!j.contains("f")) throw ParseError("scenario: missing \"f\"");
    if (!j.contains("A")) throw ParseError("scenario: missing \"A\"");

    if (kind == "finite") {
        ScenarioFinite sc;
        sc.space = space_from_json(sp);
        json mu_full{{"space", space_to_json(sc.space)}, {"values", j.at("mu").at("values")}};
        sc.mu = capacity_from_json(mu_full);
        sc.nu = alpha_from_json(j.at("nu"));
        if (!j.at("f").is_array()) throw ParseError("scenario: finite f must be an array");
        for (std::size_t i = 0; i < j.at("f").size(); ++i)
            sc.f.push_back(nonneg(rational_from_json(j.at("f")[i], "f"), "f"));
        sc.A = subset_from_json(j.at("A"), sc.space.size, "A");
        sc.assume_nu_zero_at_origin = assume;
        sc.validate();
        return sc;
    }
    if (kind == "interval") {
        ScenarioInterval sc;
        if (!sp.contains("domain") || !sp.at("domain").is_array() || sp.at("domain").size() != 2)
            throw ParseError("scenario: interval space needs \"domain\": [0, d]");
        Rational lo = rational_from_json(sp.at("domain")[0], "domain");
        if (lo != 0) throw ParseError("scenario: interval domain must start at 0");
        sc.domain_end = rational_from_json(sp.at("domain")[1], "domain");
        if (!j.at("mu").contains("exponent"))
            throw ParseError("scenario: interval mu needs \"exponent\"");
        sc.mu_exponent = rational_from_json(j.at("mu").at("exponent"), "mu exponent");
        sc.nu = alpha_from_json(j.at("nu"));
        if (!j.at("f").contains("knots")) throw ParseError("scenario: interval f needs \"knots\"");
        for (const auto& k : j.at("f").at("knots")) {
            if (!k.is_array() || k.size() != 2) throw ParseError("scenario: knots are [x, y] pairs");
            sc.knots.emplace_back(rational_from_json(k[0], "knot x"),
                                  nonneg(rational_from_json(k[1], "knot y"), "knot y"));
        }
        if (!j.at("A").is_array()) throw ParseError("scenario: interval A must be a list of [a, b]");
        for (const auto& iv : j.at("A")) {
            if (!iv.is_array() || iv.size() != 2)
                throw ParseError("scenario: interval A must be a list of [a, b]");
            sc.subsets.emplace_back(rational_from_json(iv[0], "A lo"),
                                    rational_from_json(iv[1], "A hi"));
        }
        sc.assume_nu_zero_at_origin = assume;
        sc.validate();
        return sc;
    }
    throw ParseError("scenario: unknown space kind '" + kind + "'");
}

Scenario load_scenario(const std::string& path) { return scenario_from_json(parse_file(path)); }

json flags_to_json(const PropertyFlags& f) {
    return json{{"monotone", f.monotone},       {"fuzzy", f.fuzzy},
                {"submodular", f.submodular},   {"additive", f.additive},
                {"subadditive", f.subadditive}, {"superadditive", f.superadditive}};
}

json step_to_json(const StepFunction& u) {
    json bks = json::array(), pts = json::array(), ivs = json::array();
    for (const auto& b : u.breakpoints()) bks.push_back(rational_to_json(b));
    for (const auto& v : u.point_values()) pts.push_back(rational_to_json(v));
    for (const auto& v : u.interval_values()) ivs.push_back(rational_to_json(v));
    return json{{"breakpoints", bks},
                {"value_at_0", rational_to_json(u.value_at_0())},
                {"point_values", pts},
                {"interval_values", ivs},
                {"tail_value", rational_to_json(u.tail_value())}};
}

json trace_to_json(const EnvelopeTrace& t) {
    json levels = json::array();
    for (const auto& lv : t.levels)
        levels.push_back(json{{"depth", lv.depth},
                              {"lower", ext_value_to_json(lv.lower)},
                              {"upper", ext_value_to_json(lv.upper)}});
    json j{{"levels", levels}, {"verdict", to_string(t.verdict)}};
    if (t.verdict == EnvelopeVerdict::Converged) j["value"] = ext_value_to_json(t.value);
    return j;
}

namespace {

json profile_to_json(const IntervalSurvival& s) {
    json pieces = json::array();
    Rational prev(0);
    for (std::size_t i = 0; i < s.length.breaks().size(); ++i) {
        pieces.push_back(json{{"over", json::array({rational_to_json(prev),
                                                    rational_to_json(s.length.breaks()[i])})},
                              {"length", json::array({rational_to_json(s.length.coeffs()[i][0]),
                                                      rational_to_json(s.length.coeffs()[i][1])})}});
        prev = s.length.breaks()[i];
    }
    return json{{"kind", "power_of_piecewise_linear"},
                {"exponent", rational_to_json(s.exponent)},
                {"length_at_0", rational_to_json(s.length.value_at_0())},
                {"length_pieces", pieces}};
}

}  // namespace

json report_to_json(const GRLReport& r) {
    json j{{"integrable", r.integrable},
           {"exists", r.rl.exists},
           {"value", ext_value_to_json(r.value)},
           {"method", to_string(r.rl.method)}};
    if (r.survival_step) j["survival"] = step_to_json(*r.survival_step);
    if (r.survival_profile) j["survival"] = profile_to_json(*r.survival_profile);
    json diag = json::object();
    diag["assumptions"] = json{{"nu_zero_at_origin_assumed", r.nu_zero_at_origin_assumed},
                               {"nu_zero_at_origin", r.nu_zero_at_origin_actual}};
    if (!r.rl.note.empty()) diag["note"] = r.rl.note;
    if (r.rl.trace) diag["trace"] = trace_to_json(*r.rl.trace);
    j["diagnostics"] = diag;
    return j;
}

std::string report_to_text(const GRLReport& r) {
    std::ostringstream os;
    os << "integrable: " << (r.integrable ? "yes" : "no") << "\n";
    os << "value:      " << r.value.str() << "\n";
    os << "method:     " << to_string(r.rl.method) << "\n";
    if (!r.rl.note.empty()) os << "note:       " << r.rl.note << "\n";
    if (r.survival_step) {
        const StepFunction& u = *r.survival_step;
        os << "survival:   u(0) = " << to_string(u.value_at_0());
        Rational prev(0);
        for (std::size_t i = 0; i < u.breakpoints().size(); ++i) {
            os << ", " << to_string(u.interval_values()[i]) << " on (" << to_string(prev) << ","
               << to_string(u.breakpoints()[i]) << ")"
               << ", " << to_string(u.point_values()[i]) << " at " << to_string(u.breakpoints()[i]);
            prev = u.breakpoints()[i];
        }
        os << ", " << to_string(u.tail_value()) << " beyond" << "\n";
    }
    if (r.rl.trace) {
        os << "probe:      " << to_string(r.rl.trace->verdict);
        if (r.rl.trace->verdict == EnvelopeVerdict::Converged)
            os << " at " << r.rl.trace->value.str();
        os << " after " << r.rl.trace->levels.size() << " levels\n";
    }
    return os.str();
}

json suite_to_json(const theorems::SuiteReport& r) {
    json stats = json::array();
    for (const auto& [id, st] : r.stats)
        stats.push_back(json{{"theorem", theorems::to_string(id)},
                             {"statement", theorems::describe(id)},
                             {"instances", st.instances},
                             {"skipped", st.skipped},
                             {"passed", st.passed},
                             {"failed", st.failed}});
    json controls = json::array();
    for (const auto& c : r.controls) {
        json jc{{"name", c.name}, {"instances", c.instances}, {"violations", c.violations}};
        if (!c.witness.empty()) jc["witness"] = json::parse(c.witness);
        controls.push_back(jc);
    }
    return json{{"theorems", stats},
                {"negative_controls", controls},
                {"suite_passed", r.suite_passed()},
                {"wall_seconds", r.wall_seconds}};
}

std::string suite_to_csv(const theorems::SuiteReport& r) {
    std::ostringstream os;
    os << "id,instances,skipped,passed,failed\n";
    for (const auto& [id, st] : r.stats)
        os << theorems::to_string(id) << "," << st.instances << "," << st.skipped << ","
           << st.passed << "," << st.failed << "\n";
    return os.str();
}

std::string suite_to_text(const theorems::SuiteReport& r) {
    std::ostringstream os;
    os << "theorem  instances  skipped  passed  failed   statement\n";
    char line[256];
    for (const auto& [id, st] : r.stats) {
        std::snprintf(line, sizeof(line), "%-7s  %9d  %7d  %6d  %6d   %s\n",
                      theorems::to_string(id).c_str(), st.instances, st.skipped, st.passed,
                      st.failed, theorems::describe(id));
        os << line;
    }
    for (const auto& c : r.controls) {
        std::snprintf(line, sizeof(line), "control %-28s violations: %d / %d\n", c.name.c_str(),
                      c.violations, c.instances);
        os << line;
    }
    os << (r.suite_passed() ? "SUITE PASSED" : "SUITE FAILED") << " (" << r.wall_seconds << " s)\n";
    return os.str();
}

json instance_to_json(const theorems::Instance& inst) {
    json j;
    j["space"] = space_to_json(inst.space);
    j["mu"] = capacity_to_json(inst.mu)["values"];
    if (inst.mu2) j["mu2"] = capacity_to_json(*inst.mu2)["values"];
    j["nu"] = alpha_to_json(inst.nu);
    if (inst.nu2) j["nu2"] = alpha_to_json(*inst.nu2);
    json f = json::array();
    for (const auto& v : inst.f) f.push_back(rational_to_json(v));
    j["f"] = f;
    if (inst.g) {
        json g = json::array();
        for (const auto& v : *inst.g) g.push_back(rational_to_json(v));
        j["g"] = g;
    }
    j["A"] = subset_to_json(inst.A, inst.space.size);
    if (inst.B) j["B"] = subset_to_json(*inst.B, inst.space.size);
    if (inst.phi) j["phi"] = *inst.phi;
    if (inst.target) j["target"] = space_to_json(*inst.target);
    if (inst.scalar_a) j["a"] = rational_to_json(*inst.scalar_a);
    if (inst.scalar_b) j["b"] = rational_to_json(*inst.scalar_b);
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in '" + path + "': ") + e.what());
    }
}

}  // namespace grl::io
