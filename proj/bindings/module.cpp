#include "grl/io.hpp"
#include "grl/scenario.hpp"
#include "grl/theorems.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

namespace {

using grl::io::json;

std::vector<grl::Rational> parse_values(const std::vector<std::string>& xs) {
    std::vector<grl::Rational> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(grl::parse_rational(x));
    return out;
}

grl::SubsetMask mask_from_indices(const std::vector<int>& indices, const grl::GroundSpace& space) {
    grl::SubsetMask mask = 0;
    for (int s : indices) {
        if (s < 0 || s >= space.size) throw grl::DomainError("subset index out of range");
        mask |= grl::SubsetMask(1) << s;
    }
    return mask;
}

std::string integrate_json(const std::string& scenario_json, bool probe) {
    grl::Scenario sc = grl::io::scenario_from_json(json::parse(scenario_json));
    grl::GRLOptions opts;
    opts.attach_probe = probe;
    return grl::io::report_to_json(grl::grl_integrate(sc, opts)).dump();
}

std::string classify_json(const std::string& capacity_json) {
    grl::Capacity c = grl::io::capacity_from_json(json::parse(capacity_json));
    return grl::io::flags_to_json(grl::classify(c)).dump();
}

std::string variation_json(const std::string& capacity_json, const std::vector<int>& subset) {
    grl::Capacity c = grl::io::capacity_from_json(json::parse(capacity_json));
    return grl::to_string(grl::variation(c, mask_from_indices(subset, c.space())));
}

std::string choquet_json(const std::vector<std::string>& f, const std::string& capacity_json,
                         const std::vector<int>& subset) {
    grl::Capacity c = grl::io::capacity_from_json(json::parse(capacity_json));
    return grl::to_string(grl::choquet(parse_values(f), c, mask_from_indices(subset, c.space())));
}

std::string survival_json(const std::vector<std::string>& f, const std::string& capacity_json,
                          const std::vector<int>& subset) {
    grl::Capacity c = grl::io::capacity_from_json(json::parse(capacity_json));
    grl::StepFunction u =
        grl::survival_finite(parse_values(f), c, mask_from_indices(subset, c.space()));
    return grl::io::step_to_json(u).dump();
}

std::string verify_json(const std::string& theorems, int instances, std::uint64_t seed) {
    grl::theorems::SuiteConfig config;
    if (theorems != "all" && !theorems.empty()) {
        std::stringstream ss(theorems);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto id = grl::theorems::theorem_from_string(item);
            if (!id) throw grl::DomainError("unknown theorem id '" + item + "'");
            config.theorems.push_back(*id);
        }
    }
    config.instances_per_theorem = instances;
    config.seed = seed;
    return grl::io::suite_to_json(grl::theorems::run_suite(config)).dump();
}

std::string random_capacity_json(int size, const std::string& kind, std::uint64_t seed) {
    auto k = grl::capacity_kind_from_string(kind);
    if (!k) throw grl::DomainError("unknown capacity kind '" + kind + "'");
    grl::Capacity c = grl::random_capacity(grl::GroundSpace(size), *k, seed);
    return grl::io::capacity_to_json(c).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact engine for generalized Riemann-Lebesgue decomposition integrals; "
              "compound arguments and results travel as JSON strings";

    m.def("integrate", &integrate_json, py::arg("scenario_json"), py::arg("probe") = false,
          "integrate a scenario (JSON string), returning the full report as JSON");
    m.def("classify", &classify_json, py::arg("capacity_json"),
          "classification flags of a capacity (JSON string in, JSON string out)");
    m.def("variation", &variation_json, py::arg("capacity_json"), py::arg("subset"),
          "exact variation of a capacity on the subset given by point indices");
    m.def("choquet", &choquet_json, py::arg("f"), py::arg("capacity_json"), py::arg("subset"),
          "sorting-oracle Choquet integral of f (list of rationals as strings) over the subset");
    m.def("survival", &survival_json, py::arg("f"), py::arg("capacity_json"), py::arg("subset"),
          "survival function of f over the subset, as a step-function JSON string");
    m.def("verify", &verify_json, py::arg("theorems") = "all", py::arg("instances") = 50,
          py::arg("seed") = 42, "run the theorem suite; returns the report as JSON");
    m.def("random_capacity", &random_capacity_json, py::arg("size"), py::arg("kind"),
          py::arg("seed"), "seeded random capacity of the requested kind, as JSON");

    py::register_exception<grl::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<grl::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<grl::GenerationError>(m, "GenerationError", PyExc_RuntimeError);

#ifdef GRLINT_VERSION
    m.attr("__version__") = GRLINT_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
