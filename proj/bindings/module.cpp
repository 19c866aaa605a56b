#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semisched/json_io.hpp"

namespace py = pybind11;
using namespace semisched;

namespace {

Rational to_rational(const py::handle& value) {
    if (py::isinstance<Rational>(value)) return value.cast<Rational>();
    if (py::isinstance<py::int_>(value)) return Rational(value.cast<long long>());
    if (py::isinstance<py::str>(value))
        return Rational::parse(value.cast<std::string>());
    throw ParseError("expected int, fraction string or Rational");
}

std::vector<Rational> to_sizes(const py::sequence& seq) {
    std::vector<Rational> sizes;
    sizes.reserve(seq.size());
    for (const auto& item : seq) sizes.push_back(to_rational(item));
    return sizes;
}

EnumerationDomain make_domain(int machines, int n_min, int n_max,
                              std::optional<long long> sum_max,
                              std::optional<long long> size_cap,
                              const std::string& pattern) {
    EnumerationDomain domain;
    domain.machines = machines;
    domain.n_min = n_min;
    domain.n_max = n_max;
    domain.sum_max = sum_max;
    domain.size_cap = size_cap;
    domain.filter = parse_pattern_filter(pattern);
    domain.validate();
    return domain;
}

py::object json_to_py(const nlohmann::json& doc) {
    return py::module_::import("json").attr("loads")(doc.dump());
}

} // namespace

PYBIND11_MODULE(semisched, m) {
    m.doc() = "Semi-online makespan scheduling on 2 and 3 identical machines: "
              "exact-rational policies, optimum oracle, adversary families and "
              "bound audits";

    py::register_exception<Error>(m, "SchedulingError", PyExc_ValueError);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const py::handle& v) { return to_rational(v); }))
        .def(py::init<long long, long long>(), py::arg("num"), py::arg("den") = 1)
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
        .def("__float__", &Rational::to_double)
        .def("__eq__", [](const Rational& a, const py::handle& b) {
            return a == to_rational(b);
        })
        .def("__lt__", [](const Rational& a, const py::handle& b) {
            return a < to_rational(b);
        })
        .def("__le__", [](const Rational& a, const py::handle& b) {
            return a <= to_rational(b);
        })
        .def("__add__", [](const Rational& a, const py::handle& b) {
            return a + to_rational(b);
        })
        .def("__sub__", [](const Rational& a, const py::handle& b) {
            return a - to_rational(b);
        })
        .def("__mul__", [](const Rational& a, const py::handle& b) {
            return a * to_rational(b);
        })
        .def("__truediv__", [](const Rational& a, const py::handle& b) {
            return a / to_rational(b);
        });

    py::enum_<PatternClass>(m, "PatternClass")
        .value("I1", PatternClass::I1)
        .value("I2", PatternClass::I2)
        .value("MixedDecr", PatternClass::MixedDecr);

    py::enum_<RatioKind>(m, "RatioKind")
        .value("VsLbFormula", RatioKind::VsLbFormula)
        .value("VsExact", RatioKind::VsExact);

    py::class_<Instance>(m, "Instance")
        .def_property_readonly("machines", &Instance::machines)
        .def_property_readonly("sizes",
                               [](const Instance& inst) {
                                   py::list out;
                                   for (const auto& p : inst.sizes()) out.append(p);
                                   return out;
                               })
        .def_property_readonly("sum", &Instance::sum)
        .def_property_readonly("pmax", &Instance::pmax)
        .def_property_readonly("pattern", &Instance::pattern)
        .def("__len__", &Instance::jobs)
        .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
        .def("to_json", [](const Instance& inst) {
            return json_to_py(instance_to_json(inst));
        });

    py::class_<ScheduleOutcome>(m, "ScheduleOutcome")
        .def_readonly("instance", &ScheduleOutcome::instance)
        .def_readonly("assignment", &ScheduleOutcome::assignment)
        .def_property_readonly("loads",
                               [](const ScheduleOutcome& o) {
                                   py::list out;
                                   for (const auto& l : o.loads) out.append(l);
                                   return out;
                               })
        .def_readonly("makespan", &ScheduleOutcome::makespan)
        .def_property_readonly("trace", [](const ScheduleOutcome& o) {
            return json_to_py(trace_to_json(o.trace));
        });

    py::class_<OptReference>(m, "OptReference")
        .def_readonly("instance", &OptReference::instance)
        .def_readonly("lb_formula", &OptReference::lb_formula)
        .def_readonly("exact", &OptReference::exact)
        .def_readonly("exact_assignment", &OptReference::exact_assignment);

    py::class_<AdversaryTree>(m, "AdversaryTree")
        .def_readonly("machines", &AdversaryTree::machines)
        .def_readonly("total", &AdversaryTree::total);

    m.def("classify_pattern", [](const py::sequence& sizes) {
        const auto s = to_sizes(sizes);
        return classify_pattern(s);
    });
    m.def(
        "build_instance",
        [](int machines, const py::sequence& sizes) {
            return build_instance(machines, to_sizes(sizes));
        },
        py::arg("machines"), py::arg("sizes"));
    m.def("apply_assignment", &apply_assignment, py::arg("instance"),
          py::arg("assignment"));

    m.def(
        "run_online",
        [](const Instance& instance, const std::string& policy) {
            return run_online(instance, parse_policy(policy));
        },
        py::arg("instance"), py::arg("policy"));
    m.def("lpt_offline", &lpt_offline, py::arg("instance"));

    m.def("opt_lower_bound", &opt_lower_bound, py::arg("instance"));
    m.def("opt_exact", &opt_exact, py::arg("instance"),
          py::arg("node_budget") = kDefaultNodeBudget);
    m.def("opt_exact_enumerate", &opt_exact_enumerate, py::arg("instance"));
    m.def("competitive_ratio", &competitive_ratio, py::arg("outcome"),
          py::arg("reference"), py::arg("kind"));

    m.def("theorem1_tree",
          [](const py::handle& k) { return theorem1_tree(to_rational(k)); });
    m.def("theorem2_tree",
          [](const py::handle& k) { return theorem2_tree(to_rational(k)); });
    m.def("theorem6_tree", &theorem6_tree);
    m.def("minimax_value", &minimax_value, py::arg("tree"), py::arg("kind"),
          py::arg("node_budget") = kDefaultNodeBudget);

    m.def(
        "audit_upper_bound",
        [](const std::string& policy, int machines, int n_min, int n_max,
           std::optional<long long> sum_max, std::optional<long long> size_cap,
           const std::string& pattern, RatioKind kind, const py::handle& claimed,
           int threads) {
            const auto report = audit_upper_bound(
                parse_policy(policy),
                make_domain(machines, n_min, n_max, sum_max, size_cap, pattern),
                kind, to_rational(claimed), threads);
            return json_to_py(audit_report_json(report));
        },
        py::arg("policy"), py::arg("machines"), py::arg("n_min"), py::arg("n_max"),
        py::arg("sum_max") = py::none(), py::arg("size_cap") = py::none(),
        py::arg("pattern") = "decr", py::arg("kind") = RatioKind::VsLbFormula,
        py::arg("claimed") = 1, py::arg("threads") = 1);

    m.def("parse_instance_json", [](const std::string& text) {
        return parse_instance_json(nlohmann::json::parse(text));
    });
    m.def("serialize_instance_file", &serialize_instance_file);
}
