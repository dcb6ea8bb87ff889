// Python bindings. Rationals cross the boundary as "p/q" strings; the
// kantorovich package converts them to and from fractions.Fraction.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kantorovich/errors.hpp"
#include "kantorovich/io.hpp"
#include "kantorovich/laws.hpp"
#include "kantorovich/monad.hpp"
#include "kantorovich/structure.hpp"
#include "kantorovich/transport.hpp"

namespace py = pybind11;
using namespace kantorovich;

namespace {

std::vector<Rational> parse_all(const std::vector<std::string>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(parse_rational(v));
  return out;
}

template <typename Range>
std::vector<std::string> format_all(const Range& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

py::dict wasserstein_dict(const Measure& p, const Measure& q) {
  auto result = wasserstein(p, q);
  const std::size_t n = p.space().size();
  std::vector<std::vector<std::string>> coupling(n, std::vector<std::string>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) coupling[i][j] = to_string(result.plan.at(i, j));
  }
  py::dict out;
  out["value"] = to_string(result.value);
  out["coupling"] = coupling;
  out["witness"] = format_all(result.witness.potential.values());
  return out;
}

}  // namespace

PYBIND11_MODULE(_kantorovich, m) {
  m.doc() = "Exact Kantorovich monad on finite metric spaces";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", error);
  py::register_exception<MismatchError>(m, "MismatchError", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<TooLargeError>(m, "TooLargeError", error);

  py::class_<FinMetricSpace>(m, "FinMetricSpace")
      .def(py::init([](std::vector<std::string> labels, const std::vector<std::vector<std::string>>& rows) {
             std::vector<std::vector<Rational>> dist;
             for (const auto& row : rows) dist.push_back(parse_all(row));
             return FinMetricSpace(std::move(labels), dist);
           }),
           py::arg("labels"), py::arg("dist"))
      .def_property_readonly("size", &FinMetricSpace::size)
      .def_property_readonly("labels", &FinMetricSpace::labels)
      .def("distance", [](const FinMetricSpace& s, std::size_t i, std::size_t j) {
        if (i >= s.size() || j >= s.size()) throw py::index_error("point index out of range");
        return to_string(s.distance(i, j));
      })
      .def("index_of", &FinMetricSpace::index_of)
      .def_property_readonly("is_tensor", &FinMetricSpace::is_tensor)
      .def("left_factor", &FinMetricSpace::left_factor)
      .def("right_factor", &FinMetricSpace::right_factor)
      .def("to_json", [](const FinMetricSpace& s) { return to_json(s).dump(); })
      .def(py::self == py::self)
      .def("__len__", &FinMetricSpace::size);

  m.def("terminal", &terminal);
  m.def("tensor", &tensor);

  py::class_<ShortMap>(m, "ShortMap")
      .def(py::init<FinMetricSpace, FinMetricSpace, std::vector<std::size_t>>(), py::arg("domain"),
           py::arg("codomain"), py::arg("table"))
      .def_property_readonly("domain", &ShortMap::domain)
      .def_property_readonly("codomain", &ShortMap::codomain)
      .def_property_readonly("table", [](const ShortMap& f) {
        return std::vector<std::size_t>(f.table().begin(), f.table().end());
      })
      .def("to_json", [](const ShortMap& f) { return to_json(f).dump(); })
      .def(py::self == py::self);

  m.def("identity", &identity);
  m.def("compose", &compose, "f then g");
  m.def("tensor_map", &tensor_map);
  m.def("bang", &bang);
  m.def("proj1", &proj1);
  m.def("proj2", &proj2);
  m.def("braiding", &braiding);

  py::class_<ShortFunctional>(m, "ShortFunctional")
      .def(py::init([](FinMetricSpace domain, const std::vector<std::string>& values) {
             return ShortFunctional(std::move(domain), parse_all(values));
           }),
           py::arg("domain"), py::arg("values"))
      .def_property_readonly("domain", &ShortFunctional::domain)
      .def_property_readonly("values", [](const ShortFunctional& f) { return format_all(f.values()); });

  py::class_<Measure>(m, "Measure")
      .def(py::init([](FinMetricSpace space, const std::vector<std::string>& weights) {
             return Measure(std::move(space), parse_all(weights));
           }),
           py::arg("space"), py::arg("weights"))
      .def_property_readonly("space", &Measure::space)
      .def_property_readonly("weights", [](const Measure& p) { return format_all(p.weights()); })
      .def("support", &Measure::support)
      .def("to_json", [](const Measure& p) { return to_json(p).dump(); })
      .def(py::self == py::self);

  m.def("dirac", py::overload_cast<const FinMetricSpace&, std::size_t>(&dirac));
  m.def("integrate", [](const ShortFunctional& f, const Measure& p) { return to_string(integrate(f, p)); });
  m.def("pushforward", &pushforward);

  m.def("wasserstein", &wasserstein_dict,
        "Exact W1 with its optimal coupling and a short dual witness.");
  m.def("wasserstein_oracle", [](const Measure& p, const Measure& q) {
    return to_string(wasserstein_oracle(p, q));
  });
  m.def("verified_solve_count", &verified_solve_count);

  py::class_<NestedMeasure>(m, "NestedMeasure")
      .def(py::init([](FinMetricSpace base, std::vector<Measure> inner,
                       const std::vector<std::string>& weights) {
             return NestedMeasure(std::move(base), std::move(inner), parse_all(weights));
           }),
           py::arg("base"), py::arg("inner"), py::arg("weights"))
      .def_property_readonly("base", &NestedMeasure::base)
      .def_property_readonly("inner", [](const NestedMeasure& mu) {
        return std::vector<Measure>(mu.inner().begin(), mu.inner().end());
      })
      .def_property_readonly("weights", [](const NestedMeasure& mu) { return format_all(mu.weights()); })
      .def("merged", &NestedMeasure::merged)
      .def("same_distribution", &NestedMeasure::same_distribution);

  m.def("expectation", &expectation);
  m.def("unit_nested", &unit_nested);
  m.def("nested_wasserstein", [](const NestedMeasure& mu, const NestedMeasure& nu) {
    return to_string(nested_wasserstein(mu, nu));
  });

  py::class_<InternalMonoid>(m, "InternalMonoid")
      .def(py::init<FinMetricSpace, ShortMap, std::size_t>(), py::arg("carrier"), py::arg("mult"),
           py::arg("unit"))
      .def_property_readonly("carrier", &InternalMonoid::carrier)
      .def_property_readonly("unit", &InternalMonoid::unit)
      .def("__call__", &InternalMonoid::operator());

  m.def("product", &product);
  m.def("marginals", &marginals);
  m.def("is_independent", &is_independent);
  m.def("strength", &strength);
  m.def("convolve", &convolve);
  m.def("independent_maps", [](const Measure& s, const ShortMap& f1, const ShortMap& f2) {
    auto r = independent_maps(s, f1, f2);
    py::dict out;
    out["independent"] = r.independent;
    out["tupling_short"] = r.tupling_short;
    out["joint"] = r.joint;
    return out;
  });
  m.def("nabla2", &nabla2);
  m.def("delta2", &delta2);

  m.def("load_workspace", [](const std::string& text) {
    auto ws = Workspace::from_json(json::parse(text));
    py::dict out;
    py::dict spaces, maps, measures, nested, monoids;
    for (const auto& [k, v] : ws.spaces()) spaces[py::str(k)] = v;
    for (const auto& [k, v] : ws.maps()) maps[py::str(k)] = v;
    for (const auto& [k, v] : ws.measures()) measures[py::str(k)] = v;
    for (const auto& [k, v] : ws.nested_measures()) nested[py::str(k)] = v;
    for (const auto& [k, v] : ws.monoids()) monoids[py::str(k)] = v;
    out["spaces"] = spaces;
    out["maps"] = maps;
    out["measures"] = measures;
    out["nested"] = nested;
    out["monoids"] = monoids;
    return out;
  }, "Parses and validates a workspace document given as JSON text.");

  m.def("run_laws", [](std::uint64_t seed, std::size_t cases, std::vector<std::string> only) {
    return to_json(run_suite(seed, cases, SizeBudget{}, only)).dump();
  }, py::arg("seed"), py::arg("cases"), py::arg("only") = std::vector<std::string>{},
        "Runs the law catalog and returns the JSON report text.");
  m.def("check_law", [](const std::string& id, const std::string& instance) {
    auto outcome = check_law(id, json::parse(instance));
    return py::make_tuple(outcome.holds, outcome.diagnostics);
  });
  m.def("law_ids", [] {
    std::vector<std::string> ids;
    for (const auto& law : law_catalog()) ids.push_back(law.id);
    return ids;
  });
}
