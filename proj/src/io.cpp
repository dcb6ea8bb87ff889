#include "kantorovich/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "kantorovich/errors.hpp"

namespace kantorovich {
namespace {

constexpr const char* kKinds[] = {"spaces",  "maps",    "functionals", "measures",
                                  "nested",  "nested2", "monoids"};

const json& require_field(const json& object, const char* key, const std::string& context) {
  if (!object.is_object()) throw ParseError(context + ": expected a JSON object");
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(context + ": missing field '" + key + "'");
  return *it;
}

std::string require_string(const json& value, const std::string& context) {
  if (!value.is_string()) throw ParseError(context + ": expected a string");
  return value.get<std::string>();
}

std::vector<Rational> weight_table(const FinMetricSpace& space, const json& weights,
                                   const std::string& context) {
  if (!weights.is_object()) throw ParseError(context + ": weights must be an object");
  std::vector<Rational> w(space.size());
  for (const auto& [label, value] : weights.items()) {
    auto i = space.find(label);
    if (!i) throw ParseError(context + ": unknown point '" + label + "'");
    w[*i] = rational_from_json(value);
  }
  return w;
}

}  // namespace

json rational_to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(value.get<std::uint64_t>())
                                      : Rational(value.get<std::int64_t>());
  }
  throw ParseError("expected a rational as a \"p/q\" string or integer, got " + value.dump());
}

// ---------------------------------------------------------------------------
// Writing

void DocumentWriter::claim(const char* kind, const std::string& name, json value) {
  auto& section = doc_[kind];
  if (section.contains(name)) {
    throw ParseError(std::string("duplicate ") + kind + " entry '" + name + "'");
  }
  section[name] = std::move(value);
}

json DocumentWriter::space_ref(const FinMetricSpace& space) const {
  for (const auto& [name, registered] : spaces_) {
    if (registered == space) return name;
  }
  return space_json(space);
}

json DocumentWriter::space_json(const FinMetricSpace& space) const {
  if (space.is_tensor()) {
    return json{{"tensor", json::array({space_ref(space.left_factor()),
                                        space_ref(space.right_factor())})}};
  }
  json rows = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < space.size(); ++j) {
      row.push_back(rational_to_json(space.distance(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return json{{"points", space.labels()}, {"dist", std::move(rows)}};
}

json DocumentWriter::map_json(const ShortMap& f) const {
  json table = json::object();
  for (std::size_t i = 0; i < f.domain().size(); ++i) {
    table[f.domain().label(i)] = f.codomain().label(f(i));
  }
  return json{{"domain", space_ref(f.domain())},
              {"codomain", space_ref(f.codomain())},
              {"table", std::move(table)}};
}

json DocumentWriter::functional_json(const ShortFunctional& f) const {
  json values = json::object();
  for (std::size_t i = 0; i < f.domain().size(); ++i) {
    values[f.domain().label(i)] = rational_to_json(f(i));
  }
  return json{{"domain", space_ref(f.domain())}, {"values", std::move(values)}};
}

json DocumentWriter::measure_json(const Measure& p) const {
  json weights = json::object();
  for (std::size_t i = 0; i < p.space().size(); ++i) {
    weights[p.space().label(i)] = rational_to_json(p(i));
  }
  return json{{"space", space_ref(p.space())}, {"weights", std::move(weights)}};
}

json DocumentWriter::nested_json(const NestedMeasure& mu) const {
  json inner = json::array();
  json weights = json::array();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    inner.push_back(measure_json(mu.inner()[i]));
    weights.push_back(rational_to_json(mu.weights()[i]));
  }
  return json{{"base", space_ref(mu.base())}, {"inner", std::move(inner)},
              {"weights", std::move(weights)}};
}

json DocumentWriter::doubly_nested_json(const DoublyNestedMeasure& mu) const {
  json inner = json::array();
  json weights = json::array();
  for (std::size_t i = 0; i < mu.inner().size(); ++i) {
    inner.push_back(nested_json(mu.inner()[i]));
    weights.push_back(rational_to_json(mu.weights()[i]));
  }
  return json{{"base", space_ref(mu.base())}, {"inner", std::move(inner)},
              {"weights", std::move(weights)}};
}

json DocumentWriter::monoid_json(const InternalMonoid& m) const {
  return json{{"carrier", space_ref(m.carrier())},
              {"mult", map_json(m.mult())},
              {"unit", m.carrier().label(m.unit())}};
}

void DocumentWriter::add_space(const std::string& name, const FinMetricSpace& space) {
  claim("spaces", name, space_json(space));
  spaces_.emplace_back(name, space);
}

void DocumentWriter::add_map(const std::string& name, const ShortMap& f) {
  claim("maps", name, map_json(f));
}

void DocumentWriter::add_functional(const std::string& name, const ShortFunctional& f) {
  claim("functionals", name, functional_json(f));
}

void DocumentWriter::add_measure(const std::string& name, const Measure& p) {
  claim("measures", name, measure_json(p));
}

void DocumentWriter::add_nested(const std::string& name, const NestedMeasure& mu) {
  claim("nested", name, nested_json(mu));
}

void DocumentWriter::add_doubly_nested(const std::string& name, const DoublyNestedMeasure& mu) {
  claim("nested2", name, doubly_nested_json(mu));
}

void DocumentWriter::add_monoid(const std::string& name, const InternalMonoid& m) {
  claim("monoids", name, monoid_json(m));
}

json to_json(const FinMetricSpace& space) { return DocumentWriter{}.space_json(space); }
json to_json(const ShortMap& f) { return DocumentWriter{}.map_json(f); }
json to_json(const ShortFunctional& f) { return DocumentWriter{}.functional_json(f); }
json to_json(const Measure& p) { return DocumentWriter{}.measure_json(p); }
json to_json(const NestedMeasure& mu) { return DocumentWriter{}.nested_json(mu); }
json to_json(const InternalMonoid& m) { return DocumentWriter{}.monoid_json(m); }

json to_json(const TransportPlan& plan) {
  const auto& space = plan.source.space();
  json coupling = json::object();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::object();
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (plan.at(i, j) != 0) row[space.label(j)] = rational_to_json(plan.at(i, j));
    }
    if (!row.empty()) coupling[space.label(i)] = std::move(row);
  }
  return json{{"coupling", std::move(coupling)}, {"cost", rational_to_json(plan.cost)}};
}

// ---------------------------------------------------------------------------
// Reading

class Workspace::Resolver {
 public:
  Resolver(Workspace& ws, std::map<std::string, std::map<std::string, json>> raw)
      : ws_(ws), raw_(std::move(raw)) {}

  void resolve_all() {
    for (const auto& [name, _] : raw_["spaces"]) named_space(name);
    for (const auto& [name, value] : raw_["maps"]) {
      ws_.maps_.emplace(name, map(value, "map '" + name + "'"));
    }
    for (const auto& [name, value] : raw_["functionals"]) {
      ws_.functionals_.emplace(name, functional(value, "functional '" + name + "'"));
    }
    for (const auto& [name, _] : raw_["measures"]) named_measure(name);
    for (const auto& [name, _] : raw_["nested"]) named_nested(name);
    for (const auto& [name, value] : raw_["nested2"]) {
      ws_.nested2_.emplace(name, doubly_nested(value, "nested2 '" + name + "'"));
    }
    for (const auto& [name, value] : raw_["monoids"]) {
      ws_.monoids_.emplace(name, monoid(value, "monoid '" + name + "'"));
    }
  }

 private:
  template <typename Parse>
  auto with_context(const std::string& context, Parse&& parse) {
    try {
      return parse();
    } catch (const InvariantViolation& e) {
      throw InvariantViolation(context + ": " + e.what());
    }
  }

  FinMetricSpace named_space(const std::string& name) {
    if (auto it = ws_.spaces_.find(name); it != ws_.spaces_.end()) return it->second;
    auto raw = raw_["spaces"].find(name);
    if (raw == raw_["spaces"].end()) throw ParseError("unknown space '" + name + "'");
    if (!in_progress_.insert(name).second) {
      throw ParseError("space '" + name + "' is defined in terms of itself");
    }
    auto space = space_value(raw->second, "space '" + name + "'");
    in_progress_.erase(name);
    ws_.spaces_.emplace(name, space);
    return space;
  }

  FinMetricSpace space(const json& value, const std::string& context) {
    if (value.is_string()) return named_space(value.get<std::string>());
    return space_value(value, context);
  }

  FinMetricSpace space_value(const json& value, const std::string& context) {
    if (!value.is_object()) throw ParseError(context + ": expected a space name or object");
    if (value.contains("tensor")) {
      const auto& factors = value["tensor"];
      if (!factors.is_array() || factors.size() != 2) {
        throw ParseError(context + ": 'tensor' needs exactly two factors");
      }
      return tensor(space(factors[0], context), space(factors[1], context));
    }
    const auto& points = require_field(value, "points", context);
    const auto& dist = require_field(value, "dist", context);
    if (!points.is_array()) throw ParseError(context + ": 'points' must be an array");
    if (!dist.is_array()) throw ParseError(context + ": 'dist' must be an array of rows");
    std::vector<std::string> labels;
    for (const auto& p : points) labels.push_back(require_string(p, context + " point"));
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : dist) {
      if (!row.is_array()) throw ParseError(context + ": 'dist' rows must be arrays");
      auto& out = rows.emplace_back();
      for (const auto& d : row) out.push_back(rational_from_json(d));
    }
    return with_context(context, [&] { return FinMetricSpace(std::move(labels), rows); });
  }

  ShortMap map(const json& value, const std::string& context) {
    if (value.is_string()) return ws_.map(value.get<std::string>());
    auto domain = space(require_field(value, "domain", context), context);
    auto codomain = space(require_field(value, "codomain", context), context);
    const auto& table = require_field(value, "table", context);
    if (!table.is_object()) throw ParseError(context + ": 'table' must be an object");
    std::map<std::string, std::string> assignment;
    for (const auto& [from, to] : table.items()) assignment[from] = require_string(to, context);
    return with_context(context, [&] {
      return ShortMap::from_labels(std::move(domain), std::move(codomain), assignment);
    });
  }

  ShortFunctional functional(const json& value, const std::string& context) {
    if (value.is_string()) return ws_.functional(value.get<std::string>());
    auto domain = space(require_field(value, "domain", context), context);
    const auto& values = require_field(value, "values", context);
    if (!values.is_object()) throw ParseError(context + ": 'values' must be an object");
    std::vector<std::optional<Rational>> table(domain.size());
    for (const auto& [label, v] : values.items()) {
      auto i = domain.find(label);
      if (!i) throw ParseError(context + ": unknown point '" + label + "'");
      table[*i] = rational_from_json(v);
    }
    std::vector<Rational> out;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (!table[i]) throw ParseError(context + ": no value for '" + domain.label(i) + "'");
      out.push_back(*table[i]);
    }
    return with_context(context, [&] { return ShortFunctional(domain, std::move(out)); });
  }

  Measure named_measure(const std::string& name) {
    if (auto it = ws_.measures_.find(name); it != ws_.measures_.end()) return it->second;
    auto raw = raw_["measures"].find(name);
    if (raw == raw_["measures"].end()) throw ParseError("unknown measure '" + name + "'");
    auto p = measure_value(raw->second, "measure '" + name + "'");
    ws_.measures_.emplace(name, p);
    return p;
  }

  Measure measure(const json& value, const std::string& context) {
    if (value.is_string()) return named_measure(value.get<std::string>());
    return measure_value(value, context);
  }

  Measure measure_value(const json& value, const std::string& context) {
    auto sp = space(require_field(value, "space", context), context);
    auto w = weight_table(sp, require_field(value, "weights", context), context);
    return with_context(context, [&] { return Measure(sp, std::move(w)); });
  }

  std::vector<Rational> weight_list(const json& value, const std::string& context) {
    if (!value.is_array()) throw ParseError(context + ": 'weights' must be an array");
    std::vector<Rational> out;
    for (const auto& w : value) out.push_back(rational_from_json(w));
    return out;
  }

  NestedMeasure named_nested(const std::string& name) {
    if (auto it = ws_.nested_.find(name); it != ws_.nested_.end()) return it->second;
    auto raw = raw_["nested"].find(name);
    if (raw == raw_["nested"].end()) throw ParseError("unknown nested measure '" + name + "'");
    auto mu = nested_value(raw->second, "nested '" + name + "'");
    ws_.nested_.emplace(name, mu);
    return mu;
  }

  NestedMeasure nested_value(const json& value, const std::string& context) {
    if (value.is_string()) return named_nested(value.get<std::string>());
    auto base = space(require_field(value, "base", context), context);
    const auto& inner_json = require_field(value, "inner", context);
    if (!inner_json.is_array()) throw ParseError(context + ": 'inner' must be an array");
    std::vector<Measure> inner;
    for (const auto& m : inner_json) inner.push_back(measure(m, context));
    auto weights = weight_list(require_field(value, "weights", context), context);
    return with_context(context, [&] {
      return NestedMeasure(base, std::move(inner), std::move(weights));
    });
  }

  DoublyNestedMeasure doubly_nested(const json& value, const std::string& context) {
    auto base = space(require_field(value, "base", context), context);
    const auto& inner_json = require_field(value, "inner", context);
    if (!inner_json.is_array()) throw ParseError(context + ": 'inner' must be an array");
    std::vector<NestedMeasure> inner;
    for (const auto& m : inner_json) inner.push_back(nested_value(m, context));
    auto weights = weight_list(require_field(value, "weights", context), context);
    return with_context(context, [&] {
      return DoublyNestedMeasure(base, std::move(inner), std::move(weights));
    });
  }

  InternalMonoid monoid(const json& value, const std::string& context) {
    auto carrier = space(require_field(value, "carrier", context), context);
    auto mult = map(require_field(value, "mult", context), context);
    auto unit = carrier.index_of(require_string(require_field(value, "unit", context), context));
    return with_context(context, [&] { return InternalMonoid(carrier, mult, unit); });
  }

  Workspace& ws_;
  std::map<std::string, std::map<std::string, json>> raw_;
  std::set<std::string> in_progress_;
};

Workspace Workspace::from_documents(const std::vector<json>& docs) {
  std::map<std::string, std::map<std::string, json>> raw;
  Workspace ws;
  for (const auto& doc : docs) {
    if (!doc.is_object()) throw ParseError("workspace document must be a JSON object");
    for (const auto& [key, section] : doc.items()) {
      if (key == "params") {
        ws.params_ = section;
        continue;
      }
      if (key == "schema_version") continue;
      if (std::find(std::begin(kKinds), std::end(kKinds), key) == std::end(kKinds)) {
        throw ParseError("unknown workspace section '" + key + "'");
      }
      if (!section.is_object()) throw ParseError("section '" + key + "' must be an object");
      for (const auto& [name, value] : section.items()) {
        if (!raw[key].emplace(name, value).second) {
          throw ParseError("duplicate " + key + " entry '" + name + "'");
        }
      }
    }
  }
  Resolver(ws, std::move(raw)).resolve_all();
  return ws;
}

Workspace Workspace::from_files(const std::vector<std::string>& paths) {
  std::vector<json> docs;
  for (const auto& path : paths) docs.push_back(read_json_file(path));
  return from_documents(docs);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

namespace {

template <typename Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& name, const char* kind) {
  auto it = map.find(name);
  if (it == map.end()) throw ParseError(std::string("unknown ") + kind + " '" + name + "'");
  return it->second;
}

}  // namespace

const FinMetricSpace& Workspace::space(const std::string& name) const {
  return lookup(spaces_, name, "space");
}
const ShortMap& Workspace::map(const std::string& name) const { return lookup(maps_, name, "map"); }
const ShortFunctional& Workspace::functional(const std::string& name) const {
  return lookup(functionals_, name, "functional");
}
const Measure& Workspace::measure(const std::string& name) const {
  return lookup(measures_, name, "measure");
}
const NestedMeasure& Workspace::nested(const std::string& name) const {
  return lookup(nested_, name, "nested measure");
}
const DoublyNestedMeasure& Workspace::doubly_nested(const std::string& name) const {
  return lookup(nested2_, name, "doubly nested measure");
}
const InternalMonoid& Workspace::monoid(const std::string& name) const {
  return lookup(monoids_, name, "monoid");
}

}  // namespace kantorovich
