#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "kantorovich/measure.hpp"
#include "kantorovich/metric.hpp"
#include "kantorovich/monad.hpp"
#include "kantorovich/rational.hpp"
#include "kantorovich/structure.hpp"
#include "kantorovich/transport.hpp"

namespace kantorovich {

using json = nlohmann::json;

/// Rationals travel as canonical "p/q" strings. Parsing also accepts JSON
/// integers; floating-point numbers are rejected.
json rational_to_json(const Rational& value);
Rational rational_from_json(const json& value);

/**
 * Serializes objects into a workspace document. Spaces registered with
 * add_space() are referenced by name from everything added afterwards;
 * unregistered spaces are written inline. Tensor spaces are written as
 * {"tensor": [left, right]} so their factorization survives a round trip.
 */
class DocumentWriter {
 public:
  void add_space(const std::string& name, const FinMetricSpace& space);
  void add_map(const std::string& name, const ShortMap& f);
  void add_functional(const std::string& name, const ShortFunctional& f);
  void add_measure(const std::string& name, const Measure& p);
  void add_nested(const std::string& name, const NestedMeasure& mu);
  void add_doubly_nested(const std::string& name, const DoublyNestedMeasure& mu);
  void add_monoid(const std::string& name, const InternalMonoid& m);
  void set_params(json params) { doc_["params"] = std::move(params); }

  json space_json(const FinMetricSpace& space) const;
  json map_json(const ShortMap& f) const;
  json functional_json(const ShortFunctional& f) const;
  json measure_json(const Measure& p) const;
  json nested_json(const NestedMeasure& mu) const;
  json doubly_nested_json(const DoublyNestedMeasure& mu) const;
  json monoid_json(const InternalMonoid& m) const;

  const json& document() const { return doc_; }

 private:
  json space_ref(const FinMetricSpace& space) const;
  void claim(const char* kind, const std::string& name, json value);

  std::vector<std::pair<std::string, FinMetricSpace>> spaces_;
  json doc_ = json::object();
};

/// Self-contained encodings (every space inline).
json to_json(const FinMetricSpace& space);
json to_json(const ShortMap& f);
json to_json(const ShortFunctional& f);
json to_json(const Measure& p);
json to_json(const NestedMeasure& mu);
json to_json(const InternalMonoid& m);
json to_json(const TransportPlan& plan);

/**
 * A named registry of spaces, maps, functionals, measures, nested measures,
 * doubly nested measures and monoids, loaded from one or more JSON documents.
 *
 * Document layout (every section optional):
 *   {"spaces": {...}, "maps": {...}, "functionals": {...}, "measures": {...},
 *    "nested": {...}, "nested2": {...}, "monoids": {...}, "params": any}
 *
 * Wherever an object expects a space, measure, map or nested measure, either
 * a name (string) or an inline object is accepted. Every object is fully
 * validated during loading.
 */
class Workspace {
 public:
  Workspace() = default;

  /// Merges the documents left to right; a name defined twice within one
  /// kind is a ParseError.
  static Workspace from_documents(const std::vector<json>& docs);
  static Workspace from_json(const json& doc) { return from_documents({doc}); }
  static Workspace from_files(const std::vector<std::string>& paths);

  const FinMetricSpace& space(const std::string& name) const;
  const ShortMap& map(const std::string& name) const;
  const ShortFunctional& functional(const std::string& name) const;
  const Measure& measure(const std::string& name) const;
  const NestedMeasure& nested(const std::string& name) const;
  const DoublyNestedMeasure& doubly_nested(const std::string& name) const;
  const InternalMonoid& monoid(const std::string& name) const;
  const json& params() const { return params_; }

  const std::map<std::string, FinMetricSpace>& spaces() const { return spaces_; }
  const std::map<std::string, ShortMap>& maps() const { return maps_; }
  const std::map<std::string, ShortFunctional>& functionals() const { return functionals_; }
  const std::map<std::string, Measure>& measures() const { return measures_; }
  const std::map<std::string, NestedMeasure>& nested_measures() const { return nested_; }
  const std::map<std::string, DoublyNestedMeasure>& doubly_nested_measures() const {
    return nested2_;
  }
  const std::map<std::string, InternalMonoid>& monoids() const { return monoids_; }

 private:
  class Resolver;

  std::map<std::string, FinMetricSpace> spaces_;
  std::map<std::string, ShortMap> maps_;
  std::map<std::string, ShortFunctional> functionals_;
  std::map<std::string, Measure> measures_;
  std::map<std::string, NestedMeasure> nested_;
  std::map<std::string, DoublyNestedMeasure> nested2_;
  std::map<std::string, InternalMonoid> monoids_;
  json params_;
};

/// Reads one JSON file; ParseError on I/O or syntax errors.
json read_json_file(const std::string& path);

}  // namespace kantorovich
