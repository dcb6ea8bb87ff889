#include "kantorovich/metric.hpp"

#include <algorithm>

#include "kantorovich/errors.hpp"

namespace kantorovich {
namespace {

std::vector<Rational> flatten(const std::vector<std::vector<Rational>>& rows, std::size_t n) {
  if (rows.size() != n) {
    throw InvariantViolation("distance matrix has " + std::to_string(rows.size()) +
                             " rows for " + std::to_string(n) + " points");
  }
  std::vector<Rational> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InvariantViolation("distance matrix row " + std::to_string(i) + " has " +
                               std::to_string(rows[i].size()) + " entries, expected " +
                               std::to_string(n));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return flat;
}

void check_metric_axioms(const std::vector<std::string>& labels, const std::vector<Rational>& d) {
  const std::size_t n = labels.size();
  auto at = [&](std::size_t i, std::size_t j) -> const Rational& { return d[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != 0) {
      throw InvariantViolation("d(" + labels[i] + "," + labels[i] + ") = " + to_string(at(i, i)) +
                               " is not zero");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (at(i, j) != at(j, i)) {
        throw InvariantViolation("asymmetric distance between " + labels[i] + " and " +
                                 labels[j] + ": " + to_string(at(i, j)) + " vs " +
                                 to_string(at(j, i)));
      }
      if (at(i, j) <= 0) {
        throw InvariantViolation("distinct points " + labels[i] + " and " + labels[j] +
                                 " have non-positive distance " + to_string(at(i, j)));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (at(i, k) > at(i, j) + at(j, k)) {
          throw InvariantViolation("triangle inequality violated for (" + labels[i] + ", " +
                                   labels[j] + ", " + labels[k] + "): d(" + labels[i] + "," +
                                   labels[k] + ") = " + to_string(at(i, k)) + " > " +
                                   to_string(at(i, j) + at(j, k)));
        }
      }
    }
  }
}

}  // namespace

std::shared_ptr<FinMetricSpace::Data> FinMetricSpace::make_data(std::vector<std::string> labels,
                                                                std::vector<Rational> dist) {
  const std::size_t n = labels.size();
  if (n == 0) throw InvariantViolation("a metric space needs at least one point");
  if (dist.size() != n * n) {
    throw InvariantViolation("distance matrix has " + std::to_string(dist.size()) +
                             " entries for " + std::to_string(n) + " points");
  }
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = data->index.emplace(labels[i], i);
    if (!inserted) throw InvariantViolation("duplicate point label '" + labels[i] + "'");
  }
  data->labels = std::move(labels);
  data->dist = std::move(dist);
  return data;
}

FinMetricSpace::FinMetricSpace(std::vector<std::string> labels, std::vector<Rational> dist) {
  auto data = make_data(std::move(labels), std::move(dist));
  check_metric_axioms(data->labels, data->dist);
  data_ = std::move(data);
}

FinMetricSpace::FinMetricSpace(std::vector<std::string> labels,
                               const std::vector<std::vector<Rational>>& dist)
    : FinMetricSpace(labels, flatten(dist, labels.size())) {}

std::optional<std::size_t> FinMetricSpace::find(std::string_view label) const {
  auto it = data_->index.find(label);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t FinMetricSpace::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw ParseError("unknown point '" + std::string(label) + "'");
}

FinMetricSpace FinMetricSpace::left_factor() const {
  if (!is_tensor()) throw MismatchError("space is not a tensor product");
  return FinMetricSpace(data_->left);
}

FinMetricSpace FinMetricSpace::right_factor() const {
  if (!is_tensor()) throw MismatchError("space is not a tensor product");
  return FinMetricSpace(data_->right);
}

bool operator==(const FinMetricSpace& a, const FinMetricSpace& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->labels == b.data_->labels && a.data_->dist == b.data_->dist;
}

FinMetricSpace terminal() {
  static const FinMetricSpace one({"*"}, std::vector<Rational>{Rational(0)});
  return one;
}

FinMetricSpace tensor(const FinMetricSpace& x, const FinMetricSpace& y) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  std::vector<std::string> labels;
  labels.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) labels.push_back("(" + x.label(i) + "," + y.label(j) + ")");
  }
  std::vector<Rational> dist(n * m * n * m);
  const std::size_t nm = n * m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t a = i * m + j;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
          dist[a * nm + k * m + l] = x.distance(i, k) + y.distance(j, l);
        }
      }
    }
  }
  // The sum of two metrics is a metric; only label distinctness needs checking.
  auto data = FinMetricSpace::make_data(std::move(labels), std::move(dist));
  data->left = x.data_;
  data->right = y.data_;
  return FinMetricSpace(std::move(data));
}

ShortMap::ShortMap(FinMetricSpace domain, FinMetricSpace codomain, std::vector<std::size_t> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (table_.size() != domain_.size()) {
    throw InvariantViolation("map table has " + std::to_string(table_.size()) +
                             " entries for a domain of " + std::to_string(domain_.size()) +
                             " points");
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= codomain_.size()) {
      throw InvariantViolation("map sends " + domain_.label(i) + " outside the codomain");
    }
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    for (std::size_t j = i + 1; j < table_.size(); ++j) {
      if (codomain_.distance(table_[i], table_[j]) > domain_.distance(i, j)) {
        throw InvariantViolation(
            "map is not short on (" + domain_.label(i) + ", " + domain_.label(j) + "): d(" +
            codomain_.label(table_[i]) + "," + codomain_.label(table_[j]) + ") = " +
            to_string(codomain_.distance(table_[i], table_[j])) + " > " +
            to_string(domain_.distance(i, j)));
      }
    }
  }
}

ShortMap ShortMap::from_labels(FinMetricSpace domain, FinMetricSpace codomain,
                               const std::map<std::string, std::string>& assignment) {
  std::vector<std::size_t> table(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    auto it = assignment.find(domain.label(i));
    if (it == assignment.end()) {
      throw ParseError("map table has no entry for '" + domain.label(i) + "'");
    }
    table[i] = codomain.index_of(it->second);
  }
  if (assignment.size() != domain.size()) {
    for (const auto& [from, to] : assignment) domain.index_of(from);
  }
  return ShortMap(std::move(domain), std::move(codomain), std::move(table));
}

ShortMap identity(const FinMetricSpace& x) {
  std::vector<std::size_t> table(x.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  return ShortMap(x, x, std::move(table));
}

ShortMap compose(const ShortMap& f, const ShortMap& g) {
  if (!(f.codomain() == g.domain())) {
    throw MismatchError("cannot compose: codomain of the first map is not the domain of the second");
  }
  std::vector<std::size_t> table(f.domain().size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = g(f(i));
  return ShortMap(f.domain(), g.codomain(), std::move(table));
}

ShortMap tensor_map(const ShortMap& f, const ShortMap& g) {
  const auto& y = g.domain();
  const auto& y2 = g.codomain();
  std::vector<std::size_t> table(f.domain().size() * y.size());
  for (std::size_t i = 0; i < f.domain().size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      table[pair_index(y, i, j)] = pair_index(y2, f(i), g(j));
    }
  }
  return ShortMap(tensor(f.domain(), y), tensor(f.codomain(), y2), std::move(table));
}

ShortMap bang(const FinMetricSpace& x) {
  return ShortMap(x, terminal(), std::vector<std::size_t>(x.size(), 0));
}

ShortMap proj1(const FinMetricSpace& x, const FinMetricSpace& y) {
  std::vector<std::size_t> table(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) table[pair_index(y, i, j)] = i;
  }
  return ShortMap(tensor(x, y), x, std::move(table));
}

ShortMap proj2(const FinMetricSpace& x, const FinMetricSpace& y) {
  std::vector<std::size_t> table(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) table[pair_index(y, i, j)] = j;
  }
  return ShortMap(tensor(x, y), y, std::move(table));
}

ShortMap braiding(const FinMetricSpace& x, const FinMetricSpace& y) {
  std::vector<std::size_t> table(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) table[pair_index(y, i, j)] = pair_index(x, j, i);
  }
  return ShortMap(tensor(x, y), tensor(y, x), std::move(table));
}

ShortMap left_unitor(const FinMetricSpace& x) {
  return proj2(terminal(), x);
}

ShortMap right_unitor(const FinMetricSpace& x) {
  return proj1(x, terminal());
}

ShortMap associator(const FinMetricSpace& x, const FinMetricSpace& y, const FinMetricSpace& z) {
  auto yz = tensor(y, z);
  std::vector<std::size_t> table(x.size() * y.size() * z.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      for (std::size_t k = 0; k < z.size(); ++k) {
        table[(i * y.size() + j) * z.size() + k] = pair_index(yz, i, pair_index(z, j, k));
      }
    }
  }
  return ShortMap(tensor(tensor(x, y), z), tensor(x, yz), std::move(table));
}

ShortMap middle_swap(const FinMetricSpace& w, const FinMetricSpace& x, const FinMetricSpace& y,
                     const FinMetricSpace& z) {
  auto wx = tensor(w, x);
  auto yz = tensor(y, z);
  auto wy = tensor(w, y);
  auto xz = tensor(x, z);
  std::vector<std::size_t> table(wx.size() * yz.size());
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) {
      for (std::size_t c = 0; c < y.size(); ++c) {
        for (std::size_t e = 0; e < z.size(); ++e) {
          table[pair_index(yz, pair_index(x, a, b), pair_index(z, c, e))] =
              pair_index(xz, pair_index(y, a, c), pair_index(z, b, e));
        }
      }
    }
  }
  return ShortMap(tensor(wx, yz), tensor(wy, xz), std::move(table));
}

ShortFunctional::ShortFunctional(FinMetricSpace domain, std::vector<Rational> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.size()) {
    throw InvariantViolation("functional has " + std::to_string(values_.size()) +
                             " values for a domain of " + std::to_string(domain_.size()) +
                             " points");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    for (std::size_t j = i + 1; j < values_.size(); ++j) {
      if (abs(values_[i] - values_[j]) > domain_.distance(i, j)) {
        throw InvariantViolation("functional is not short on (" + domain_.label(i) + ", " +
                                 domain_.label(j) + "): |" + to_string(values_[i]) + " - " +
                                 to_string(values_[j]) + "| > " +
                                 to_string(domain_.distance(i, j)));
      }
    }
  }
}

ShortFunctional sum_functional(const ShortFunctional& f, const ShortFunctional& g) {
  const auto& y = g.domain();
  std::vector<Rational> values(f.domain().size() * y.size());
  for (std::size_t i = 0; i < f.domain().size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) values[pair_index(y, i, j)] = f(i) + g(j);
  }
  return ShortFunctional(tensor(f.domain(), y), std::move(values));
}

ShortFunctional distance_functional(const FinMetricSpace& x, std::size_t z) {
  std::vector<Rational> values(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) values[i] = x.distance(i, z);
  return ShortFunctional(x, std::move(values));
}

std::vector<Rational> lipschitz_closure(const FinMetricSpace& x, std::span<const Rational> values) {
  if (values.size() != x.size()) throw MismatchError("value count does not match the space");
  std::vector<Rational> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational best = values[0] + x.distance(i, 0);
    for (std::size_t j = 1; j < x.size(); ++j) best = std::min(best, values[j] + x.distance(i, j));
    out[i] = best;
  }
  return out;
}

}  // namespace kantorovich
