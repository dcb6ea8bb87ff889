#include "kantorovich/transport.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <queue>

#include "kantorovich/errors.hpp"

namespace kantorovich {
namespace {

std::atomic<std::uint64_t> g_verified_solves{0};

/// Transportation simplex on an n×n cost matrix with Bland's rule. Nodes
/// 0..n-1 are rows (sources), n..2n-1 columns (targets).
class TransportationSimplex {
 public:
  TransportationSimplex(const FinMetricSpace& space, std::span<const Rational> supply,
                        std::span<const Rational> demand)
      : space_(space),
        n_(space.size()),
        flow_(n_ * n_),
        basic_(n_ * n_, false),
        adjacent_(2 * n_),
        u_(n_),
        v_(n_) {
    north_west_corner(supply, demand);
  }

  void solve() {
    while (true) {
      compute_potentials();
      auto entering = find_entering();
      if (!entering) return;
      pivot(*entering);
    }
  }

  const std::vector<Rational>& flow() const { return flow_; }
  const std::vector<Rational>& row_potentials() const { return u_; }
  const std::vector<Rational>& column_potentials() const { return v_; }

 private:
  const Rational& cost(std::size_t cell) const { return space_.distances()[cell]; }

  void add_basic(std::size_t i, std::size_t j) {
    basic_[i * n_ + j] = true;
    adjacent_[i].push_back(n_ + j);
    adjacent_[n_ + j].push_back(i);
  }

  void remove_basic(std::size_t i, std::size_t j) {
    basic_[i * n_ + j] = false;
    std::erase(adjacent_[i], n_ + j);
    std::erase(adjacent_[n_ + j], i);
  }

  // Staircase basis: exactly 2n-1 cells, connected, hence a spanning tree.
  void north_west_corner(std::span<const Rational> supply, std::span<const Rational> demand) {
    std::vector<Rational> a(supply.begin(), supply.end());
    std::vector<Rational> b(demand.begin(), demand.end());
    std::size_t i = 0;
    std::size_t j = 0;
    while (true) {
      Rational amount = std::min(a[i], b[j]);
      flow_[i * n_ + j] = amount;
      add_basic(i, j);
      a[i] -= amount;
      b[j] -= amount;
      if (i == n_ - 1 && j == n_ - 1) break;
      if ((a[i] == 0 && i < n_ - 1) || j == n_ - 1) {
        ++i;
      } else {
        ++j;
      }
    }
  }

  void compute_potentials() {
    std::vector<bool> known(2 * n_, false);
    std::vector<std::size_t> stack{0};
    u_[0] = 0;
    known[0] = true;
    while (!stack.empty()) {
      std::size_t node = stack.back();
      stack.pop_back();
      for (std::size_t next : adjacent_[node]) {
        if (known[next]) continue;
        known[next] = true;
        if (node < n_) {
          std::size_t j = next - n_;
          v_[j] = cost(node * n_ + j) - u_[node];
        } else {
          std::size_t j = node - n_;
          u_[next] = cost(next * n_ + j) - v_[j];
        }
        stack.push_back(next);
      }
    }
  }

  // Bland: the lowest-index cell with negative reduced cost.
  std::optional<std::size_t> find_entering() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t cell = i * n_ + j;
        if (basic_[cell]) continue;
        if (cost(cell) - u_[i] - v_[j] < 0) return cell;
      }
    }
    return std::nullopt;
  }

  // Tree path between two nodes, as the node sequence from `from` to `to`.
  std::vector<std::size_t> tree_path(std::size_t from, std::size_t to) const {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(2 * n_, kNone);
    std::queue<std::size_t> frontier;
    frontier.push(from);
    parent[from] = from;
    while (!frontier.empty()) {
      std::size_t node = frontier.front();
      frontier.pop();
      if (node == to) break;
      for (std::size_t next : adjacent_[node]) {
        if (parent[next] != kNone) continue;
        parent[next] = node;
        frontier.push(next);
      }
    }
    if (parent[to] == kNone) throw Error("transport basis is not a spanning tree");
    std::vector<std::size_t> path;
    for (std::size_t node = to; node != from; node = parent[node]) path.push_back(node);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
  }

  void pivot(std::size_t entering) {
    const std::size_t row = entering / n_;
    const std::size_t col = entering % n_;
    // Path col → ... → row alternates column and row nodes; its cells carry
    // signs −, +, −, ... starting from the column end.
    auto path = tree_path(n_ + col, row);
    std::vector<std::size_t> minus_cells;
    std::vector<std::size_t> plus_cells{entering};
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      std::size_t a = path[k];
      std::size_t b = path[k + 1];
      std::size_t cell = a < n_ ? a * n_ + (b - n_) : b * n_ + (a - n_);
      (k % 2 == 0 ? minus_cells : plus_cells).push_back(cell);
    }
    std::size_t leaving = minus_cells.front();
    for (std::size_t cell : minus_cells) {
      if (flow_[cell] < flow_[leaving] || (flow_[cell] == flow_[leaving] && cell < leaving)) {
        leaving = cell;
      }
    }
    const Rational theta = flow_[leaving];
    if (theta != 0) {
      for (std::size_t cell : plus_cells) flow_[cell] += theta;
      for (std::size_t cell : minus_cells) flow_[cell] -= theta;
    }
    remove_basic(leaving / n_, leaving % n_);
    add_basic(row, col);
  }

  const FinMetricSpace& space_;
  std::size_t n_;
  std::vector<Rational> flow_;
  std::vector<bool> basic_;
  std::vector<std::vector<std::size_t>> adjacent_;
  std::vector<Rational> u_;
  std::vector<Rational> v_;
};

void verify_plan(const TransportPlan& plan) {
  const auto& space = plan.source.space();
  const std::size_t n = space.size();
  Rational cost = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational row = 0;
    Rational col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (plan.at(i, j) < 0) throw Error("transport plan has a negative entry");
      row += plan.at(i, j);
      col += plan.at(j, i);
      if (plan.at(i, j) != 0) cost += plan.at(i, j) * space.distance(i, j);
    }
    if (row != plan.source(i) || col != plan.target(i)) {
      throw Error("transport plan marginals do not match at " + space.label(i));
    }
  }
  if (cost != plan.cost) throw Error("transport plan cost is inconsistent");
}

}  // namespace

WassersteinResult wasserstein(const Measure& p, const Measure& q) {
  require_same_space(p.space(), q.space(), "wasserstein");
  const auto& space = p.space();
  const std::size_t n = space.size();

  TransportationSimplex simplex(space, p.weights(), q.weights());
  simplex.solve();

  TransportPlan plan{p, q, simplex.flow(), Rational(0)};
  for (std::size_t cell = 0; cell < n * n; ++cell) {
    if (plan.coupling[cell] != 0) plan.cost += plan.coupling[cell] * space.distances()[cell];
  }
  verify_plan(plan);

  const auto& u = simplex.row_potentials();
  const auto& v = simplex.column_potentials();
  Rational dual = integrate(u, p) + integrate(v, q);
  if (dual != plan.cost) {
    throw Error("transport potentials do not certify the plan: primal " + to_string(plan.cost) +
                ", dual " + to_string(dual));
  }

  // c-transform of the column potentials: f(x) = min_j d(x, j) − v_j. Then
  // f ≥ u on sources and f ≤ −v on targets, so ∫f dp − ∫f dq ≥ dual.
  // A zero cost means p = q, where the zero functional already certifies.
  std::vector<Rational> f(n);
  if (plan.cost != 0) {
    std::vector<Rational> negated(n);
    for (std::size_t j = 0; j < n; ++j) negated[j] = -v[j];
    f = lipschitz_closure(space, negated);
    const Rational shift = f[0];
    for (auto& value : f) value -= shift;
  }
  ShortFunctional potential(space, std::move(f));
  Rational witnessed = integrate(potential, p) - integrate(potential, q);
  if (witnessed != plan.cost) {
    throw Error("dual witness value " + to_string(witnessed) + " differs from primal cost " +
                to_string(plan.cost));
  }

  g_verified_solves.fetch_add(1, std::memory_order_relaxed);
  Rational value = plan.cost;
  return WassersteinResult{std::move(value), std::move(plan), DualWitness{std::move(potential)}};
}

Rational wasserstein_distance(const Measure& p, const Measure& q) {
  return wasserstein(p, q).value;
}

std::uint64_t verified_solve_count() {
  return g_verified_solves.load(std::memory_order_relaxed);
}

Rational wasserstein_oracle(const Measure& p, const Measure& q) {
  require_same_space(p.space(), q.space(), "wasserstein_oracle");
  const auto sources = p.support();
  const auto targets = q.support();
  const std::size_t rows = sources.size();
  const std::size_t cols = targets.size();
  if (rows + cols > kOracleMaxSupport) {
    throw TooLargeError("oracle supports " + std::to_string(kOracleMaxSupport) +
                        " support points at most, got " + std::to_string(rows + cols));
  }
  const std::size_t cells = rows * cols;
  const std::size_t basis_size = rows + cols - 1;

  std::optional<Rational> best;
  std::vector<bool> chosen(cells, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(basis_size), true);
  std::vector<std::size_t> parent(rows + cols);
  auto root = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  // prev_permutation over a sorted-descending bool mask visits every subset.
  do {
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::size_t> edges;
    bool acyclic = true;
    for (std::size_t c = 0; c < cells && acyclic; ++c) {
      if (!chosen[c]) continue;
      std::size_t a = root(c / cols);
      std::size_t b = root(rows + c % cols);
      if (a == b) acyclic = false;
      parent[a] = b;
      edges.push_back(c);
    }
    if (!acyclic) continue;

    // Peel leaves: a leaf node's single edge must carry its whole residual.
    std::vector<Rational> residual(rows + cols);
    for (std::size_t r = 0; r < rows; ++r) residual[r] = p(sources[r]);
    for (std::size_t c = 0; c < cols; ++c) residual[rows + c] = q(targets[c]);
    std::vector<std::size_t> degree(rows + cols, 0);
    for (std::size_t e : edges) {
      ++degree[e / cols];
      ++degree[rows + e % cols];
    }
    std::vector<bool> used(edges.size(), false);
    Rational cost = 0;
    bool feasible = true;
    for (std::size_t step = 0; step < edges.size() && feasible; ++step) {
      bool progressed = false;
      for (std::size_t k = 0; k < edges.size() && !progressed; ++k) {
        if (used[k]) continue;
        std::size_t r = edges[k] / cols;
        std::size_t c = rows + edges[k] % cols;
        std::size_t leaf = degree[r] == 1 ? r : (degree[c] == 1 ? c : rows + cols);
        if (leaf == rows + cols) continue;
        Rational amount = residual[leaf];
        if (amount < 0) {
          feasible = false;
          break;
        }
        residual[r] -= amount;
        residual[c] -= amount;
        --degree[r];
        --degree[c];
        used[k] = true;
        progressed = true;
        cost += amount * p.space().distance(sources[r], targets[c - rows]);
      }
      if (!progressed) feasible = false;
    }
    if (!feasible) continue;
    if (std::any_of(residual.begin(), residual.end(), [](const Rational& x) { return x != 0; })) {
      continue;
    }
    if (!best || cost < *best) best = cost;
  } while (std::prev_permutation(chosen.begin(), chosen.end()));

  if (!best) throw Error("oracle found no basic feasible solution");
  return *best;
}

}  // namespace kantorovich
