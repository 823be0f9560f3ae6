#include "flexdist/lsap.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <queue>

namespace flexdist::lsap {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Matching {
  std::vector<std::size_t> col_of;  // row -> column
  std::vector<std::size_t> row_of;  // column -> row
};

// Shortest augmenting path Hungarian method. Internally 1-based with a
// virtual column 0 as the augmentation root.
Matching hungarian(const CostMatrix& c, std::vector<double>& u_out, std::vector<double>& v_out) {
  const std::size_t n = c.dimension();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<double> minv(n + 1);
  std::vector<char> used(n + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      const auto row = c.row(i0 - 1);
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = row[j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Matching m{std::vector<std::size_t>(n), std::vector<std::size_t>(n)};
  for (std::size_t j = 1; j <= n; ++j) {
    m.col_of[p[j] - 1] = j - 1;
    m.row_of[j - 1] = p[j] - 1;
  }
  u_out.assign(u.begin() + 1, u.end());
  v_out.assign(v.begin() + 1, v.end());
  return m;
}

// Rewrites an optimal matching into the lexicographically smallest perfect
// matching of the equality subgraph (entries whose reduced cost is within
// `tol` of zero). Every such matching is optimal by complementary slackness.
void lexicographic_pass(const CostMatrix& c, const std::vector<double>& u, const std::vector<double>& v,
                        double tol, Matching& m) {
  const std::size_t n = c.dimension();
  auto tight = [&](std::size_t i, std::size_t j) { return c(i, j) - u[i] - v[j] <= tol; };

  std::vector<char> fixed_col(n, 0);
  std::vector<std::size_t> col_parent(n);
  std::vector<char> seen_col(n), seen_row(n);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (fixed_col[j]) continue;
      if (j == m.col_of[i]) break;
      if (!tight(i, j)) continue;

      // Look for an alternating path that frees column col_of[i] once row i
      // takes column j. Rows and columns fixed earlier stay untouched.
      const std::size_t start = m.row_of[j];
      const std::size_t target = m.col_of[i];
      std::fill(seen_col.begin(), seen_col.end(), 0);
      std::fill(seen_row.begin(), seen_row.end(), 0);
      std::queue<std::size_t> rows;
      rows.push(start);
      seen_row[start] = 1;
      bool found = false;
      while (!rows.empty() && !found) {
        const std::size_t a = rows.front();
        rows.pop();
        for (std::size_t col = 0; col < n; ++col) {
          if (fixed_col[col] || seen_col[col] || col == j || col == m.col_of[a] || !tight(a, col)) continue;
          seen_col[col] = 1;
          col_parent[col] = a;
          if (col == target) {
            found = true;
            break;
          }
          const std::size_t b = m.row_of[col];
          if (!seen_row[b]) {
            seen_row[b] = 1;
            rows.push(b);
          }
        }
      }
      if (!found) continue;

      std::size_t col = target;
      for (;;) {
        const std::size_t a = col_parent[col];
        const std::size_t previous = m.col_of[a];
        m.col_of[a] = col;
        m.row_of[col] = a;
        if (a == start) break;
        col = previous;
      }
      m.col_of[i] = j;
      m.row_of[j] = i;
      break;
    }
    fixed_col[m.col_of[i]] = 1;
  }
}

// Equality subgraphs whose perfect matchings may number more than this are
// not walked. 2^16 exceeds 8!, so every problem up to 8x8 is walked in full.
constexpr double kMaxMatchings = 65536.0;
// Safety cap on search nodes, dead ends included.
constexpr std::size_t kMaxNodes = std::size_t{1} << 21;

// Tight edges that lie in some perfect matching. Row a points at row b when
// a has a tight edge to b's matched column; a tight edge (i, j) belongs to a
// perfect matching exactly when it is the matched edge or i and row_of[j]
// share a strongly connected component.
std::vector<std::vector<std::size_t>> admissible_edges(const std::vector<std::vector<std::size_t>>& tight,
                                                       const Matching& m) {
  const std::size_t n = tight.size();
  std::vector<std::size_t> index(n, kNone), low(n), component(n, kNone), stack;
  std::vector<char> on_stack(n, 0);
  std::size_t counter = 0, components = 0;
  auto connect = [&](auto&& self, std::size_t a) -> void {
    index[a] = low[a] = counter++;
    stack.push_back(a);
    on_stack[a] = 1;
    for (std::size_t j : tight[a]) {
      const std::size_t b = m.row_of[j];
      if (b == a) continue;
      if (index[b] == kNone) {
        self(self, b);
        low[a] = std::min(low[a], low[b]);
      } else if (on_stack[b]) {
        low[a] = std::min(low[a], index[b]);
      }
    }
    if (low[a] != index[a]) return;
    std::size_t b;
    do {
      b = stack.back();
      stack.pop_back();
      on_stack[b] = 0;
      component[b] = components;
    } while (b != a);
    ++components;
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (index[a] == kNone) connect(connect, a);
  }

  std::vector<std::vector<std::size_t>> kept(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : tight[i]) {
      if (j == m.col_of[i] || component[m.row_of[j]] == component[i]) kept[i].push_back(j);
    }
  }
  return kept;
}

// The equality subgraph can hold several matchings whose costs agree in exact
// arithmetic but whose floating point totals differ in the last bits. Walks
// its perfect matchings in lexicographic order and keeps the first one with
// the smallest canonical total. Leaves `m` alone when there are too many
// matchings to walk.
void smallest_total(const CostMatrix& c, const std::vector<double>& u, const std::vector<double>& v, double tol,
                    Matching& m) {
  const std::size_t n = c.dimension();
  std::vector<std::vector<std::size_t>> tight(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (c(i, j) - u[i] - v[j] <= tol) tight[i].push_back(j);
    }
  }
  const auto adj = admissible_edges(tight, m);

  // Bregman's bound on the number of perfect matchings.
  double log_bound = 0.0;
  for (const auto& row : adj) {
    const auto d = static_cast<double>(row.size());
    log_bound += std::lgamma(d + 1.0) / d;
  }
  if (log_bound == 0.0 || log_bound > std::log(kMaxMatchings)) return;

  std::vector<double> selected(n);
  auto total_of = [&](const std::vector<std::size_t>& col_of) {
    for (std::size_t i = 0; i < n; ++i) selected[i] = c(i, col_of[i]);
    return canonical_sum(selected);
  };

  std::vector<std::size_t> best, current(n);
  double best_total = std::numeric_limits<double>::infinity();
  std::vector<char> used(n, 0);
  std::size_t nodes = 0;
  bool exhausted = false;
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (exhausted) return;
    if (++nodes > kMaxNodes) {
      exhausted = true;
      return;
    }
    if (i == n) {
      const double t = total_of(current);
      if (t < best_total) best_total = t, best = current;
      return;
    }
    for (std::size_t j : adj[i]) {
      if (used[j]) continue;
      used[j] = 1;
      current[i] = j;
      self(self, i + 1);
      used[j] = 0;
    }
  };
  walk(walk, 0);
  if (exhausted || best.empty()) return;

  m.col_of = best;
  for (std::size_t i = 0; i < n; ++i) m.row_of[best[i]] = i;
}

}  // namespace

Solution solve_with_duals(const CostMatrix& costs) {
  const std::size_t n = costs.dimension();
  std::vector<double> u, v;
  Matching m = hungarian(costs, u, v);

  const auto entries = costs.entries();
  const double scale = std::max(1.0, *std::max_element(entries.begin(), entries.end()));
  const double tol = 8.0 * DBL_EPSILON * scale * static_cast<double>(n);
  lexicographic_pass(costs, u, v, tol, m);
  smallest_total(costs, u, v, tol, m);

  std::vector<double> selected(n);
  for (std::size_t i = 0; i < n; ++i) selected[i] = costs(i, m.col_of[i]);
  Assignment a(std::move(m.col_of), canonical_sum(std::move(selected)));
  return Solution{std::move(a), std::move(u), std::move(v)};
}

Assignment solve(const CostMatrix& costs) { return solve_with_duals(costs).assignment; }

}  // namespace flexdist::lsap
