#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gallai/model.hpp"

namespace gallai {

struct ColoringCertificate {
  int k = 0;
  std::vector<int> assignment;  // vertex -> class in [1..k]
};

struct CliqueCertificate {
  std::vector<int> vertices;  // ascending
  int size() const { return static_cast<int>(vertices.size()); }
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// Raised when a solver runs out of branch nodes. Carries the best proven
// bounds at the point of interruption; never a silent approximation.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& where, int lower, int upper,
                 std::vector<int> best_clique = {})
      : std::runtime_error(where + ": node budget exceeded (bounds " +
                           std::to_string(lower) + ".." + std::to_string(upper) + ")"),
        lower_(lower),
        upper_(upper),
        best_clique_(std::move(best_clique)) {}

  int lower_bound() const { return lower_; }
  int upper_bound() const { return upper_; }
  const std::vector<int>& best_clique() const { return best_clique_; }

 private:
  int lower_;
  int upper_;
  std::vector<int> best_clique_;
};

inline bool is_clique(const SimpleGraph& g, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.has_edge(vertices[i], vertices[j])) return false;
  return true;
}

inline bool is_proper_coloring(const SimpleGraph& g, const ColoringCertificate& c) {
  const int n = g.vertex_count();
  if (static_cast<int>(c.assignment.size()) != n) return false;
  std::vector<bool> used(c.k + 1, false);
  for (int v = 0; v < n; ++v) {
    if (c.assignment[v] < 1 || c.assignment[v] > c.k) return false;
    used[c.assignment[v]] = true;
  }
  for (int cls = 1; cls <= c.k; ++cls)
    if (!used[cls]) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v) && c.assignment[u] == c.assignment[v]) return false;
  return true;
}

namespace detail {

// Greedy clique, largest-degree-first with index ties. Only a seed; the
// branch and bound below does the real work.
inline std::vector<int> greedy_clique(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int da = g.degree(a), db = g.degree(b);
    return da != db ? da > db : a < b;
  });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int u : clique)
      if (!g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

class CliqueSolver {
 public:
  CliqueSolver(const SimpleGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  std::vector<int> run() {
    const int n = g_.vertex_count();
    if (n == 0) return {};
    best_ = greedy_clique(g_);
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    std::vector<int> current;
    expand(current, all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Tomita-style expansion: candidates get a greedy coloring whose class
  // count bounds the clique extension, and are processed from the highest
  // color down so the bound can cut whole suffixes.
  void expand(std::vector<int>& current, const std::vector<int>& candidates) {
    if (++nodes_ > budget_) {
      std::sort(best_.begin(), best_.end());
      throw BudgetExceeded("max_clique", static_cast<int>(best_.size()),
                           g_.vertex_count(), best_);
    }
    if (candidates.empty()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }

    const int m = static_cast<int>(candidates.size());
    std::vector<int> color(m, 0);
    std::vector<char> used(m + 2);
    for (int i = 0; i < m; ++i) {
      std::fill(used.begin(), used.begin() + i + 2, 0);
      for (int j = 0; j < i; ++j)
        if (g_.has_edge(candidates[j], candidates[i])) used[color[j]] = 1;
      int c = 1;
      while (used[c]) ++c;
      color[i] = c;
    }
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return color[a] < color[b]; });

    for (int idx = m - 1; idx >= 0; --idx) {
      const int i = order[idx];
      const int v = candidates[i];
      if (current.size() + color[i] <= best_.size()) return;
      current.push_back(v);
      std::vector<int> next;
      next.reserve(idx);
      for (int jdx = 0; jdx < idx; ++jdx) {
        const int u = candidates[order[jdx]];
        if (g_.has_edge(u, v)) next.push_back(u);
      }
      std::sort(next.begin(), next.end());
      expand(current, next);
      current.pop_back();
    }
  }

  const SimpleGraph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> best_;
};

// DSATUR greedy: selection by saturation, then degree, then index.
inline ColoringCertificate dsatur_coloring(const SimpleGraph& g) {
  const int n = g.vertex_count();
  ColoringCertificate cert;
  cert.assignment.assign(n, 0);
  std::vector<std::uint64_t> neighbor_colors(n, 0);  // bitmask over classes (k <= 64 here)
  std::vector<std::vector<bool>> neighbor_used;      // fallback when k would exceed 64
  int k = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (cert.assignment[v] != 0) continue;
      int sat;
      if (neighbor_used.empty()) {
        sat = std::popcount(neighbor_colors[v]);
      } else {
        sat = 0;
        for (bool b : neighbor_used[v]) sat += b ? 1 : 0;
      }
      const int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    int c = 1;
    if (neighbor_used.empty()) {
      while ((neighbor_colors[best] >> (c - 1)) & 1) ++c;
    } else {
      while (c <= static_cast<int>(neighbor_used[best].size()) && neighbor_used[best][c - 1]) ++c;
    }
    cert.assignment[best] = c;
    k = std::max(k, c);
    if (k >= 63 && neighbor_used.empty()) {
      // migrate masks to vectors; graphs needing >63 greedy classes are rare
      neighbor_used.assign(n, std::vector<bool>(n + 1, false));
      for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
          if (g.has_edge(u, v) && cert.assignment[u] != 0)
            neighbor_used[v][cert.assignment[u] - 1] = true;
    } else if (neighbor_used.empty()) {
      for (int v = 0; v < n; ++v)
        if (g.has_edge(best, v)) neighbor_colors[v] |= 1ull << (c - 1);
    } else {
      for (int v = 0; v < n; ++v)
        if (g.has_edge(best, v)) neighbor_used[v][c - 1] = true;
    }
  }
  cert.k = k;
  return cert;
}

class ChromaticSolver {
 public:
  ChromaticSolver(const SimpleGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  void run(int clique_size) {
    const int n = g_.vertex_count();
    ColoringCertificate greedy = dsatur_coloring(g_);
    best_k_ = greedy.k;
    best_assign_ = greedy.assignment;
    if (best_k_ <= clique_size) return;

    assign_.assign(n, 0);
    degree_.resize(n);
    for (int v = 0; v < n; ++v) degree_[v] = g_.degree(v);
    // Pre-color the clique 1..|Q|: any proper coloring can be permuted to
    // agree with it, so this loses no solutions.
    for (std::size_t i = 0; i < clique_.size(); ++i)
      assign_[clique_[i]] = static_cast<int>(i) + 1;
    lb_ = std::max(clique_size, 1);
    descend(static_cast<int>(clique_.size()), clique_size);
  }

  void set_clique(std::vector<int> clique) { clique_ = std::move(clique); }
  int best_k() const { return best_k_; }
  const std::vector<int>& best_assignment() const { return best_assign_; }

 private:
  void descend(int colored, int max_used) {
    if (max_used >= best_k_) return;
    const int n = g_.vertex_count();
    if (colored == n) {
      best_k_ = max_used;
      best_assign_ = assign_;
      return;
    }

    // DSATUR selection among unassigned vertices.
    int v = -1, best_sat = -1, best_deg = -1;
    for (int u = 0; u < n; ++u) {
      if (assign_[u] != 0) continue;
      std::uint64_t mask = 0;
      int sat = 0;
      if (max_used <= 64) {
        for (int w = 0; w < n; ++w)
          if (assign_[w] != 0 && g_.has_edge(u, w)) mask |= 1ull << ((assign_[w] - 1) & 63);
        sat = std::popcount(mask);
      } else {
        std::vector<bool> seen(max_used + 1, false);
        for (int w = 0; w < n; ++w)
          if (assign_[w] != 0 && g_.has_edge(u, w) && !seen[assign_[w]]) {
            seen[assign_[w]] = true;
            ++sat;
          }
      }
      if (sat > best_sat || (sat == best_sat && degree_[u] > best_deg)) {
        v = u;
        best_sat = sat;
        best_deg = degree_[u];
      }
    }

    std::vector<bool> banned(max_used + 2, false);
    for (int w = 0; w < n; ++w)
      if (assign_[w] != 0 && g_.has_edge(v, w) && assign_[w] <= max_used + 1)
        banned[assign_[w]] = true;

    for (int c = 1; c <= max_used + 1; ++c) {
      if (c >= best_k_) break;  // colors beyond best_k_-1 cannot improve
      if (banned[c]) continue;
      if (++nodes_ > budget_)
        throw BudgetExceeded("chromatic_number", lb_, best_k_, clique_);
      assign_[v] = c;
      descend(colored + 1, std::max(max_used, c));
      assign_[v] = 0;
      if (best_k_ <= lb_) return;  // clique bound met, proven optimal
    }
  }

  const SimpleGraph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> clique_;
  std::vector<int> assign_, best_assign_, degree_;
  int best_k_ = 0;
  int lb_ = 1;
};

}  // namespace detail

// Exact maximum clique. Deterministic; throws BudgetExceeded with the best
// clique found when the node budget runs out.
inline CliqueCertificate max_clique(const SimpleGraph& g,
                                    std::uint64_t node_budget = kDefaultNodeBudget) {
  if (node_budget == 0) throw std::invalid_argument("node budget must be positive");
  detail::CliqueSolver solver(g, node_budget);
  return CliqueCertificate{solver.run()};
}

struct ChromaticResult {
  int k = 0;
  ColoringCertificate coloring;
  CliqueCertificate clique;
};

// Exact chromatic number with a proper-coloring witness and a clique lower
// bound witness. Branch and bound over color classes, seeded by a clique
// (pre-colored, which breaks class symmetry) and a DSATUR upper bound.
// Deterministic: all ties broken by smallest vertex index.
inline ChromaticResult chromatic_number(const SimpleGraph& g,
                                        std::uint64_t node_budget = kDefaultNodeBudget) {
  if (node_budget == 0) throw std::invalid_argument("node budget must be positive");
  const int n = g.vertex_count();
  if (n == 0) return {0, ColoringCertificate{0, {}}, CliqueCertificate{}};

  CliqueCertificate clique;
  try {
    clique = max_clique(g, node_budget);
  } catch (const BudgetExceeded& e) {
    clique.vertices = e.best_clique();  // usable seed even when not optimal
  }

  detail::ChromaticSolver solver(g, node_budget);
  solver.set_clique(clique.vertices);
  solver.run(clique.size());
  return {solver.best_k(), ColoringCertificate{solver.best_k(), solver.best_assignment()},
          clique};
}

// Replace the induced subgraph on each part by the given replacement graph,
// expanding the all-or-nothing cross edges accordingly. Parts must be
// modules: between any two parts either every edge is present or none is.
// When each replacement matches its part's chromatic number (the caller's
// contract), the result has the same chromatic number as g.
inline SimpleGraph blowup_replace(const SimpleGraph& g,
                                  const std::vector<std::vector<int>>& parts,
                                  const std::vector<SimpleGraph>& replacements) {
  const int n = g.vertex_count();
  const int t = static_cast<int>(parts.size());
  if (t == 0) throw std::invalid_argument("partition must be nonempty");
  if (static_cast<int>(replacements.size()) != t)
    throw std::invalid_argument("need exactly one replacement per part");

  std::vector<int> owner(n, -1);
  for (int i = 0; i < t; ++i) {
    if (parts[i].empty()) throw std::invalid_argument("empty part");
    for (int v : parts[i]) {
      if (v < 0 || v >= n || owner[v] != -1)
        throw std::invalid_argument("parts do not partition the vertex set");
      owner[v] = i;
    }
  }
  for (int v = 0; v < n; ++v)
    if (owner[v] == -1) throw std::invalid_argument("parts do not cover the vertex set");

  std::vector<std::vector<bool>> joined(t, std::vector<bool>(t, false));
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      const bool expected = g.has_edge(parts[i][0], parts[j][0]);
      for (int u : parts[i])
        for (int v : parts[j])
          if (g.has_edge(u, v) != expected)
            throw std::invalid_argument("parts are not modules of the graph");
      joined[i][j] = joined[j][i] = expected;
    }

  long long total = 0;
  for (const SimpleGraph& rep : replacements) {
    if (rep.vertex_count() < 1) throw std::invalid_argument("replacement must be nonempty");
    total += rep.vertex_count();
  }

  SimpleGraph out(static_cast<int>(total));
  std::vector<int> offset(t + 1, 0);
  for (int i = 0; i < t; ++i) offset[i + 1] = offset[i] + replacements[i].vertex_count();

  for (int i = 0; i < t; ++i)
    for (int u = 0; u < replacements[i].vertex_count(); ++u)
      for (int v = u + 1; v < replacements[i].vertex_count(); ++v)
        if (replacements[i].has_edge(u, v)) out.add_edge(offset[i] + u, offset[i] + v);

  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      if (!joined[i][j]) continue;
      for (int u = offset[i]; u < offset[i + 1]; ++u)
        for (int v = offset[j]; v < offset[j + 1]; ++v) out.add_edge(u, v);
    }
  return out;
}

}  // namespace gallai
