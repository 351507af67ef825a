#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gallai/extract.hpp"
#include "gallai/model.hpp"

namespace gallai {

// ---------------------------------------------------------------------------
// Directed paths. Length is always vertex-length.

struct VertexPath {
  std::vector<int> vertices;
  ColorSet colors_used;  // empty when the host graph carries no colors

  int length() const { return static_cast<int>(vertices.size()); }

  std::string str() const {
    std::string out = "PATH n=" + std::to_string(length()) + " colors=" + colors_used.str();
    for (int v : vertices) out += " " + std::to_string(v);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Digraph with packed out-neighbor rows.

class Digraph {
 public:
  Digraph() = default;

  explicit Digraph(int n) : n_(n), words_((n + 63) / 64), out_(std::size_t(n) * words_, 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  int vertex_count() const { return n_; }

  bool arc(int u, int v) const {
    check(u);
    check(v);
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1;
  }

  void add_arc(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self-loop");
    mutable_row(u)[v >> 6] |= 1ull << (v & 63);
  }

  // Arcs in lexicographic (tail, head) order.
  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (arc(u, v)) out.emplace_back(u, v);
    return out;
  }

  const std::uint64_t* row(int v) const { return out_.data() + std::size_t(v) * words_; }

 private:
  std::uint64_t* mutable_row(int v) { return out_.data() + std::size_t(v) * words_; }

  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> out_;
};

// Orientation of the edges of t whose color lies in s.
inline Digraph orientation(const ColoredTournament& t, const ColorSet& s) {
  const int n = t.vertex_count();
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!s.contains(t.base().color(u, v))) continue;
      if (t.arc(u, v))
        d.add_arc(u, v);
      else
        d.add_arc(v, u);
    }
  return d;
}

inline Digraph orientation(const ColoredTournament& t) {
  return orientation(t, ColorSet::full(t.base().palette_size()));
}

// ---------------------------------------------------------------------------
// Maximal acyclic subgraph: arcs inserted in lexicographic order, each kept
// unless it closes a cycle. Maximal, not maximum, which is all the GHRV
// argument needs.

struct Dag {
  Digraph graph;
  std::vector<int> topo;  // smallest-index-first topological order
};

namespace detail {

inline bool reaches(const Digraph& d, int from, int to) {
  if (from == to) return true;
  const int n = d.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (!d.arc(u, v) || seen[v]) continue;
      if (v == to) return true;
      seen[v] = true;
      stack.push_back(v);
    }
  }
  return false;
}

inline std::vector<int> topological_order(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> indegree(n, 0), order;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (d.arc(u, v)) ++indegree[v];
  std::vector<bool> placed(n, false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && indegree[v] == 0) {
        pick = v;
        break;
      }
    if (pick == -1) throw std::logic_error("cycle in supposed DAG");
    placed[pick] = true;
    order.push_back(pick);
    for (int v = 0; v < n; ++v)
      if (d.arc(pick, v)) --indegree[v];
  }
  return order;
}

}  // namespace detail

inline Dag maximal_acyclic_subgraph(const Digraph& d) {
  const int n = d.vertex_count();
  Digraph kept(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!d.arc(u, v)) continue;
      // u -> v closes a cycle iff v already reaches u
      if (!detail::reaches(kept, v, u)) kept.add_arc(u, v);
    }
  std::vector<int> topo = detail::topological_order(kept);
  return Dag{std::move(kept), std::move(topo)};
}

// Longest-path-ending-at-v levels, 1-based. Along every arc of the DAG the
// level strictly increases, and for every arc of the host orientation that
// was dropped, the head already reaches the tail, so levels strictly
// decrease; either way the level function is a proper coloring of the
// underlying undirected graph.
inline std::vector<int> longest_path_levels(const Dag& dag) {
  const int n = dag.graph.vertex_count();
  std::vector<int> level(n, 1);
  for (int v : dag.topo)
    for (int w = 0; w < n; ++w)
      if (dag.graph.arc(v, w)) level[w] = std::max(level[w], level[v] + 1);
  return level;
}

// A directed path on at least k vertices in the given orientation, valid for
// any k up to the chromatic number of the underlying graph.
inline VertexPath ghrv_path(const Digraph& d, int k) {
  const Dag dag = maximal_acyclic_subgraph(d);
  const std::vector<int> level = longest_path_levels(dag);
  const int n = d.vertex_count();
  if (n == 0) throw std::invalid_argument("empty digraph has no path");

  int end = 0;
  for (int v = 1; v < n; ++v)
    if (level[v] > level[end]) end = v;
  if (level[end] < k)
    throw std::logic_error("level bound fell short of the requested length; "
                           "was k above the chromatic number?");

  std::vector<int> path{end};
  int cur = end;
  while (level[cur] > 1) {
    int prev = -1;
    for (int u = 0; u < n; ++u)
      if (dag.graph.arc(u, cur) && level[u] == level[cur] - 1) {
        prev = u;
        break;
      }
    if (prev == -1) throw std::logic_error("level function lost its predecessor chain");
    path.push_back(prev);
    cur = prev;
  }
  std::reverse(path.begin(), path.end());
  return VertexPath{std::move(path), ColorSet{}};
}

// ---------------------------------------------------------------------------
// The pipeline: pick the best size-s color subset, then walk a long directed
// path inside it. On rainbow-free tournaments the result satisfies
// L^r >= n^s exactly.

inline VertexPath s_colored_path(const ColoredTournament& t, int s,
                                 std::uint64_t node_budget = kDefaultNodeBudget) {
  const int n = t.vertex_count();
  const int r = t.base().palette_size();
  if (auto rainbow = find_rainbow_triangle(t.base()))
    throw RainbowError(*rainbow, "s_colored_path");

  const BestSubset best = best_subset(t.base(), s, node_budget);
  const Digraph d = orientation(t, best.subset);
  VertexPath path = ghrv_path(d, best.chi);
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
    path.colors_used.insert(t.base().color(path.vertices[i], path.vertices[i + 1]));

  if (Natural::pow(path.length(), r) < Natural::pow(n, s))
    throw std::logic_error("pipeline path shorter than the guaranteed bound");
  return path;
}

// ---------------------------------------------------------------------------
// Erdos-Szekeres. Weak monotonicity on both sides: with x_i and y_i the
// longest weakly increasing / decreasing run lengths ending at i, the pairs
// (x_i, y_i) are pairwise distinct, so a sequence of r*s+1 values forces
// x_i >= r+1 or y_i >= s+1 somewhere.

template <class T>
std::vector<std::pair<int, int>> pigeonhole_pairs(const std::vector<T>& seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<std::pair<int, int>> pairs(n, {1, 1});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      if (seq[j] <= seq[i]) pairs[i].first = std::max(pairs[i].first, pairs[j].first + 1);
      if (seq[j] >= seq[i]) pairs[i].second = std::max(pairs[i].second, pairs[j].second + 1);
    }
  return pairs;
}

struct MonotoneSubsequence {
  bool increasing = false;          // false means the decreasing guarantee fired
  std::vector<std::size_t> indices; // strictly increasing positions
};

template <class T>
MonotoneSubsequence monotone_subsequence(const std::vector<T>& seq, int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("r and s must be positive");
  const long long need = static_cast<long long>(r) * s + 1;
  if (static_cast<long long>(seq.size()) < need)
    throw std::invalid_argument("sequence too short: need at least " + std::to_string(need) +
                                " values");

  const auto pairs = pigeonhole_pairs(seq);
  const int n = static_cast<int>(seq.size());

  auto reconstruct = [&](int end, bool increasing) {
    std::vector<std::size_t> indices{static_cast<std::size_t>(end)};
    int cur = end;
    int want = (increasing ? pairs[cur].first : pairs[cur].second) - 1;
    while (want >= 1) {
      bool advanced = false;
      for (int j = 0; j < cur; ++j) {
        const bool link = increasing ? (seq[j] <= seq[cur] && pairs[j].first == want)
                                     : (seq[j] >= seq[cur] && pairs[j].second == want);
        if (link) {
          indices.push_back(static_cast<std::size_t>(j));
          cur = j;
          --want;
          advanced = true;
          break;
        }
      }
      if (!advanced) throw std::logic_error("monotone reconstruction lost its chain");
    }
    std::reverse(indices.begin(), indices.end());
    return indices;
  };

  for (int i = 0; i < n; ++i)
    if (pairs[i].first >= r + 1) return {true, reconstruct(i, true)};
  for (int i = 0; i < n; ++i)
    if (pairs[i].second >= s + 1) return {false, reconstruct(i, false)};
  throw std::logic_error("pigeonhole failed; distinct pairs exceeded r*s");
}

// ---------------------------------------------------------------------------
// Exact longest directed path whose edges use at most s colors. Transitive
// tournaments get a quadratic index-order scan per color subset; general
// tournaments a subset dynamic program, capped because it is exponential.

inline constexpr int kExactPathDefaultLimit = 18;

namespace detail {

inline int longest_transitive_path(const ColoredTournament& t, const ColorSet& s) {
  const int n = t.vertex_count();
  std::vector<int> len(n, 1);
  int best = 1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i)
      if (s.contains(t.base().color(i, j)) && len[i] + 1 > len[j]) len[j] = len[i] + 1;
    best = std::max(best, len[j]);
  }
  return best;
}

inline int longest_path_bitmask(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<std::uint32_t> out(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (d.arc(u, v)) out[u] |= 1u << v;

  // last[mask] = set of vertices some path visiting exactly mask can end at
  std::vector<std::uint32_t> last(std::size_t(1) << n, 0);
  int best = n > 0 ? 1 : 0;
  for (int v = 0; v < n; ++v) last[1u << v] = 1u << v;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t ends = last[mask];
    if (ends == 0) continue;
    best = std::max(best, std::popcount(mask));
    while (ends != 0) {
      const int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t ext = out[v] & ~mask;
      while (ext != 0) {
        const int w = std::countr_zero(ext);
        ext &= ext - 1;
        last[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return best;
}

}  // namespace detail

inline int exact_longest_s_colored_path(const ColoredTournament& t, int s,
                                        int limit = kExactPathDefaultLimit) {
  const int n = t.vertex_count();
  const int r = t.base().palette_size();
  if (s < 1 || s > r) throw std::invalid_argument("subset size must be in [1..r]");
  if (limit > 22) throw std::invalid_argument("subset DP limit capped at 22 vertices");
  t.base().require_fully_colored();

  const bool transitive = t.transitive();
  if (!transitive && n > limit)
    throw std::invalid_argument("instance too large for the exact oracle and not transitive");

  int best = 0;
  for (const ColorSet& subset : subsets_of_size(r, s)) {
    const int value = transitive ? detail::longest_transitive_path(t, subset)
                                 : detail::longest_path_bitmask(orientation(t, subset));
    best = std::max(best, value);
  }
  return best;
}

}  // namespace gallai
