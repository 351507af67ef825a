#pragma once

// Brute-force oracles for the test suites. Deliberately primitive: plain
// enumeration with none of the pruning, ordering or bounding the solvers
// use, so agreement actually means something.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gallai/model.hpp"
#include "gallai/paths.hpp"

namespace oracle {

// Smallest k admitting a proper coloring, by trying every assignment.
inline bool colorable(const gallai::SimpleGraph& g, int k, std::vector<int>& assign, int v) {
  const int n = g.vertex_count();
  if (v == n) return true;
  for (int c = 1; c <= k; ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (g.has_edge(u, v) && assign[u] == c) ok = false;
    if (!ok) continue;
    assign[v] = c;
    if (colorable(g, k, assign, v + 1)) return true;
    assign[v] = 0;
  }
  return false;
}

inline int brute_chromatic(const gallai::SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> assign(n, 0);
    if (colorable(g, k, assign, 0)) return k;
  }
}

// Maximum clique by subset enumeration; n <= 20 or so.
inline int brute_clique(const gallai::SimpleGraph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) vs.push_back(v);
    bool clique = true;
    for (std::size_t i = 0; i < vs.size() && clique; ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!g.has_edge(vs[i], vs[j])) {
          clique = false;
          break;
        }
    if (clique) best = std::max(best, static_cast<int>(vs.size()));
  }
  return best;
}

// Longest directed path with at most s colors, by enumerating every simple
// path; n <= 8 keeps this sane.
inline void extend_path(const gallai::ColoredTournament& t, std::vector<int>& path,
                        std::vector<bool>& used, gallai::ColorSet colors, int s, int& best) {
  best = std::max(best, static_cast<int>(path.size()));
  const int n = t.vertex_count();
  const int tail = path.back();
  for (int next = 0; next < n; ++next) {
    if (used[next] || !t.arc(tail, next)) continue;
    gallai::ColorSet extended = colors;
    extended.insert(t.base().color(tail, next));
    if (extended.size() > s) continue;
    used[next] = true;
    path.push_back(next);
    extend_path(t, path, used, extended, s, best);
    path.pop_back();
    used[next] = false;
  }
}

inline int brute_longest_s_colored_path(const gallai::ColoredTournament& t, int s) {
  const int n = t.vertex_count();
  int best = 0;
  for (int start = 0; start < n; ++start) {
    std::vector<int> path{start};
    std::vector<bool> used(n, false);
    used[start] = true;
    extend_path(t, path, used, gallai::ColorSet{}, s, best);
  }
  return best;
}

// Longest weakly monotone subsequence by enumerating all subsequences.
inline int brute_longest_monotone(const std::vector<int>& seq, bool increasing) {
  const int n = static_cast<int>(seq.size());
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> vals;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) vals.push_back(seq[i]);
    bool mono = true;
    for (std::size_t i = 0; i + 1 < vals.size() && mono; ++i)
      mono = increasing ? vals[i] <= vals[i + 1] : vals[i] >= vals[i + 1];
    if (mono) best = std::max(best, static_cast<int>(vals.size()));
  }
  return best;
}

}  // namespace oracle
