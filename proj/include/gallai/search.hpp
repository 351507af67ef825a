#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gallai/generate.hpp"
#include "gallai/model.hpp"
#include "gallai/paths.hpp"

namespace gallai {

// Smallest L >= 1 with L^k >= n; the exact integer form of ceil(n^(1/k)).
inline int ceil_root(long long n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("ceil_root needs positive arguments");
  for (int candidate = 1;; ++candidate) {
    long long power = 1;
    for (int i = 0; i < k && power < n; ++i) power *= candidate;
    if (power >= n) return candidate;
  }
}

struct SearchOptions {
  std::uint64_t max_colorings = 50'000'000;
  bool canonical = true;  // prune color relabelings
  // Search over a fixed seeded non-transitive orientation instead of the
  // transitive tournament. Exploratory: such minima are not values of f.
  std::optional<std::uint64_t> orientation_seed;
};

struct SearchResult {
  int n = 0, r = 0, s = 0;
  int f_value = 0;  // min over colorings of the max <=s-colored path length
  std::optional<ColoredTournament> witness;  // a coloring attaining f_value
  std::uint64_t colorings_examined = 0;
  bool exact = false;       // false when the budget cut the search short
  bool transitive = true;   // false for exploratory orientation runs
};

namespace detail {

// Longest path using only the colors of subset_mask over the transitive
// orientation, straight off the flat color array. Runs once per subset per
// enumerated coloring, so it stays allocation-free.
inline int eval_transitive(const std::vector<Color>& colors, int n,
                           std::uint64_t subset_mask, std::vector<int>& len) {
  int best = 1;
  for (int j = 0; j < n; ++j) len[j] = 1;
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx)
      if (((subset_mask >> (colors[idx] - 1)) & 1) && len[i] + 1 > len[j]) {
        len[j] = len[i] + 1;
        if (len[j] > best) best = len[j];
      }
  return best;
}

// Depth-first enumeration of colorings of `edges` slots with colors [1..r].
// Canonical mode admits only colorings whose first occurrences along the
// slot order read 1, 2, 3, ...: exactly one representative per relabeling
// class. Leaf returns false to stop the whole walk.
template <class Leaf>
bool enumerate_colorings(std::size_t depth, int used, int r, bool canonical,
                         std::vector<Color>& colors, Leaf&& leaf) {
  if (depth == colors.size()) return leaf();
  const int cap = canonical ? std::min(r, used + 1) : r;
  for (int c = 1; c <= cap; ++c) {
    colors[depth] = c;
    if (!enumerate_colorings(depth + 1, std::max(used, c), r, canonical, colors, leaf))
      return false;
  }
  return true;
}

}  // namespace detail

// Exhaustive minimum, over r-colorings of the n-vertex transitive tournament,
// of the longest directed path using at most s colors. Stops early once the
// minimum reaches the ceil(n^(1/ceil(r/s))) floor, which no coloring beats.
// Deterministic; the witness is the first enumerated coloring attaining the
// final minimum.
inline SearchResult brute_force_f(int n, int r, int s, const SearchOptions& opts = {}) {
  if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
  if (r < 1 || r > kMaxPalette) throw std::invalid_argument("palette size out of range");
  if (s < 1 || s > r) throw std::invalid_argument("subset size must be in [1..r]");
  if (opts.max_colorings == 0) throw std::invalid_argument("budget must be positive");
  if (opts.orientation_seed && n > 18)
    throw std::invalid_argument("non-transitive exploration capped at 18 vertices");

  const std::size_t edges = ColoredCompleteGraph::pair_count_of(n);
  const auto subsets = subsets_of_size(r, s);
  const int floor_value = ceil_root(n, (r + s - 1) / s);

  std::optional<ColoredTournament> oriented_shell;
  if (opts.orientation_seed) {
    ColoredCompleteGraph shell(n, r);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) shell.set_color(u, v, 1);
    oriented_shell = random_orientation(std::move(shell), *opts.orientation_seed);
  }

  std::vector<Color> colors(edges, 0);
  std::vector<int> scratch(n);
  int best = n + 1;
  std::vector<Color> best_colors;
  std::uint64_t examined = 0;
  bool exhausted;

  auto rebuild = [&](const std::vector<Color>& edge_colors) {
    ColoredCompleteGraph base(n, r);
    std::size_t idx = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++idx) base.set_color(u, v, edge_colors[idx]);
    if (!oriented_shell) return ColoredTournament(std::move(base));
    ColoredTournament t = *oriented_shell;
    t.base() = std::move(base);
    return t;
  };

  auto leaf = [&]() {
    ++examined;
    int value = 0;
    if (!oriented_shell) {
      for (const ColorSet& subset : subsets) {
        value = std::max(value, detail::eval_transitive(colors, n, subset.bits(), scratch));
        if (value >= best) break;  // cannot lower the running minimum
      }
    } else {
      value = exact_longest_s_colored_path(rebuild(colors), s);
    }
    if (value < best) {
      best = value;
      best_colors = colors;
      if (best <= floor_value) return false;  // proven minimum
    }
    return examined < opts.max_colorings;
  };

  exhausted = detail::enumerate_colorings(0, 0, r, opts.canonical, colors, leaf);
  // an early stop at the floor is still an exact answer
  if (!exhausted && best <= floor_value) exhausted = true;

  SearchResult result;
  result.n = n;
  result.r = r;
  result.s = s;
  result.f_value = best;
  result.colorings_examined = examined;
  result.exact = exhausted;
  result.transitive = !opts.orientation_seed.has_value();
  result.witness = rebuild(best_colors.empty() ? colors : best_colors);
  return result;
}

}  // namespace gallai
