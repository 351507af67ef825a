#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gallai/decompose.hpp"
#include "gallai/model.hpp"
#include "gallai/paths.hpp"
#include "gallai/rng.hpp"

namespace gallai {

// ---------------------------------------------------------------------------
// Digit construction: vertices 0..m^r-1 written as r-digit base-m numbers
// (left-padded), edge {i, j} colored by the position of the leftmost digit
// in which they differ (1 = most significant), oriented low -> high. The
// tight instance: transitive, rainbow-free, and every s-colored path has
// exactly m^s vertices.

inline ColoredTournament digit_construction(int base, int digits) {
  if (base < 2) throw std::invalid_argument("digit base must be at least 2");
  if (digits < 1) throw std::invalid_argument("digit count must be at least 1");
  long long n = 1;
  for (int i = 0; i < digits; ++i) {
    n *= base;
    if (n > 4096) throw std::invalid_argument("m^r too large; instance would not fit");
  }

  ColoredCompleteGraph g(static_cast<int>(n), digits);
  std::vector<long long> weight(digits);  // weight[k] = m^(digits-1-k)
  weight[digits - 1] = 1;
  for (int k = digits - 2; k >= 0; --k) weight[k] = weight[k + 1] * base;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int pos = 0; pos < digits; ++pos) {
        if ((i / weight[pos]) % base != (j / weight[pos]) % base) {
          g.set_color(i, j, pos + 1);
          break;
        }
      }
    }
  return ColoredTournament(std::move(g));  // default orientation is transitive
}

// ---------------------------------------------------------------------------
// Random Gallai colorings by recursive substitution. Each level splits the
// vertices into t parts, draws a color pair q, colors the reduced complete
// graph on the parts with q, and recurses; at the depth cap parts become
// monochromatic. The structure lemma guarantees the result is rainbow-free,
// whatever the random choices.

struct GeneratorParams {
  std::uint64_t seed = 1;
  int max_depth = 4;
  std::pair<int, int> part_count_range = {2, 5};  // inclusive, clamped to [2, n]
  // How q is drawn per level: a fixed pair, or uniform over color pairs.
  std::optional<std::pair<Color, Color>> forced_pair;

  std::string str() const {
    std::string out = "seed=" + std::to_string(seed) + " depth=" + std::to_string(max_depth) +
                      " parts=" + std::to_string(part_count_range.first) + ":" +
                      std::to_string(part_count_range.second);
    if (forced_pair)
      out += " q=" + std::to_string(forced_pair->first) + "," +
             std::to_string(forced_pair->second);
    else
      out += " q=uniform";
    return out;
  }
};

namespace detail {

inline ColoredCompleteGraph monochromatic(int n, int r, Color c) {
  ColoredCompleteGraph g(n, r);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_color(u, v, c);
  return g;
}

inline ColoredCompleteGraph random_gallai_level(int n, int r, const GeneratorParams& params,
                                                int depth, SplitMix64& rng) {
  if (n == 1) return ColoredCompleteGraph(1, r);
  if (r == 1 || depth > params.max_depth)
    return monochromatic(n, r, 1 + static_cast<Color>(rng.below(r)));

  const int t_lo = std::min(std::max(params.part_count_range.first, 2), n);
  const int t_hi = std::min(std::max(params.part_count_range.second, t_lo), n);
  const int t = rng.range(t_lo, t_hi);

  // one guaranteed vertex per part, the rest multinomial
  std::vector<int> sizes(t, 1);
  for (int extra = 0; extra < n - t; ++extra) ++sizes[rng.below(t)];

  Color q1, q2;
  if (params.forced_pair) {
    q1 = params.forced_pair->first;
    q2 = params.forced_pair->second;
    if (q1 == q2 || q1 < 1 || q2 < 1 || q1 > r || q2 > r)
      throw std::invalid_argument("forced color pair must be two distinct palette colors");
  } else {
    q1 = 1 + static_cast<Color>(rng.below(r));
    q2 = 1 + static_cast<Color>(rng.below(r - 1));
    if (q2 >= q1) ++q2;
  }

  ColoredCompleteGraph reduced(t, r);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) reduced.set_color(i, j, rng.coin() ? q1 : q2);

  std::vector<ColoredCompleteGraph> blocks;
  blocks.reserve(t);
  for (int i = 0; i < t; ++i) {
    SplitMix64 child = rng.fork();
    blocks.push_back(random_gallai_level(sizes[i], r, params, depth + 1, child));
  }
  return substitute(reduced, blocks);
}

}  // namespace detail

inline ColoredCompleteGraph random_gallai(int n, int r, const GeneratorParams& params) {
  if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
  if (params.max_depth < 1) throw std::invalid_argument("depth cap must be at least 1");
  if (params.part_count_range.first > params.part_count_range.second)
    throw std::invalid_argument("empty part count range");
  SplitMix64 rng(params.seed);
  return detail::random_gallai_level(n, r, params, 1, rng);
}

// ---------------------------------------------------------------------------
// The rainbow-destroying move: for a rainbow triangle laid out as arcs
// u -> v, v -> w, u -> w, recolor the long edge {u, w} to the color of
// u -> v. The recolored edge leaves one color class and joins another, so
// the union of those two classes is untouched.

inline ColoredTournament recolor_rainbow(const ColoredTournament& t, int u, int v, int w,
                                         Color target) {
  const ColoredCompleteGraph& g = t.base();
  if (u == v || u == w || v == w) throw std::invalid_argument("vertices must be distinct");
  if (!(t.arc(u, v) && t.arc(v, w) && t.arc(u, w)))
    throw std::invalid_argument("triple is not oriented u->v->w with u->w");
  const Color cuv = g.color(u, v), cvw = g.color(v, w), cuw = g.color(u, w);
  if (cuv == cvw || cuv == cuw || cvw == cuw)
    throw std::invalid_argument("triple is not a rainbow triangle");
  if (target != cuv)
    throw std::invalid_argument("move recolors {u,w} to the color of u->v");

  ColoredTournament out = t;
  out.base().set_color(u, w, target);
  return out;
}

// ---------------------------------------------------------------------------
// Seeded plumbing generators for tests, suites and the CLI.

inline SimpleGraph random_graph(int n, std::uint64_t edge_per_million, std::uint64_t seed) {
  SimpleGraph g(n);
  SplitMix64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(edge_per_million)) g.add_edge(u, v);
  return g;
}

inline ColoredCompleteGraph random_coloring(int n, int r, std::uint64_t seed) {
  ColoredCompleteGraph g(n, r);
  SplitMix64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_color(u, v, 1 + static_cast<Color>(rng.below(r)));
  return g;
}

inline ColoredTournament random_orientation(ColoredCompleteGraph g, std::uint64_t seed) {
  ColoredTournament t(std::move(g));
  SplitMix64 rng(seed);
  const int n = t.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin()) t.orient(v, u);
  return t;
}

inline Digraph random_digraph(const SimpleGraph& g, std::uint64_t seed) {
  Digraph d(g.vertex_count());
  SplitMix64 rng(seed);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (!g.has_edge(u, v)) continue;
      if (rng.coin())
        d.add_arc(u, v);
      else
        d.add_arc(v, u);
    }
  return d;
}

}  // namespace gallai
