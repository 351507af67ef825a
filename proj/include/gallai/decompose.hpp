#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gallai/model.hpp"

namespace gallai {

// ---------------------------------------------------------------------------
// Rainbow triangles. A coloring is Gallai iff it has none.

struct RainbowTriangle {
  int u = 0, v = 0, w = 0;  // u < v < w as discovered
  Color uv = 0, uw = 0, vw = 0;
};

inline std::optional<RainbowTriangle> find_rainbow_triangle(const ColoredCompleteGraph& g) {
  g.require_fully_colored();
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const Color cuv = g.color(u, v);
      for (int w = v + 1; w < n; ++w) {
        const Color cuw = g.color(u, w);
        const Color cvw = g.color(v, w);
        if (cuv != cuw && cuv != cvw && cuw != cvw)
          return RainbowTriangle{u, v, w, cuv, cuw, cvw};
      }
    }
  return std::nullopt;
}

class RainbowError : public std::runtime_error {
 public:
  RainbowError(const RainbowTriangle& t, const std::string& context)
      : std::runtime_error(context + ": rainbow triangle (" + std::to_string(t.u) + "," +
                           std::to_string(t.v) + "," + std::to_string(t.w) + ") with colors " +
                           std::to_string(t.uv) + "," + std::to_string(t.uw) + "," +
                           std::to_string(t.vw)),
        triangle_(t) {}

  const RainbowTriangle& triangle() const { return triangle_; }

 private:
  RainbowTriangle triangle_;
};

// ---------------------------------------------------------------------------
// Gallai partition: parts V_1..V_t (t >= 2), a set q of at most two colors
// covering every cross edge, and the reduced coloring assigning each part
// pair its single cross color.

struct GallaiPartition {
  std::vector<std::vector<int>> parts;  // ascending inside, ordered by smallest vertex
  ColorSet q;                           // |q| is 1 or 2
  ColoredCompleteGraph reduced;         // one vertex per part, same palette
};

// Structural validity of p against g: parts partition the vertex set with
// t >= 2, every cross pair is monochromatic in the color reduced says, and
// all reduced colors lie in q.
inline bool is_valid_partition(const ColoredCompleteGraph& g, const GallaiPartition& p) {
  const int n = g.vertex_count();
  const int t = static_cast<int>(p.parts.size());
  if (t < 2 || p.reduced.vertex_count() != t) return false;
  if (p.q.empty() || p.q.size() > 2) return false;
  std::vector<int> owner(n, -1);
  for (int i = 0; i < t; ++i) {
    if (p.parts[i].empty()) return false;
    for (int v : p.parts[i]) {
      if (v < 0 || v >= n || owner[v] != -1) return false;
      owner[v] = i;
    }
  }
  for (int v = 0; v < n; ++v)
    if (owner[v] == -1) return false;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      const Color c = p.reduced.color(i, j);
      if (!p.q.contains(c)) return false;
      for (int u : p.parts[i])
        for (int v : p.parts[j])
          if (g.color(u, v) != c) return false;
    }
  return true;
}

namespace detail {

// Connected components of the graph on [0..n) whose edges are the pairs of
// g colored outside q. Components come out ordered by smallest vertex.
inline std::vector<std::vector<int>> components_outside(const ColoredCompleteGraph& g,
                                                        const ColorSet& q) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> stack{root}, members;
    comp[root] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int v = 0; v < n; ++v) {
        if (v == u || comp[v] != -1) continue;
        if (!q.contains(g.color(u, v))) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline GallaiPartition partition_from_components(const ColoredCompleteGraph& g,
                                                 const ColorSet& q,
                                                 std::vector<std::vector<int>> parts) {
  const int t = static_cast<int>(parts.size());
  ColoredCompleteGraph reduced(t, g.palette_size());
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      const Color c = g.color(parts[i][0], parts[j][0]);
      // Rainbow-freeness forces each cross pair to be monochromatic; a
      // violation here means the caller slipped a rainbow instance past us.
      for (int u : parts[i])
        for (int v : parts[j])
          if (g.color(u, v) != c)
            throw std::logic_error("cross pair between parts is not monochromatic");
      if (!q.contains(c)) throw std::logic_error("cross color escapes the candidate pair");
      reduced.set_color(i, j, c);
    }
  return GallaiPartition{std::move(parts), q, std::move(reduced)};
}

}  // namespace detail

// Extracts a Gallai partition of a rainbow-free coloring. Candidate color
// pairs q are tried in lexicographic order over the colors present; for
// each q the parts are the connected components of the graph formed by the
// edges colored outside q, and the first q yielding at least two components
// wins. If only one color is present, q is that color alone and the parts
// are the n singletons. Pass forced_q to decompose against a specific q
// instead of searching.
inline GallaiPartition gallai_partition(const ColoredCompleteGraph& g,
                                        std::optional<ColorSet> forced_q = std::nullopt) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("gallai_partition requires at least 2 vertices");
  if (auto rainbow = find_rainbow_triangle(g))
    throw RainbowError(*rainbow, "gallai_partition");

  std::vector<ColorSet> candidates;
  if (forced_q) {
    if (forced_q->empty() || forced_q->size() > 2)
      throw std::invalid_argument("forced q must contain one or two colors");
    candidates.push_back(*forced_q);
  } else {
    const auto present = g.colors_present().members();
    if (present.size() == 1) {
      candidates.push_back(ColorSet{present[0]});
    } else {
      for (std::size_t i = 0; i < present.size(); ++i)
        for (std::size_t j = i + 1; j < present.size(); ++j)
          candidates.push_back(ColorSet{present[i], present[j]});
    }
  }

  for (const ColorSet& q : candidates) {
    auto parts = detail::components_outside(g, q);
    if (parts.size() >= 2) return detail::partition_from_components(g, q, std::move(parts));
  }
  if (forced_q)
    throw std::invalid_argument("forced q does not split the instance");
  // Unreachable for rainbow-free inputs: the structure lemma guarantees some
  // candidate pair separates the vertex set.
  throw std::logic_error("no candidate color pair yields a partition");
}

// Blow-up substitution: replace vertex i of a (at most 2-colored) reduced
// instance by block i; cross edges inherit the reduced color. Vertices of
// block 0 come first, then block 1, and so on. The structure lemma says the
// result is rainbow-free whenever the blocks are.
inline ColoredCompleteGraph substitute(const ColoredCompleteGraph& reduced,
                                       const std::vector<ColoredCompleteGraph>& blocks) {
  const int t = reduced.vertex_count();
  if (t < 2) throw std::invalid_argument("reduced instance needs at least 2 vertices");
  if (static_cast<int>(blocks.size()) != t)
    throw std::invalid_argument("need exactly one block per reduced vertex");
  reduced.require_fully_colored();
  if (reduced.colors_present().size() > 2)
    throw std::invalid_argument("reduced instance uses more than 2 colors");

  int r = reduced.palette_size();
  long long total = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].require_fully_colored();
    if (auto rainbow = find_rainbow_triangle(blocks[i]))
      throw RainbowError(*rainbow, "substitute: block " + std::to_string(i));
    r = std::max(r, blocks[i].palette_size());
    total += blocks[i].vertex_count();
  }

  ColoredCompleteGraph out(static_cast<int>(total), r);
  std::vector<int> offset(blocks.size() + 1, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    offset[i + 1] = offset[i] + blocks[i].vertex_count();

  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int u = 0; u < blocks[b].vertex_count(); ++u)
      for (int v = u + 1; v < blocks[b].vertex_count(); ++v)
        out.set_color(offset[b] + u, offset[b] + v, blocks[b].color(u, v));

  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      const Color c = reduced.color(i, j);
      for (int u = offset[i]; u < offset[i + 1]; ++u)
        for (int v = offset[j]; v < offset[j + 1]; ++v)
          out.set_color(u, v, c);
    }
  return out;
}

}  // namespace gallai
