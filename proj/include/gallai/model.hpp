#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gallai {

// Color ids are 1-based; 0 is reserved as the parser's "unset" sentinel.
using Color = int;

// Palettes are capped so a color subset fits in one machine word.
inline constexpr int kMaxPalette = 64;

// ---------------------------------------------------------------------------
// ColorSet: a subset of the palette [1..r].

class ColorSet {
 public:
  ColorSet() = default;

  ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
  }

  static ColorSet full(int r) {
    ColorSet s;
    s.bits_ = (r >= kMaxPalette) ? ~0ull : ((1ull << r) - 1);
    return s;
  }

  void insert(Color c) {
    check(c);
    bits_ |= 1ull << (c - 1);
  }

  void erase(Color c) {
    check(c);
    bits_ &= ~(1ull << (c - 1));
  }

  bool contains(Color c) const {
    return c >= 1 && c <= kMaxPalette && (bits_ >> (c - 1)) & 1;
  }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  Color smallest() const {
    if (empty()) throw std::logic_error("smallest() on empty ColorSet");
    return std::countr_zero(bits_) + 1;
  }

  std::vector<Color> members() const {
    std::vector<Color> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  ColorSet complement_in(int r) const {
    ColorSet s = full(r);
    s.bits_ &= ~bits_;
    return s;
  }

  bool is_subset_of(const ColorSet& other) const { return (bits_ & ~other.bits_) == 0; }

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

  // Order on the ascending member lists; ties between equally good subsets
  // are broken by this order everywhere.
  static bool lex_less(const ColorSet& a, const ColorSet& b) {
    auto ma = a.members(), mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  }

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (Color c : members()) {
      if (!first) out += ",";
      out += std::to_string(c);
      first = false;
    }
    return out + "}";
  }

 private:
  static void check(Color c) {
    if (c < 1 || c > kMaxPalette)
      throw std::invalid_argument("color id out of range: " + std::to_string(c));
  }

  std::uint64_t bits_ = 0;
};

// All size-s subsets of [1..r], lexicographic on the ascending member lists.
inline std::vector<ColorSet> subsets_of_size(int r, int s) {
  if (s < 0 || s > r) return {};
  std::vector<ColorSet> out;
  std::vector<Color> pick(s);
  for (int i = 0; i < s; ++i) pick[i] = i + 1;
  while (true) {
    ColorSet set;
    for (Color c : pick) set.insert(c);
    out.push_back(set);
    if (s == 0) break;
    int i = s - 1;
    while (i >= 0 && pick[i] == r - (s - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// SimpleGraph: undirected, loopless, packed adjacency matrix.

class SimpleGraph {
 public:
  SimpleGraph() = default;

  explicit SimpleGraph(int n) : n_(n), words_((n + 63) / 64), adj_(std::size_t(n) * words_, 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  int vertex_count() const { return n_; }
  int words() const { return words_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop");
    row(u)[v >> 6] |= 1ull << (v & 63);
    row(v)[u >> 6] |= 1ull << (u & 63);
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
    return d;
  }

  long long edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  SimpleGraph complement() const {
    SimpleGraph g(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!has_edge(u, v)) g.add_edge(u, v);
    return g;
  }

  const std::uint64_t* row(int v) const { return adj_.data() + std::size_t(v) * words_; }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::uint64_t* row(int v) { return adj_.data() + std::size_t(v) * words_; }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> adj_;
};

// ---------------------------------------------------------------------------
// ColoredCompleteGraph: every unordered pair carries one color from [1..r].
// Colors live in a flat upper-triangular array; instances stay small enough
// that the dense layout wins over any sparse map.

class ColoredCompleteGraph {
 public:
  ColoredCompleteGraph(int n, int r)
      : n_(n), r_(r), colors_(pair_count_of(n), 0) {
    if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
    if (r < 1 || r > kMaxPalette)
      throw std::invalid_argument("palette size must be in [1..64]");
  }

  int vertex_count() const { return n_; }
  int palette_size() const { return r_; }
  std::size_t pair_count() const { return colors_.size(); }

  static std::size_t pair_count_of(int n) {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
  }

  // Index of unordered pair {u, v} in lexicographic (min, max) order.
  std::size_t pair_index(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::out_of_range("invalid vertex pair");
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(u) * n_ - static_cast<std::size_t>(u) * (u + 1) / 2 +
           (v - u - 1);
  }

  Color color(int u, int v) const { return colors_[pair_index(u, v)]; }

  void set_color(int u, int v, Color c) {
    if (c < 1 || c > r_) throw std::invalid_argument("color out of palette range");
    colors_[pair_index(u, v)] = c;
  }

  // True once every pair has been assigned.
  bool fully_colored() const {
    return std::find(colors_.begin(), colors_.end(), 0) == colors_.end();
  }

  void require_fully_colored() const {
    if (!fully_colored()) throw std::logic_error("instance has unassigned pairs");
  }

  ColorSet colors_present() const {
    ColorSet s;
    for (Color c : colors_) {
      if (c != 0) s.insert(c);
    }
    return s;
  }

  const std::vector<Color>& raw_colors() const { return colors_; }

  friend bool operator==(const ColoredCompleteGraph&, const ColoredCompleteGraph&) = default;

 private:
  int n_;
  int r_;
  std::vector<Color> colors_;
};

// ---------------------------------------------------------------------------
// ColoredTournament: a colored complete graph plus an orientation per pair.
// Constructed transitive (every arc low -> high); call orient() to flip.

class ColoredTournament {
 public:
  explicit ColoredTournament(ColoredCompleteGraph base)
      : base_(std::move(base)), forward_(base_.pair_count(), true) {}

  const ColoredCompleteGraph& base() const { return base_; }
  ColoredCompleteGraph& base() { return base_; }
  int vertex_count() const { return base_.vertex_count(); }

  // True iff the edge {u, v} is oriented u -> v.
  bool arc(int u, int v) const {
    bool fwd = forward_[base_.pair_index(u, v)];
    return (u < v) == fwd;
  }

  void orient(int u, int v) { forward_[base_.pair_index(u, v)] = (u < v); }

  bool transitive() const {
    return std::find(forward_.begin(), forward_.end(), false) == forward_.end();
  }

  friend bool operator==(const ColoredTournament&, const ColoredTournament&) = default;

 private:
  ColoredCompleteGraph base_;
  std::vector<bool> forward_;
};

using Instance = std::variant<ColoredCompleteGraph, ColoredTournament>;

// ---------------------------------------------------------------------------
// Color-restricted subgraph G_S: all n vertices, the edges whose color lies
// in s. Vertices isolated by the restriction stay present.

inline SimpleGraph color_subgraph(const ColoredCompleteGraph& g, const ColorSet& s) {
  if (s.empty()) throw std::invalid_argument("color subset must be nonempty");
  if (!s.is_subset_of(ColorSet::full(g.palette_size())))
    throw std::invalid_argument("color subset exceeds the palette");
  SimpleGraph out(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (s.contains(g.color(u, v))) out.add_edge(u, v);
  return out;
}

// Induced colored subgraph on the given vertices (relabeled 0..k-1 in the
// order supplied); palette unchanged.
inline ColoredCompleteGraph induce(const ColoredCompleteGraph& g,
                                   const std::vector<int>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("induced vertex set must be nonempty");
  ColoredCompleteGraph out(static_cast<int>(vertices.size()), g.palette_size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      out.set_color(static_cast<int>(i), static_cast<int>(j),
                    g.color(vertices[i], vertices[j]));
  return out;
}

// ---------------------------------------------------------------------------
// Instance files.
//
//   line 1:  "n r K"   with K = G (colored complete graph) or T (tournament)
//   then n(n-1)/2 lines "i j c"  (K = G)  or  "i j c d", d in {+,-}  (K = T)
//   with i < j, c in [1..r]; "+" orients i -> j. Lines starting with "#"
//   are comments. Serialization is canonical: edges in lexicographic pair
//   order, LF endings, no comments.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline long parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }

  int n = 0, r = 0;
  bool tournament = false;
  bool header_seen = false;
  std::optional<ColoredCompleteGraph> graph;
  std::vector<bool> forward;
  std::vector<bool> seen;
  int line_no = 0;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    line_no = static_cast<int>(li) + 1;
    std::string line = lines[li];
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto toks = detail::tokens_of(line);
    if (toks.empty()) continue;

    if (!header_seen) {
      if (toks.size() != 3) throw ParseError(line_no, "malformed header, expected 'n r K'");
      long hn = detail::parse_int(toks[0], line_no);
      long hr = detail::parse_int(toks[1], line_no);
      if (hn < 1) throw ParseError(line_no, "vertex count must be at least 1");
      if (hr < 1 || hr > kMaxPalette)
        throw ParseError(line_no, "palette size must be in [1..64]");
      if (toks[2] == "G")
        tournament = false;
      else if (toks[2] == "T")
        tournament = true;
      else
        throw ParseError(line_no, "instance kind must be G or T, got '" + toks[2] + "'");
      n = static_cast<int>(hn);
      r = static_cast<int>(hr);
      graph.emplace(n, r);
      seen.assign(graph->pair_count(), false);
      if (tournament) forward.assign(graph->pair_count(), true);
      header_seen = true;
      continue;
    }

    const std::size_t expected = tournament ? 4 : 3;
    if (toks.size() != expected)
      throw ParseError(line_no, tournament ? "expected 'i j c d'" : "expected 'i j c'");
    long u = detail::parse_int(toks[0], line_no);
    long v = detail::parse_int(toks[1], line_no);
    long c = detail::parse_int(toks[2], line_no);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line_no, "vertex out of range");
    if (u >= v) throw ParseError(line_no, "pair must satisfy i < j");
    if (c < 1 || c > r) throw ParseError(line_no, "color out of range");
    std::size_t idx = graph->pair_index(static_cast<int>(u), static_cast<int>(v));
    if (seen[idx]) throw ParseError(line_no, "pair listed twice");
    seen[idx] = true;
    graph->set_color(static_cast<int>(u), static_cast<int>(v), static_cast<Color>(c));
    if (tournament) {
      if (toks[3] == "+")
        forward[idx] = true;
      else if (toks[3] == "-")
        forward[idx] = false;
      else
        throw ParseError(line_no, "bad direction token '" + toks[3] + "'");
    }
  }

  if (!header_seen) throw ParseError(line_no + 1, "missing header");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!seen[graph->pair_index(u, v)])
        throw ParseError(line_no + 1, "missing pair " + std::to_string(u) + " " +
                                          std::to_string(v));

  if (!tournament) return *graph;
  ColoredTournament t(*graph);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!forward[graph->pair_index(u, v)]) t.orient(v, u);
  return t;
}

inline std::string serialize(const ColoredCompleteGraph& g) {
  g.require_fully_colored();
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.palette_size()) + " G\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      out += std::to_string(u) + " " + std::to_string(v) + " " +
             std::to_string(g.color(u, v)) + "\n";
  return out;
}

inline std::string serialize(const ColoredTournament& t) {
  t.base().require_fully_colored();
  const int n = t.vertex_count();
  std::string out = std::to_string(n) + " " +
                    std::to_string(t.base().palette_size()) + " T\n";
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      out += std::to_string(u) + " " + std::to_string(v) + " " +
             std::to_string(t.base().color(u, v)) + (t.arc(u, v) ? " +" : " -") + "\n";
  return out;
}

inline std::string serialize(const Instance& instance) {
  return std::visit([](const auto& x) { return serialize(x); }, instance);
}

}  // namespace gallai
