#include <doctest.h>

#include <string>
#include <variant>

#include "gallai/generate.hpp"
#include "gallai/model.hpp"
#include "gallai/rng.hpp"

using namespace gallai;

TEST_CASE("color sets") {
  ColorSet s{2, 5};
  CHECK(s.size() == 2);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(3));
  CHECK(s.smallest() == 2);
  CHECK(s.str() == "{2,5}");
  CHECK(s.complement_in(5) == ColorSet{1, 3, 4});
  CHECK(ColorSet::full(3) == ColorSet{1, 2, 3});
  CHECK_THROWS_AS(s.insert(0), std::invalid_argument);
  CHECK_THROWS_AS(s.insert(65), std::invalid_argument);

  // lexicographic order on member lists, not on bitmasks
  CHECK(ColorSet::lex_less(ColorSet{1, 4}, ColorSet{2, 3}));
  CHECK_FALSE(ColorSet::lex_less(ColorSet{2, 3}, ColorSet{1, 4}));
}

TEST_CASE("subset enumeration is lexicographic") {
  const auto subsets = subsets_of_size(4, 2);
  REQUIRE(subsets.size() == 6);
  CHECK(subsets[0] == ColorSet{1, 2});
  CHECK(subsets[1] == ColorSet{1, 3});
  CHECK(subsets[2] == ColorSet{1, 4});
  CHECK(subsets[3] == ColorSet{2, 3});
  CHECK(subsets[4] == ColorSet{2, 4});
  CHECK(subsets[5] == ColorSet{3, 4});
  CHECK(subsets_of_size(3, 3).size() == 1);
  CHECK(subsets_of_size(3, 0).size() == 1);
  for (std::size_t i = 0; i + 1 < subsets.size(); ++i)
    CHECK(ColorSet::lex_less(subsets[i], subsets[i + 1]));
}

TEST_CASE("pair indexing covers the upper triangle exactly once") {
  ColoredCompleteGraph g(7, 3);
  std::vector<bool> hit(g.pair_count(), false);
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) {
      const std::size_t idx = g.pair_index(u, v);
      CHECK(idx == g.pair_index(v, u));
      CHECK_FALSE(hit[idx]);
      hit[idx] = true;
    }
  CHECK(std::find(hit.begin(), hit.end(), false) == hit.end());
  CHECK_THROWS_AS(g.pair_index(2, 2), std::out_of_range);
}

TEST_CASE("parse: smallest rainbow tournament") {
  const std::string text = "3 3 T\n0 1 1 +\n0 2 3 +\n1 2 2 +\n";
  const Instance inst = parse_instance(text);
  REQUIRE(std::holds_alternative<ColoredTournament>(inst));
  const auto& t = std::get<ColoredTournament>(inst);
  CHECK(t.vertex_count() == 3);
  CHECK(t.transitive());
  CHECK(t.base().color(0, 1) == 1);
  CHECK(t.base().color(0, 2) == 3);
  CHECK(t.base().color(1, 2) == 2);
  CHECK(t.arc(0, 1));
  CHECK_FALSE(t.arc(1, 0));
}

TEST_CASE("parse: single vertex, header only") {
  const Instance inst = parse_instance("1 1 G\n");
  REQUIRE(std::holds_alternative<ColoredCompleteGraph>(inst));
  CHECK(std::get<ColoredCompleteGraph>(inst).vertex_count() == 1);
}

TEST_CASE("parse: comments and orientations") {
  const std::string text = "# generated\n2 2 T\n# the only edge\n0 1 2 -\n";
  const Instance inst = parse_instance(text);
  const auto& t = std::get<ColoredTournament>(inst);
  CHECK(t.arc(1, 0));
  CHECK_FALSE(t.transitive());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_instance("junk\n"), doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("2 1 G\n0 1 1\n0 1 1\n"),
                       doctest::Contains("line 3"), ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("2 1 G\n0 1 9\n"), doctest::Contains("color"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("2 1 T\n0 1 1 ?\n"), doctest::Contains("direction"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("2 1 G\n"), doctest::Contains("missing pair"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("3 1 G\n0 1 1\n0 2 1\n"),
                       doctest::Contains("missing pair"), ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("2 1 G\n1 0 1\n"), doctest::Contains("i < j"),
                       ParseError);
  CHECK_THROWS_AS(parse_instance("2 1 X\n0 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("2 1 G\n0 1 1 +\n"), ParseError);
}

TEST_CASE("serialize: canonical forms") {
  ColoredCompleteGraph single(1, 1);
  CHECK(serialize(single) == "1 1 G\n");

  ColoredCompleteGraph pair(2, 1);
  pair.set_color(0, 1, 1);
  CHECK(serialize(ColoredTournament(pair)) == "2 1 T\n0 1 1 +\n");
}

TEST_CASE("round trip on the digit construction") {
  const ColoredTournament t = digit_construction(2, 2);
  const std::string text = serialize(t);
  const Instance again = parse_instance(text);
  REQUIRE(std::holds_alternative<ColoredTournament>(again));
  CHECK(std::get<ColoredTournament>(again) == t);
  CHECK(serialize(again) == text);
}

TEST_CASE("round trip property over random instances") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    SplitMix64 meta(seed);
    const int n = 1 + static_cast<int>(meta.below(12));
    const int r = 1 + static_cast<int>(meta.below(5));
    if (meta.coin()) {
      const ColoredTournament t = random_orientation(random_coloring(n, r, meta.next()),
                                                     meta.next());
      const Instance back = parse_instance(serialize(t));
      CHECK(std::get<ColoredTournament>(back) == t);
    } else {
      const ColoredCompleteGraph g = random_coloring(n, r, meta.next());
      const Instance back = parse_instance(serialize(g));
      CHECK(std::get<ColoredCompleteGraph>(back) == g);
    }
  }
}

TEST_CASE("color subgraph basics") {
  // all colors kept -> complete graph
  const ColoredCompleteGraph g = random_coloring(6, 3, 42);
  const SimpleGraph all = color_subgraph(g, ColorSet::full(3));
  CHECK(all.edge_count() == 15);

  // monochromatic K4 restricted to an absent color -> edgeless
  ColoredCompleteGraph mono(4, 2);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) mono.set_color(u, v, 1);
  CHECK(color_subgraph(mono, ColorSet{2}).edge_count() == 0);
  CHECK(color_subgraph(mono, ColorSet{2}).vertex_count() == 4);

  CHECK_THROWS_AS(color_subgraph(mono, ColorSet{}), std::invalid_argument);
  CHECK_THROWS_AS(color_subgraph(mono, ColorSet{3}), std::invalid_argument);
}

TEST_CASE("digit construction color-1 subgraph is the cross-half biclique") {
  const ColoredTournament t = digit_construction(2, 3);
  const SimpleGraph g1 = color_subgraph(t.base(), ColorSet{1});
  int cross = 0;
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v) {
      const bool differs_at_top = (u < 4) != (v < 4);
      CHECK(g1.has_edge(u, v) == differs_at_top);
      if (g1.has_edge(u, v)) ++cross;
    }
  CHECK(cross == 16);
}

TEST_CASE("complementation partitions the edge set") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SplitMix64 meta(seed);
    const int n = 2 + static_cast<int>(meta.below(10));
    const int r = 2 + static_cast<int>(meta.below(4));
    const ColoredCompleteGraph g = random_coloring(n, r, meta.next());
    SplitMix64 pick(meta.next());
    ColorSet s;
    for (int c = 1; c <= r; ++c)
      if (pick.coin()) s.insert(c);
    if (s.empty() || s.size() == r) continue;
    const SimpleGraph inside = color_subgraph(g, s);
    const SimpleGraph outside = color_subgraph(g, s.complement_in(r));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        CHECK(inside.has_edge(u, v) != outside.has_edge(u, v));
  }
}

TEST_CASE("induced colored subgraph") {
  const ColoredCompleteGraph g = random_coloring(8, 3, 7);
  const std::vector<int> vs{1, 4, 6};
  const ColoredCompleteGraph sub = induce(g, vs);
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.palette_size() == 3);
  CHECK(sub.color(0, 1) == g.color(1, 4));
  CHECK(sub.color(0, 2) == g.color(1, 6));
  CHECK(sub.color(1, 2) == g.color(4, 6));
}

TEST_CASE("validation rejects incomplete or out-of-range instances") {
  ColoredCompleteGraph g(3, 2);
  g.set_color(0, 1, 1);
  CHECK_FALSE(g.fully_colored());
  CHECK_THROWS_AS(g.require_fully_colored(), std::logic_error);
  CHECK_THROWS_AS(g.set_color(0, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(g.set_color(0, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(ColoredCompleteGraph(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(ColoredCompleteGraph(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(ColoredCompleteGraph(3, 65), std::invalid_argument);
  CHECK_THROWS_AS(serialize(g), std::logic_error);
}
