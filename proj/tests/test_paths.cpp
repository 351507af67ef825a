#include <doctest.h>

#include <algorithm>

#include "gallai/generate.hpp"
#include "gallai/model.hpp"
#include "gallai/paths.hpp"
#include "gallai/rng.hpp"
#include "oracles.hpp"

using namespace gallai;

namespace {

ColoredTournament mono_transitive(int n) {
  ColoredCompleteGraph g(n, 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_color(u, v, 1);
  return ColoredTournament(std::move(g));
}

Digraph three_cycle() {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  d.add_arc(2, 0);
  return d;
}

}  // namespace

TEST_CASE("maximal acyclic subgraph: transitive input survives intact") {
  const Digraph d = orientation(mono_transitive(6));
  const Dag dag = maximal_acyclic_subgraph(d);
  CHECK(dag.graph.arcs().size() == d.arcs().size());
}

TEST_CASE("maximal acyclic subgraph: a directed triangle loses exactly one arc") {
  const Dag dag = maximal_acyclic_subgraph(three_cycle());
  CHECK(dag.graph.arcs().size() == 2);
  // lexicographic insertion keeps (0,1) and (1,2), so (2,0) closes the cycle
  CHECK(dag.graph.arc(0, 1));
  CHECK(dag.graph.arc(1, 2));
  CHECK_FALSE(dag.graph.arc(2, 0));
}

TEST_CASE("maximal acyclic subgraph is acyclic and maximal, arc by arc") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SplitMix64 meta(seed);
    const int n = 2 + static_cast<int>(meta.below(9));
    ColoredCompleteGraph shell(n, 1);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) shell.set_color(u, v, 1);
    const ColoredTournament t = random_orientation(std::move(shell), meta.next());
    const Digraph d = orientation(t);
    const Dag dag = maximal_acyclic_subgraph(d);

    CHECK_NOTHROW(detail::topological_order(dag.graph));  // acyclic
    for (const auto& [u, v] : d.arcs()) {
      if (dag.graph.arc(u, v)) continue;
      // re-inserting any omitted arc must close a cycle
      CHECK(detail::reaches(dag.graph, v, u));
    }
  }
}

TEST_CASE("ghrv: any tournament orientation has a Hamiltonian path") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    SplitMix64 meta(seed);
    const int n = 1 + static_cast<int>(meta.below(10));
    ColoredCompleteGraph shell(n, 1);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) shell.set_color(u, v, 1);
    const ColoredTournament t = random_orientation(std::move(shell), meta.next());
    const VertexPath path = ghrv_path(orientation(t), n);
    CHECK(path.length() == n);
  }
}

TEST_CASE("ghrv: edgeless orientation yields a single vertex") {
  const VertexPath path = ghrv_path(Digraph(5), 1);
  CHECK(path.length() == 1);
}

TEST_CASE("ghrv paths reach the chromatic number on random orientations") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    SplitMix64 meta(seed);
    const int n = 1 + static_cast<int>(meta.below(12));
    const SimpleGraph g = random_graph(n, 200'000 + meta.below(600'001), meta.next());
    const Digraph d = random_digraph(g, meta.next());
    const int chi = chromatic_number(g).k;

    const VertexPath path = ghrv_path(d, chi);
    CHECK(path.length() >= chi);
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
      CHECK(d.arc(path.vertices[i], path.vertices[i + 1]));

    // the levels form a proper coloring of the support graph
    const std::vector<int> level = longest_path_levels(maximal_acyclic_subgraph(d));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.has_edge(u, v)) CHECK(level[u] != level[v]);
  }
}

TEST_CASE("s_colored_path: monochromatic transitive tournament") {
  const VertexPath path = s_colored_path(mono_transitive(5), 1);
  CHECK(path.vertices == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(path.colors_used == ColorSet{1});
}

TEST_CASE("s_colored_path on the digit construction") {
  const ColoredTournament t = digit_construction(2, 3);
  const VertexPath path = s_colored_path(t, 2);
  CHECK(path.colors_used.size() <= 2);
  CHECK(path.length() >= 4);  // 4^3 = 64 >= 8^2
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
    CHECK(t.arc(path.vertices[i], path.vertices[i + 1]));
  // the exact oracle can do no better than 2^s here
  CHECK(oracle::brute_longest_s_colored_path(t, 2) == 4);
}

TEST_CASE("s_colored_path rejects rainbow tournaments") {
  ColoredCompleteGraph k3(3, 3);
  k3.set_color(0, 1, 1);
  k3.set_color(0, 2, 2);
  k3.set_color(1, 2, 3);
  CHECK_THROWS_AS(s_colored_path(ColoredTournament(k3), 2), RainbowError);
}

TEST_CASE("s_colored_path satisfies the integer bound on random Gallai tournaments") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    SplitMix64 meta(seed);
    const int n = 1 + static_cast<int>(meta.below(14));
    GeneratorParams params;
    params.seed = meta.next();
    const ColoredTournament t =
        random_orientation(random_gallai(n, 3, params), meta.next());
    const VertexPath path = s_colored_path(t, 2);
    CHECK(path.colors_used.size() <= 2);
    CHECK(Natural::pow(path.length(), 3) >= Natural::pow(n, 2));
    // the pipeline is a lower-bound constructor for the exact oracle
    CHECK(exact_longest_s_colored_path(t, 2) >= path.length());
  }
}

TEST_CASE("path serialization format") {
  VertexPath path{{0, 2, 4}, ColorSet{1, 3}};
  CHECK(path.str() == "PATH n=3 colors={1,3} 0 2 4");
}

TEST_CASE("monotone subsequence: worked examples") {
  const MonotoneSubsequence inc = monotone_subsequence(std::vector<int>{1, 2, 3}, 1, 1);
  CHECK(inc.increasing);
  CHECK(inc.indices.size() >= 2);

  CHECK_THROWS_AS(monotone_subsequence(std::vector<int>{3, 1, 4, 2}, 2, 2),
                  std::invalid_argument);

  const std::vector<int> seq{3, 1, 4, 1, 5};
  // oracle: the longest weakly increasing subsequence has exactly 3 values
  CHECK(oracle::brute_longest_monotone(seq, true) == 3);
  const MonotoneSubsequence found = monotone_subsequence(seq, 2, 2);
  CHECK(found.increasing);
  REQUIRE(found.indices.size() == 3);
  // smallest-index reconstruction picks values 3, 4, 5
  CHECK(found.indices == std::vector<std::size_t>{0, 2, 4});
  for (std::size_t i = 0; i + 1 < found.indices.size(); ++i) {
    CHECK(found.indices[i] < found.indices[i + 1]);
    CHECK(seq[found.indices[i]] <= seq[found.indices[i + 1]]);
  }
}

TEST_CASE("pigeonhole pair table is injective") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    SplitMix64 meta(seed);
    const int len = 2 + static_cast<int>(meta.below(12));
    std::vector<int> seq(len);
    for (int& x : seq) x = static_cast<int>(meta.below(6));
    const auto pairs = pigeonhole_pairs(seq);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j) CHECK(pairs[i] != pairs[j]);
  }
}

TEST_CASE("monotone guarantee on all short patterns with ties") {
  for (int r = 1; r <= 2; ++r)
    for (int s = 1; s <= 2; ++s) {
      const int len = r * s + 1;
      std::vector<int> seq(len, 1);
      while (true) {
        const MonotoneSubsequence found = monotone_subsequence(seq, r, s);
        CHECK(static_cast<int>(found.indices.size()) >= (found.increasing ? r + 1 : s + 1));
        int pos = len - 1;
        while (pos >= 0 && seq[pos] == len) seq[pos--] = 1;
        if (pos < 0) break;
        ++seq[pos];
      }
    }
}

TEST_CASE("exact oracle: monochromatic transitive and digit sharpness") {
  for (int n : {1, 2, 5, 9}) CHECK(exact_longest_s_colored_path(mono_transitive(n), 1) == n);

  const ColoredTournament t = digit_construction(2, 3);
  CHECK(exact_longest_s_colored_path(t, 1) == 2);
  CHECK(exact_longest_s_colored_path(t, 2) == 4);
  CHECK(exact_longest_s_colored_path(t, 3) == 8);
}

TEST_CASE("exact oracle matches full path enumeration on transitive T8") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ColoredTournament t(random_coloring(8, 3, seed));
    CHECK(exact_longest_s_colored_path(t, 2) == oracle::brute_longest_s_colored_path(t, 2));
  }
}

TEST_CASE("exact oracle matches enumeration on non-transitive tournaments") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SplitMix64 meta(seed);
    const ColoredTournament t =
        random_orientation(random_coloring(7, 3, meta.next()), meta.next());
    if (t.transitive()) continue;
    CHECK(exact_longest_s_colored_path(t, 2) == oracle::brute_longest_s_colored_path(t, 2));
  }
}

TEST_CASE("exact oracle refuses large non-transitive instances") {
  SplitMix64 meta(5);
  const ColoredTournament t =
      random_orientation(random_coloring(20, 3, meta.next()), meta.next());
  REQUIRE_FALSE(t.transitive());
  CHECK_THROWS_AS(exact_longest_s_colored_path(t, 2), std::invalid_argument);
  // but transitive instances of the same size are fine
  CHECK(exact_longest_s_colored_path(ColoredTournament(random_coloring(20, 3, 1)), 2) >= 1);
}
