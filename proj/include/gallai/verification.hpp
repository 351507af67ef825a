#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gallai/bigint.hpp"
#include "gallai/chromatic.hpp"
#include "gallai/decompose.hpp"
#include "gallai/extract.hpp"
#include "gallai/generate.hpp"
#include "gallai/model.hpp"
#include "gallai/paths.hpp"
#include "gallai/rng.hpp"
#include "gallai/search.hpp"

namespace gallai {

// One machine-readable line per check; a failing line carries the seed that
// reproduces it.
struct CheckResult {
  std::string suite;
  std::string params;
  std::uint64_t seed = 0;
  bool pass = false;
  std::string details;
};

struct SuiteConfig {
  int count = 100;       // seeded trials
  int max_n = 20;        // instance sizes drawn from [1..max_n] (or [2..] where needed)
  int max_r = 4;         // palette sizes drawn from [1..max_r]
  int s = 0;             // fixed subset size; 0 = suite default / all applicable
  std::uint64_t seed0 = 1;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t search_budget = 50'000'000;
  std::vector<int> search_sizes = {1, 2, 3, 4, 5};
  double tolerance = 1e-9;
};

namespace detail {

inline std::string kv(const std::string& key, long long value) {
  return key + "=" + std::to_string(value);
}

inline GeneratorParams params_for(std::uint64_t seed) {
  GeneratorParams p;
  p.seed = seed;
  p.max_depth = 4;
  p.part_count_range = {2, 4};
  return p;
}

inline bool path_valid_in(const ColoredTournament& t, const VertexPath& path,
                          std::string& problem) {
  std::vector<bool> seen(t.vertex_count(), false);
  for (int v : path.vertices) {
    if (v < 0 || v >= t.vertex_count() || seen[v]) {
      problem = "path revisits or escapes the vertex set";
      return false;
    }
    seen[v] = true;
  }
  ColorSet observed;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const int a = path.vertices[i], b = path.vertices[i + 1];
    if (!t.arc(a, b)) {
      problem = "arc " + std::to_string(a) + "->" + std::to_string(b) + " not forward";
      return false;
    }
    observed.insert(t.base().color(a, b));
  }
  if (!(observed == path.colors_used)) {
    problem = "colors_used does not match the edges";
    return false;
  }
  return true;
}

}  // namespace detail

// --- product: the chromatic product bound on random Gallai instances -------

inline std::vector<CheckResult> suite_product(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (int trial = 0; trial < cfg.count; ++trial) {
    const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(trial);
    SplitMix64 meta(seed);
    const int n = 1 + static_cast<int>(meta.below(cfg.max_n));
    const int r = 1 + static_cast<int>(meta.below(cfg.max_r));
    const ColoredCompleteGraph g = random_gallai(n, r, detail::params_for(meta.next()));

    CheckResult res{"product", detail::kv("n", n) + " " + detail::kv("r", r), seed, true, ""};
    for (int s = 1; s <= r; ++s) {
      if (cfg.s != 0 && s != cfg.s) continue;
      const ProductReport report = verify_product(g, s, cfg.node_budget);
      if (!report.holds) {
        res.pass = false;
        res.details = detail::kv("s", s) + " product=" + report.product.str() +
                      " bound=" + report.bound.str();
        break;
      }
    }
    if (res.pass) res.details = "all s hold";
    out.push_back(std::move(res));
  }
  return out;
}

// --- construction-sharpness: the digit instance meets every bound exactly --

inline std::vector<CheckResult> suite_construction_sharpness(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (int m : {2, 3})
    for (int digits : {2, 3}) {
      const ColoredTournament t = digit_construction(m, digits);
      CheckResult res{"construction-sharpness",
                      detail::kv("m", m) + " " + detail::kv("r", digits), 0, true, ""};
      std::string detail_acc;
      for (int s = 1; s <= digits && res.pass; ++s) {
        long long expect = 1;
        for (int i = 0; i < s; ++i) expect *= m;
        const BestSubset bs = best_subset(t.base(), s, cfg.node_budget);
        if (bs.chi != expect) {
          res.pass = false;
          res.details = detail::kv("s", s) + " chi=" + std::to_string(bs.chi) +
                        " expected=" + std::to_string(expect);
          break;
        }
        const int oracle = exact_longest_s_colored_path(t, s);
        if (oracle != expect) {
          res.pass = false;
          res.details = detail::kv("s", s) + " path=" + std::to_string(oracle) +
                        " expected=" + std::to_string(expect);
          break;
        }
        detail_acc += (detail_acc.empty() ? "" : ",") + std::to_string(expect);
      }
      if (res.pass && m == 2 && digits == 3) {
        const ProductReport report = verify_product(t.base(), 2, cfg.node_budget);
        if (!(report.product == report.bound)) {
          res.pass = false;
          res.details = "product " + report.product.str() + " != bound " + report.bound.str();
        }
      }
      if (res.pass) res.details = "chi=path=" + detail_acc;
      out.push_back(std::move(res));
    }
  return out;
}

// --- path: the pipeline's few-colored long paths on random tournaments -----

inline std::vector<CheckResult> suite_path(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  const int s = cfg.s == 0 ? 2 : cfg.s;
  const int r = std::max(cfg.max_r, s);
  for (int trial = 0; trial < cfg.count; ++trial) {
    const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(trial);
    SplitMix64 meta(seed);
    const int n = 1 + static_cast<int>(meta.below(cfg.max_n));
    ColoredCompleteGraph g = random_gallai(n, r, detail::params_for(meta.next()));
    const ColoredTournament t = random_orientation(std::move(g), meta.next());

    CheckResult res{"path", detail::kv("n", n) + " " + detail::kv("r", r) + " " +
                                detail::kv("s", s),
                    seed, true, ""};
    const VertexPath path = s_colored_path(t, s, cfg.node_budget);
    std::string problem;
    if (!detail::path_valid_in(t, path, problem)) {
      res.pass = false;
      res.details = problem;
    } else if (path.colors_used.size() > s) {
      res.pass = false;
      res.details = "path uses " + std::to_string(path.colors_used.size()) + " colors";
    } else if (Natural::pow(path.length(), r) < Natural::pow(n, s)) {
      res.pass = false;
      res.details = "L^r < n^s with L=" + std::to_string(path.length());
    } else {
      res.details = "L=" + std::to_string(path.length());
    }
    out.push_back(std::move(res));
  }
  return out;
}

// --- ghrv: orientation paths at least as long as the chromatic number ------

inline std::vector<CheckResult> suite_ghrv(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (int trial = 0; trial < cfg.count; ++trial) {
    const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(trial);
    SplitMix64 meta(seed);
    const int n = 1 + static_cast<int>(meta.below(cfg.max_n));
    const std::uint64_t density = 200'000 + meta.below(600'001);
    const SimpleGraph g = random_graph(n, density, meta.next());
    const Digraph d = random_digraph(g, meta.next());

    CheckResult res{"ghrv", detail::kv("n", n), seed, true, ""};
    const int chi = chromatic_number(g, cfg.node_budget).k;
    const VertexPath path = ghrv_path(d, chi);

    bool ok = path.length() >= chi;
    for (std::size_t i = 0; ok && i + 1 < path.vertices.size(); ++i)
      ok = d.arc(path.vertices[i], path.vertices[i + 1]);
    if (!ok) {
      res.pass = false;
      res.details = "path invalid or shorter than chi=" + std::to_string(chi);
      out.push_back(std::move(res));
      continue;
    }

    const std::vector<int> level = longest_path_levels(maximal_acyclic_subgraph(d));
    for (int u = 0; u < n && res.pass; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.has_edge(u, v) && level[u] == level[v]) {
          res.pass = false;
          res.details = "level function not proper on edge " + std::to_string(u) + "-" +
                        std::to_string(v);
          break;
        }
    if (res.pass)
      res.details = "chi=" + std::to_string(chi) + " L=" + std::to_string(path.length());
    out.push_back(std::move(res));
  }
  return out;
}

// --- decompose: partition extraction on random Gallai instances ------------

inline std::vector<CheckResult> suite_decompose(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (int trial = 0; trial < cfg.count; ++trial) {
    const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(trial);
    SplitMix64 meta(seed);
    const int n = 2 + static_cast<int>(meta.below(std::max(cfg.max_n - 1, 1)));
    const int r = 1 + static_cast<int>(meta.below(cfg.max_r));
    const ColoredCompleteGraph g = random_gallai(n, r, detail::params_for(meta.next()));

    CheckResult res{"decompose", detail::kv("n", n) + " " + detail::kv("r", r), seed, true,
                    ""};
    const GallaiPartition p = gallai_partition(g);
    if (!is_valid_partition(g, p)) {
      res.pass = false;
      res.details = "partition invariants violated";
    } else {
      res.details = detail::kv("t", static_cast<long long>(p.parts.size())) + " q=" +
                    p.q.str();
    }
    out.push_back(std::move(res));
  }
  return out;
}

// --- planted: substitution then decomposition stays consistent -------------

inline std::vector<CheckResult> suite_planted(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (int trial = 0; trial < cfg.count; ++trial) {
    const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(trial);
    SplitMix64 meta(seed);
    const int r = std::max(2, cfg.max_r);
    const int t_planted = 2 + static_cast<int>(meta.below(3));

    const Color q1 = 1 + static_cast<Color>(meta.below(r));
    Color q2 = 1 + static_cast<Color>(meta.below(r - 1));
    if (q2 >= q1) ++q2;
    ColoredCompleteGraph reduced(t_planted, r);
    for (int i = 0; i < t_planted; ++i)
      for (int j = i + 1; j < t_planted; ++j) reduced.set_color(i, j, meta.coin() ? q1 : q2);

    std::vector<ColoredCompleteGraph> blocks;
    std::vector<int> block_of;
    for (int b = 0; b < t_planted; ++b) {
      const int size = 1 + static_cast<int>(meta.below(4));
      GeneratorParams bp = detail::params_for(meta.next());
      bp.max_depth = 2;
      blocks.push_back(random_gallai(size, r, bp));
      for (int v = 0; v < size; ++v) block_of.push_back(b);
    }
    const ColoredCompleteGraph g = substitute(reduced, blocks);

    CheckResult res{"planted",
                    detail::kv("t", t_planted) + " " + detail::kv("n", g.vertex_count()),
                    seed, true, ""};
    const GallaiPartition p = gallai_partition(g);
    if (!is_valid_partition(g, p)) {
      res.pass = false;
      res.details = "recovered partition invalid";
      out.push_back(std::move(res));
      continue;
    }

    // Either every recovered part refines a planted block, or every cross
    // pair of recovered parts shows exactly the planted reduced colors.
    bool refines = true;
    for (const auto& part : p.parts) {
      for (std::size_t i = 1; i < part.size(); ++i)
        if (block_of[part[i]] != block_of[part[0]]) {
          refines = false;
          break;
        }
      if (!refines) break;
    }
    bool cross_match = true;
    for (std::size_t i = 0; i < p.parts.size() && cross_match; ++i)
      for (std::size_t j = i + 1; j < p.parts.size() && cross_match; ++j) {
        const Color rc = p.reduced.color(static_cast<int>(i), static_cast<int>(j));
        for (int u : p.parts[i]) {
          for (int v : p.parts[j])
            if (block_of[u] != block_of[v] &&
                reduced.color(block_of[u], block_of[v]) != rc) {
              cross_match = false;
              break;
            }
          if (!cross_match) break;
        }
      }
    if (!refines && !cross_match) {
      res.pass = false;
      res.details = "neither refinement nor cross-color consistency held";
    } else {
      res.details = refines ? "parts refine blocks" : "cross colors match";
    }
    out.push_back(std::move(res));
  }
  return out;
}

// --- claim: the partition product inequality over all admissible S ---------

inline std::vector<CheckResult> suite_claim(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (int trial = 0; trial < cfg.count; ++trial) {
    const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(trial);
    SplitMix64 meta(seed);
    const int n = 2 + static_cast<int>(meta.below(std::min(cfg.max_n, 16) - 1));
    const int r = 2 + static_cast<int>(meta.below(std::max(cfg.max_r - 1, 1)));
    const ColoredCompleteGraph g = random_gallai(n, r, detail::params_for(meta.next()));

    CheckResult res{"claim", detail::kv("n", n) + " " + detail::kv("r", r), seed, true, ""};
    const GallaiPartition p = gallai_partition(g);
    if (p.q.size() != 2) {
      res.details = "q singleton, no admissible S";
      out.push_back(std::move(res));
      continue;
    }
    const auto q_members = p.q.members();
    int admissible = 0;
    for (std::uint64_t bits = 1; bits < (1ull << r) && res.pass; ++bits) {
      ColorSet s;
      for (int c = 1; c <= r; ++c)
        if ((bits >> (c - 1)) & 1) s.insert(c);
      if (s.contains(q_members[0]) == s.contains(q_members[1])) continue;
      ++admissible;
      const ClaimReport claim = check_claim(g, p, s, cfg.node_budget);
      if (!claim.holds) {
        res.pass = false;
        res.details = "S=" + s.str() + " lhs=" + std::to_string(claim.lhs) +
                      " rhs=" + std::to_string(claim.rhs);
      }
    }
    if (res.pass) res.details = detail::kv("admissible", admissible) + " all hold";
    out.push_back(std::move(res));
  }
  return out;
}

// --- holder: the generalized inequality on random matrices -----------------

inline std::vector<CheckResult> suite_holder(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (int trial = 0; trial < cfg.count; ++trial) {
    const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(trial);
    SplitMix64 meta(seed);
    const int family = 1 + static_cast<int>(meta.below(5));
    const int m = 1 + static_cast<int>(meta.below(5));
    std::vector<std::vector<double>> rows(family, std::vector<double>(m));
    for (auto& row : rows)
      for (double& a : row) a = static_cast<double>(meta.below(10'000'000)) / 1e6;

    const HolderReport report = holder_check(rows, cfg.tolerance);
    CheckResult res{"holder", detail::kv("F", family) + " " + detail::kv("m", m), seed,
                    report.holds, ""};
    res.details = res.pass ? "lhs >= rhs" : "lhs=" + std::to_string(report.lhs) +
                                                " rhs=" + std::to_string(report.rhs);
    out.push_back(std::move(res));
  }
  return out;
}

// --- blowup: chromatic number preserved under module replacement -----------

inline std::vector<CheckResult> suite_blowup(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (int trial = 0; trial < cfg.count; ++trial) {
    const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(trial);
    SplitMix64 meta(seed);
    const int t = 2 + static_cast<int>(meta.below(3));

    std::vector<std::vector<int>> parts;
    int n = 0;
    for (int i = 0; i < t; ++i) {
      const int size = 1 + static_cast<int>(meta.below(3));
      std::vector<int> part(size);
      std::iota(part.begin(), part.end(), n);
      n += size;
      parts.push_back(std::move(part));
    }

    SimpleGraph g(n);
    for (int i = 0; i < t; ++i)
      for (int u : parts[i])
        for (int v : parts[i])
          if (u < v && meta.coin()) g.add_edge(u, v);
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j)
        if (meta.coin())
          for (int u : parts[i])
            for (int v : parts[j]) g.add_edge(u, v);

    // replacements drawn to match the part's chromatic number; the part's
    // own induced graph is the fallback
    std::vector<SimpleGraph> replacements;
    for (int i = 0; i < t; ++i) {
      SimpleGraph inside(static_cast<int>(parts[i].size()));
      for (std::size_t a = 0; a < parts[i].size(); ++a)
        for (std::size_t b = a + 1; b < parts[i].size(); ++b)
          if (g.has_edge(parts[i][a], parts[i][b]))
            inside.add_edge(static_cast<int>(a), static_cast<int>(b));
      const int target = chromatic_number(inside, cfg.node_budget).k;
      SimpleGraph pick = inside;
      for (int attempt = 0; attempt < 20; ++attempt) {
        const int size = 1 + static_cast<int>(meta.below(3));
        SimpleGraph candidate = random_graph(size, 500'000, meta.next());
        if (chromatic_number(candidate, cfg.node_budget).k == target) {
          pick = candidate;
          break;
        }
      }
      replacements.push_back(std::move(pick));
    }

    const SimpleGraph h = blowup_replace(g, parts, replacements);
    const int chi_g = chromatic_number(g, cfg.node_budget).k;
    const int chi_h = chromatic_number(h, cfg.node_budget).k;
    CheckResult res{"blowup", detail::kv("n", n) + " " + detail::kv("t", t), seed,
                    chi_g == chi_h, ""};
    res.details = "chi(g)=" + std::to_string(chi_g) + " chi(h)=" + std::to_string(chi_h);
    out.push_back(std::move(res));
  }
  return out;
}

// --- monotone: Erdos-Szekeres guarantee, exhaustive over order patterns ----

inline std::vector<CheckResult> suite_monotone(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  const int bound = cfg.max_r >= 1 ? std::min(cfg.max_r, 3) : 3;
  for (int r = 1; r <= bound; ++r)
    for (int s = 1; s <= bound; ++s) {
      const int len = r * s + 1;
      CheckResult res{"monotone", detail::kv("r", r) + " " + detail::kv("s", s), 0, true, ""};
      long long checked = 0;

      auto check_one = [&](const std::vector<int>& seq) {
        ++checked;
        const auto pairs = pigeonhole_pairs(seq);
        std::uint64_t seen[2] = {0, 0};
        for (const auto& [x, y] : pairs) {
          const int code = (x - 1) * len + (y - 1);
          if ((seen[code >> 6] >> (code & 63)) & 1) {
            res.pass = false;
            res.details = "pair table collision";
            return false;
          }
          seen[code >> 6] |= 1ull << (code & 63);
        }
        const MonotoneSubsequence found = monotone_subsequence(seq, r, s);
        const int need = found.increasing ? r + 1 : s + 1;
        if (static_cast<int>(found.indices.size()) < need) {
          res.pass = false;
          res.details = "guarantee missed";
          return false;
        }
        for (std::size_t i = 0; i + 1 < found.indices.size(); ++i) {
          const bool ordered = found.indices[i] < found.indices[i + 1] &&
                               (found.increasing
                                    ? seq[found.indices[i]] <= seq[found.indices[i + 1]]
                                    : seq[found.indices[i]] >= seq[found.indices[i + 1]]);
          if (!ordered) {
            res.pass = false;
            res.details = "returned subsequence not monotone";
            return false;
          }
        }
        return true;
      };

      if (len <= 7) {
        // every sequence over {1..len}^len covers every order pattern with ties
        std::vector<int> seq(len, 1);
        while (true) {
          if (!check_one(seq)) break;
          int pos = len - 1;
          while (pos >= 0 && seq[pos] == len) {
            seq[pos] = 1;
            --pos;
          }
          if (pos < 0) break;
          ++seq[pos];
        }
      } else {
        // strict patterns exhaustively, tied patterns over a 3-value alphabet
        std::vector<int> perm(len);
        std::iota(perm.begin(), perm.end(), 1);
        do {
          if (!check_one(perm)) break;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (res.pass) {
          std::vector<int> seq(len, 1);
          while (true) {
            if (!check_one(seq)) break;
            int pos = len - 1;
            while (pos >= 0 && seq[pos] == 3) {
              seq[pos] = 1;
              --pos;
            }
            if (pos < 0) break;
            ++seq[pos];
          }
        }
      }
      if (res.pass) res.details = detail::kv("patterns", checked) + " all meet the guarantee";
      out.push_back(std::move(res));
    }
  return out;
}

// --- search: exhaustive f values against the two-sided bounds --------------

inline std::vector<CheckResult> suite_search(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  const int r = cfg.max_r == 0 ? 3 : std::max(cfg.max_r, 1);
  const int s = cfg.s == 0 ? std::min(2, r) : cfg.s;
  for (int n : cfg.search_sizes) {
    CheckResult res{"search",
                    detail::kv("n", n) + " " + detail::kv("r", r) + " " + detail::kv("s", s),
                    0, true, ""};
    SearchOptions opts;
    opts.max_colorings = cfg.search_budget;
    const SearchResult result = brute_force_f(n, r, s, opts);

    if (!result.exact) {
      res.pass = false;
      res.details = "budget exhausted, upper bound " + std::to_string(result.f_value);
      out.push_back(std::move(res));
      continue;
    }
    const int floor_value = ceil_root(n, (r + s - 1) / s);
    bool ok = result.f_value >= floor_value;
    std::string why = ok ? "" : "below the pigeonhole floor";

    // the n^(s/r) ceiling applies at perfect r-th powers
    for (int m = 1; ok; ++m) {
      long long power = 1;
      for (int i = 0; i < r; ++i) power *= m;
      if (power > n) break;
      if (power == n) {
        long long cap = 1;
        for (int i = 0; i < s; ++i) cap *= m;
        if (result.f_value > cap) {
          ok = false;
          why = "above the digit-construction ceiling";
        }
        break;
      }
    }

    if (ok && result.witness) {
      const int achieved = exact_longest_s_colored_path(*result.witness, s);
      if (achieved != result.f_value) {
        ok = false;
        why = "witness achieves " + std::to_string(achieved);
      }
    }

    if (ok && n <= 4) {
      SearchOptions unpruned = opts;
      unpruned.canonical = false;
      const SearchResult full = brute_force_f(n, r, s, unpruned);
      if (full.f_value != result.f_value) {
        ok = false;
        why = "canonical pruning disagrees with the full enumeration";
      }
    }

    res.pass = ok;
    res.details = ok ? "f=" + std::to_string(result.f_value) + " examined=" +
                           std::to_string(result.colorings_examined)
                     : why;
    out.push_back(std::move(res));
  }
  return out;
}

// --- roundtrip: canonical serialization is a bijection ---------------------

inline std::vector<CheckResult> suite_roundtrip(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (int trial = 0; trial < cfg.count; ++trial) {
    const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(trial);
    SplitMix64 meta(seed);
    const int n = 1 + static_cast<int>(meta.below(cfg.max_n));
    const int r = 1 + static_cast<int>(meta.below(cfg.max_r));
    const bool tournament = meta.coin();

    const std::uint64_t color_seed = meta.next();
    const Instance original =
        tournament ? Instance{random_orientation(random_coloring(n, r, color_seed),
                                                 meta.next())}
                   : Instance{random_coloring(n, r, color_seed)};

    const std::string text = serialize(original);
    const Instance reparsed = parse_instance(text);
    const bool same = reparsed == original && serialize(reparsed) == text;
    CheckResult res{"roundtrip",
                    detail::kv("n", n) + " " + detail::kv("r", r) +
                        (tournament ? " kind=T" : " kind=G"),
                    seed, same, same ? "identity" : "round trip drifted"};
    out.push_back(std::move(res));
  }
  return out;
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "product", "construction-sharpness", "path",     "ghrv",
      "decompose", "planted",               "claim",    "holder",
      "blowup",    "monotone",              "search",   "roundtrip"};
  return names;
}

inline std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "product") return suite_product(cfg);
  if (name == "construction-sharpness") return suite_construction_sharpness(cfg);
  if (name == "path") return suite_path(cfg);
  if (name == "ghrv") return suite_ghrv(cfg);
  if (name == "decompose") return suite_decompose(cfg);
  if (name == "planted") return suite_planted(cfg);
  if (name == "claim") return suite_claim(cfg);
  if (name == "holder") return suite_holder(cfg);
  if (name == "blowup") return suite_blowup(cfg);
  if (name == "monotone") return suite_monotone(cfg);
  if (name == "search") return suite_search(cfg);
  if (name == "roundtrip") return suite_roundtrip(cfg);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace gallai
