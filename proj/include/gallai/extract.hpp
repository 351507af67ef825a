#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gallai/bigint.hpp"
#include "gallai/chromatic.hpp"
#include "gallai/decompose.hpp"
#include "gallai/model.hpp"

namespace gallai {

// ---------------------------------------------------------------------------
// Product of chromatic numbers over all size-s color subsets, compared with
// n^binom(r-1, s-1). On rainbow-free instances the product is never smaller.

struct SubsetChi {
  ColorSet subset;
  int chi = 0;
};

struct ProductReport {
  int s = 0;
  std::vector<SubsetChi> per_subset;  // lexicographic, binom(r, s) entries
  Natural product;
  Natural bound;  // n^binom(r-1, s-1)
  bool holds = false;

  // One row per subset (bitmask, chi), then a summary row. Big integers in
  // decimal.
  std::string to_csv() const {
    std::string out = "subset,chi\n";
    for (const SubsetChi& e : per_subset)
      out += std::to_string(e.subset.bits()) + "," + std::to_string(e.chi) + "\n";
    out += "summary,product=" + product.str() + ";bound=" + bound.str() +
           ";holds=" + (holds ? "true" : "false") + "\n";
    return out;
  }
};

inline ProductReport verify_product(const ColoredCompleteGraph& g, int s,
                                    std::uint64_t node_budget = kDefaultNodeBudget) {
  const int r = g.palette_size();
  if (s < 1 || s > r) throw std::invalid_argument("subset size must be in [1..r]");
  if (auto rainbow = find_rainbow_triangle(g)) throw RainbowError(*rainbow, "verify_product");

  ProductReport report;
  report.s = s;
  report.product = Natural{1};
  for (const ColorSet& subset : subsets_of_size(r, s)) {
    const int chi = chromatic_number(color_subgraph(g, subset), node_budget).k;
    report.per_subset.push_back({subset, chi});
    report.product *= Natural{static_cast<std::uint64_t>(chi)};
  }
  report.bound = Natural::pow(static_cast<std::uint64_t>(g.vertex_count()),
                              binomial(r - 1, s - 1));
  report.holds = report.bound <= report.product;
  return report;
}

// ---------------------------------------------------------------------------
// The size-s subset maximizing the chromatic number of its subgraph. Ties go
// to the lexicographically least subset. On rainbow-free inputs the result
// satisfies k^r >= n^s exactly (the geometric-mean consequence of the
// product bound).

struct BestSubset {
  ColorSet subset;
  int chi = 0;
  ColoringCertificate certificate;
};

inline BestSubset best_subset(const ColoredCompleteGraph& g, int s,
                              std::uint64_t node_budget = kDefaultNodeBudget) {
  const int r = g.palette_size();
  if (s < 1 || s > r) throw std::invalid_argument("subset size must be in [1..r]");
  if (auto rainbow = find_rainbow_triangle(g)) throw RainbowError(*rainbow, "best_subset");

  BestSubset best;
  for (const ColorSet& subset : subsets_of_size(r, s)) {
    ChromaticResult result = chromatic_number(color_subgraph(g, subset), node_budget);
    if (result.k > best.chi) {  // first in lex order wins ties
      best.subset = subset;
      best.chi = result.k;
      best.certificate = result.coloring;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// The partition inequality: with q = {q1, q2} the partition's color pair,
// q1 in S and q2 not, and S* = S with q1 swapped for q2,
//
//   chi(G_S) * chi(G_S*)  >=  sum over parts i of chi(S, i) * chi(S*, i)
//
// where chi(S, i) is the chromatic number of the S-subgraph induced inside
// part i.

struct ClaimReport {
  Color q_in_s = 0;   // the q color inside S (q1)
  Color q_out_s = 0;  // the other q color (q2)
  ColorSet s_star;
  int chi_s = 0, chi_star = 0;
  std::vector<int> chi_s_parts, chi_star_parts;
  std::uint64_t lhs = 0, rhs = 0;
  bool holds = false;
};

inline ClaimReport check_claim(const ColoredCompleteGraph& g, const GallaiPartition& p,
                               const ColorSet& s,
                               std::uint64_t node_budget = kDefaultNodeBudget) {
  if (!is_valid_partition(g, p))
    throw std::invalid_argument("partition is not a valid Gallai partition of the instance");
  if (p.q.size() != 2)
    throw std::invalid_argument("claim needs a two-color partition pair");
  if (s.empty() || !s.is_subset_of(ColorSet::full(g.palette_size())))
    throw std::invalid_argument("S must be a nonempty subset of the palette");

  const auto q_members = p.q.members();
  Color q1 = 0, q2 = 0;
  if (s.contains(q_members[0]) && !s.contains(q_members[1])) {
    q1 = q_members[0];
    q2 = q_members[1];
  } else if (s.contains(q_members[1]) && !s.contains(q_members[0])) {
    q1 = q_members[1];
    q2 = q_members[0];
  } else {
    throw std::invalid_argument("S must contain exactly one color of the partition pair");
  }

  ClaimReport report;
  report.q_in_s = q1;
  report.q_out_s = q2;
  report.s_star = s;
  report.s_star.erase(q1);
  report.s_star.insert(q2);

  report.chi_s = chromatic_number(color_subgraph(g, s), node_budget).k;
  report.chi_star = chromatic_number(color_subgraph(g, report.s_star), node_budget).k;
  report.lhs = static_cast<std::uint64_t>(report.chi_s) * report.chi_star;

  for (const std::vector<int>& part : p.parts) {
    const ColoredCompleteGraph inside = induce(g, part);
    const int cs = chromatic_number(color_subgraph(inside, s), node_budget).k;
    const int cstar = chromatic_number(color_subgraph(inside, report.s_star), node_budget).k;
    report.chi_s_parts.push_back(cs);
    report.chi_star_parts.push_back(cstar);
    report.rhs += static_cast<std::uint64_t>(cs) * cstar;
  }
  report.holds = report.lhs >= report.rhs;
  return report;
}

// ---------------------------------------------------------------------------
// Generalized Hölder inequality on a non-negative matrix a indexed by a row
// family F and columns [m]:
//
//   prod_{S in F} sum_i a_S(i)  >=  ( sum_i prod_{S in F} a_S(i)^{1/|F|} )^{|F|}

struct HolderReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

inline HolderReport holder_check(const std::vector<std::vector<double>>& rows,
                                 double tolerance = 1e-9) {
  if (rows.empty()) throw std::invalid_argument("row family must be nonempty");
  const std::size_t m = rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != m) throw std::invalid_argument("rows must have equal length");
    for (double a : row)
      if (a < 0.0 || !std::isfinite(a))
        throw std::invalid_argument("entries must be non-negative reals");
  }

  const double family = static_cast<double>(rows.size());
  HolderReport report;
  report.lhs = 1.0;
  for (const auto& row : rows) {
    double sum = 0.0;
    for (double a : row) sum += a;
    report.lhs *= sum;
  }
  double inner = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double term = 1.0;
    for (const auto& row : rows) term *= std::pow(row[i], 1.0 / family);
    inner += term;
  }
  report.rhs = std::pow(inner, family);
  report.holds = report.lhs >= report.rhs - tolerance;
  return report;
}

}  // namespace gallai
