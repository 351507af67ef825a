// Command-line front end: instance generation, rainbow checking, Gallai
// decomposition, exact chromatic data, product/best-subset extraction, path
// construction, the rainbow-destroying recoloring move, exhaustive f(n,r,s)
// search, and the verification suites.
//
// Exit codes: 0 success, 1 invariant failure, 2 usage error, 3 budget
// exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gallai/chromatic.hpp"
#include "gallai/decompose.hpp"
#include "gallai/extract.hpp"
#include "gallai/generate.hpp"
#include "gallai/model.hpp"
#include "gallai/paths.hpp"
#include "gallai/search.hpp"
#include "gallai/verification.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

gallai::Instance load_instance(const std::string& path) {
  return gallai::parse_instance(read_file(path));
}

const gallai::ColoredCompleteGraph& base_of(const gallai::Instance& inst) {
  if (std::holds_alternative<gallai::ColoredCompleteGraph>(inst))
    return std::get<gallai::ColoredCompleteGraph>(inst);
  return std::get<gallai::ColoredTournament>(inst).base();
}

gallai::ColorSet parse_color_list(const std::string& text) {
  gallai::ColorSet set;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    set.insert(std::stoi(item));
  }
  return set;
}

json check_to_json(const gallai::CheckResult& c) {
  return json{{"suite", c.suite},
              {"params", c.params},
              {"seed", c.seed},
              {"pass", c.pass},
              {"details", c.details}};
}

struct VerifyFlags {
  std::vector<std::string> suites;
  gallai::SuiteConfig config;
  std::string format = "text";
};

int run_verify(const VerifyFlags& flags) {
  bool all_pass = true;
  for (const std::string& name : flags.suites) {
    const auto results = gallai::run_suite(name, flags.config);
    for (const auto& res : results) {
      all_pass = all_pass && res.pass;
      if (flags.format == "json-lines") {
        std::cout << check_to_json(res).dump() << "\n";
      } else {
        std::cout << (res.pass ? "pass" : "FAIL") << " " << res.suite << " " << res.params
                  << " seed=" << res.seed << " " << res.details << "\n";
      }
    }
  }
  return all_pass ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gallai coloring toolkit: decompositions, exact chromatic numbers, "
               "few-colored long paths"};
  app.require_subcommand(1);

  std::string input, output, format = "text";
  std::uint64_t budget = gallai::kDefaultNodeBudget;

  // --- gen -----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->require_subcommand(1);

  int gen_base = 2, gen_digits = 3;
  std::string gen_out;
  auto* gen_digit = gen->add_subcommand("digit", "the tight base-m digit construction");
  gen_digit->add_option("-m,--base", gen_base, "digit base (>= 2)");
  gen_digit->add_option("-r,--digits", gen_digits, "digit count (>= 1)");
  gen_digit->add_option("-o,--output", gen_out, "output file (default stdout)");

  int rnd_n = 10, rnd_r = 3;
  std::uint64_t rnd_seed = 1;
  int rnd_depth = 4, rnd_parts_lo = 2, rnd_parts_hi = 4;
  std::string rnd_orient = "none", rnd_out;
  auto* gen_random = gen->add_subcommand("random", "seeded random Gallai coloring");
  gen_random->add_option("-n,--vertices", rnd_n, "vertex count");
  gen_random->add_option("-r,--colors", rnd_r, "palette size");
  gen_random->add_option("--seed", rnd_seed, "generator seed");
  gen_random->add_option("--max-depth", rnd_depth, "substitution depth cap");
  gen_random->add_option("--min-parts", rnd_parts_lo, "min parts per level");
  gen_random->add_option("--max-parts", rnd_parts_hi, "max parts per level");
  gen_random->add_option("--orient", rnd_orient,
                         "orientation: none (graph), transitive, random");
  gen_random->add_option("-o,--output", rnd_out, "output file (default stdout)");

  // --- check ---------------------------------------------------------------
  auto* check = app.add_subcommand("check", "report rainbow triangles (Gallai test)");
  check->add_option("-i,--input", input, "instance file")->required();
  check->add_option("--format", format, "text | json-lines");

  // --- decompose -------------------------------------------------------------
  std::string forced_q_text;
  auto* decompose = app.add_subcommand("decompose", "extract a Gallai partition");
  decompose->add_option("-i,--input", input, "instance file")->required();
  decompose->add_option("--q", forced_q_text, "force the color pair, e.g. 1,3");
  decompose->add_option("--format", format, "text | json-lines");

  // --- chi -------------------------------------------------------------------
  std::string chi_colors;
  auto* chi = app.add_subcommand("chi", "exact chromatic number of a color subgraph");
  chi->add_option("-i,--input", input, "instance file")->required();
  chi->add_option("-c,--colors", chi_colors, "color subset, e.g. 1,3 (default: all)");
  chi->add_option("--budget", budget, "branch node budget");
  chi->add_option("--format", format, "text | json-lines");

  // --- extract -----------------------------------------------------------------
  int extract_s = 2;
  auto* extract = app.add_subcommand(
      "extract", "chromatic product report and the best size-s subset");
  extract->add_option("-i,--input", input, "instance file")->required();
  extract->add_option("-s,--subset-size", extract_s, "color subset size")->required();
  extract->add_option("--budget", budget, "branch node budget");
  extract->add_option("--format", format, "text | csv | json-lines");

  // --- path ------------------------------------------------------------------
  int path_s = 2;
  auto* path_cmd = app.add_subcommand("path", "construct a long few-colored directed path");
  path_cmd->add_option("-i,--input", input, "tournament instance file")->required();
  path_cmd->add_option("-s,--subset-size", path_s, "color budget for the path")->required();
  path_cmd->add_option("--budget", budget, "branch node budget");

  // --- recolor -----------------------------------------------------------------
  std::string triple_text;
  std::string recolor_out;
  auto* recolor = app.add_subcommand(
      "recolor", "destroy a rainbow triangle by recoloring its long edge");
  recolor->add_option("-i,--input", input, "tournament instance file")->required();
  recolor->add_option("--triple", triple_text, "u,v,w with arcs u->v, v->w, u->w");
  recolor->add_option("-o,--output", recolor_out, "output file (default stdout)");

  // --- search ------------------------------------------------------------------
  int search_n = 4, search_r = 3, search_s = 2;
  std::uint64_t search_budget = 50'000'000;
  bool no_prune = false;
  std::optional<std::uint64_t> orientation_seed;
  std::uint64_t orientation_seed_value = 0;
  auto* search = app.add_subcommand("search", "exhaustive f(n,r,s) over transitive T_n");
  search->add_option("-n,--vertices", search_n, "vertex count");
  search->add_option("-r,--colors", search_r, "palette size");
  search->add_option("-s,--subset-size", search_s, "path color budget");
  search->add_option("--budget", search_budget, "max colorings examined");
  search->add_flag("--no-prune", no_prune, "disable canonical relabeling pruning");
  auto* oseed = search->add_option("--orientation-seed", orientation_seed_value,
                                   "explore a seeded non-transitive orientation "
                                   "(result is not f)");
  search->add_option("--format", format, "text | json-lines");

  // --- verify ------------------------------------------------------------------
  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", verify_flags.suites,
                     "suite name (repeatable); known: product, construction-sharpness, "
                     "path, ghrv, decompose, planted, claim, holder, blowup, monotone, "
                     "search, roundtrip");
  verify->add_option("--count", verify_flags.config.count, "seeded trials per suite");
  verify->add_option("--max-n", verify_flags.config.max_n, "max instance size");
  verify->add_option("--max-r", verify_flags.config.max_r, "max palette size");
  verify->add_option("-s,--subset-size", verify_flags.config.s, "fixed subset size (0 = all)");
  verify->add_option("--seed0", verify_flags.config.seed0, "first seed");
  verify->add_option("--budget", verify_flags.config.node_budget, "branch node budget");
  verify->add_option("--search-budget", verify_flags.config.search_budget,
                     "coloring budget for the search suite");
  verify->add_option("--search-sizes", verify_flags.config.search_sizes,
                     "n values for the search suite");
  verify->add_option("--tolerance", verify_flags.config.tolerance, "holder tolerance");
  verify->add_option("--format", verify_flags.format, "text | json-lines");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_digit->parsed()) {
      const gallai::ColoredTournament t = gallai::digit_construction(gen_base, gen_digits);
      write_output(gen_out, "# digit construction m=" + std::to_string(gen_base) +
                                " r=" + std::to_string(gen_digits) + "\n" +
                                gallai::serialize(t));
      return kExitOk;
    }

    if (gen_random->parsed()) {
      gallai::GeneratorParams params;
      params.seed = rnd_seed;
      params.max_depth = rnd_depth;
      params.part_count_range = {rnd_parts_lo, rnd_parts_hi};
      gallai::ColoredCompleteGraph g = gallai::random_gallai(rnd_n, rnd_r, params);
      const std::string comment = "# seed=" + std::to_string(rnd_seed) +
                                  " params=" + params.str() + "\n";
      if (rnd_orient == "none") {
        write_output(rnd_out, comment + gallai::serialize(g));
      } else if (rnd_orient == "transitive") {
        write_output(rnd_out, comment + gallai::serialize(gallai::ColoredTournament(g)));
      } else if (rnd_orient == "random") {
        write_output(rnd_out, comment + gallai::serialize(gallai::random_orientation(
                                            std::move(g), rnd_seed ^ 0x5bd1e995u)));
      } else {
        std::cerr << "unknown orientation mode: " << rnd_orient << "\n";
        return kExitUsage;
      }
      return kExitOk;
    }

    if (check->parsed()) {
      const gallai::Instance inst = load_instance(input);
      const gallai::ColoredCompleteGraph& g = base_of(inst);
      if (g.colors_present().size() < g.palette_size())
        std::cerr << "note: palette declares " << g.palette_size() << " colors, only "
                  << g.colors_present().size() << " present\n";
      const auto rainbow = gallai::find_rainbow_triangle(g);
      if (format == "json-lines") {
        json j{{"gallai", !rainbow.has_value()}};
        if (rainbow)
          j["triangle"] = {rainbow->u, rainbow->v, rainbow->w};
        std::cout << j.dump() << "\n";
      } else if (rainbow) {
        std::cout << "rainbow triangle (" << rainbow->u << "," << rainbow->v << ","
                  << rainbow->w << ") colors " << rainbow->uv << "," << rainbow->uw << ","
                  << rainbow->vw << "\n";
      } else {
        std::cout << "gallai: no rainbow triangle\n";
      }
      return rainbow ? kExitInvariant : kExitOk;
    }

    if (decompose->parsed()) {
      const gallai::Instance inst = load_instance(input);
      std::optional<gallai::ColorSet> forced;
      if (!forced_q_text.empty()) forced = parse_color_list(forced_q_text);
      const gallai::GallaiPartition p = gallai::gallai_partition(base_of(inst), forced);
      if (format == "json-lines") {
        json j{{"t", p.parts.size()}, {"q", p.q.members()}, {"parts", p.parts}};
        std::vector<std::vector<int>> reduced;
        for (std::size_t i = 0; i < p.parts.size(); ++i)
          for (std::size_t j2 = i + 1; j2 < p.parts.size(); ++j2)
            reduced.push_back({static_cast<int>(i), static_cast<int>(j2),
                               p.reduced.color(static_cast<int>(i), static_cast<int>(j2))});
        j["reduced"] = reduced;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "t=" << p.parts.size() << " q=" << p.q.str() << "\n";
        for (std::size_t i = 0; i < p.parts.size(); ++i) {
          std::cout << "part " << i << ":";
          for (int v : p.parts[i]) std::cout << " " << v;
          std::cout << "\n";
        }
        for (std::size_t i = 0; i < p.parts.size(); ++i)
          for (std::size_t j2 = i + 1; j2 < p.parts.size(); ++j2)
            std::cout << "reduced " << i << " " << j2 << " "
                      << p.reduced.color(static_cast<int>(i), static_cast<int>(j2)) << "\n";
      }
      return kExitOk;
    }

    if (chi->parsed()) {
      const gallai::Instance inst = load_instance(input);
      const gallai::ColoredCompleteGraph& g = base_of(inst);
      const gallai::ColorSet subset = chi_colors.empty()
                                          ? gallai::ColorSet::full(g.palette_size())
                                          : parse_color_list(chi_colors);
      const gallai::ChromaticResult result =
          gallai::chromatic_number(gallai::color_subgraph(g, subset), budget);
      if (format == "json-lines") {
        json j{{"colors", subset.members()},
               {"chi", result.k},
               {"assignment", result.coloring.assignment},
               {"clique", result.clique.vertices}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "chi" << subset.str() << " = " << result.k << "\n";
        std::cout << "clique:";
        for (int v : result.clique.vertices) std::cout << " " << v;
        std::cout << "\ncoloring:";
        for (int c : result.coloring.assignment) std::cout << " " << c;
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (extract->parsed()) {
      const gallai::Instance inst = load_instance(input);
      const gallai::ColoredCompleteGraph& g = base_of(inst);
      const gallai::ProductReport report = gallai::verify_product(g, extract_s, budget);
      const gallai::BestSubset best = gallai::best_subset(g, extract_s, budget);
      if (format == "csv") {
        std::cout << report.to_csv();
      } else if (format == "json-lines") {
        for (const auto& entry : report.per_subset)
          std::cout << json{{"subset", entry.subset.members()}, {"chi", entry.chi}}.dump()
                    << "\n";
        std::cout << json{{"product", report.product.str()},
                          {"bound", report.bound.str()},
                          {"holds", report.holds},
                          {"best_subset", best.subset.members()},
                          {"best_chi", best.chi}}
                         .dump()
                  << "\n";
      } else {
        for (const auto& entry : report.per_subset)
          std::cout << "chi" << entry.subset.str() << " = " << entry.chi << "\n";
        std::cout << "product = " << report.product.str()
                  << "\nbound   = " << report.bound.str() << "\nholds   = "
                  << (report.holds ? "true" : "false") << "\nbest    = " << best.subset.str()
                  << " with chi = " << best.chi << "\n";
      }
      return report.holds ? kExitOk : kExitInvariant;
    }

    if (path_cmd->parsed()) {
      const gallai::Instance inst = load_instance(input);
      if (!std::holds_alternative<gallai::ColoredTournament>(inst)) {
        std::cerr << "path requires a tournament instance (kind T)\n";
        return kExitUsage;
      }
      const auto& t = std::get<gallai::ColoredTournament>(inst);
      const gallai::VertexPath path = gallai::s_colored_path(t, path_s, budget);
      std::cout << path.str() << "\n";
      return kExitOk;
    }

    if (recolor->parsed()) {
      const gallai::Instance inst = load_instance(input);
      if (!std::holds_alternative<gallai::ColoredTournament>(inst)) {
        std::cerr << "recolor requires a tournament instance (kind T)\n";
        return kExitUsage;
      }
      const auto& t = std::get<gallai::ColoredTournament>(inst);

      int u = -1, v = -1, w = -1;
      if (!triple_text.empty()) {
        std::stringstream in(triple_text);
        std::string item;
        std::vector<int> vals;
        while (std::getline(in, item, ',')) vals.push_back(std::stoi(item));
        if (vals.size() != 3) {
          std::cerr << "--triple expects u,v,w\n";
          return kExitUsage;
        }
        u = vals[0];
        v = vals[1];
        w = vals[2];
      } else {
        // first rainbow triangle, relabeled source/middle/sink; skip cyclic ones
        const int n = t.vertex_count();
        bool found = false;
        for (int a = 0; a < n && !found; ++a)
          for (int b = a + 1; b < n && !found; ++b)
            for (int c = b + 1; c < n && !found; ++c) {
              const gallai::Color ab = t.base().color(a, b), ac = t.base().color(a, c),
                                  bc = t.base().color(b, c);
              if (ab == ac || ab == bc || ac == bc) continue;
              for (int src : {a, b, c})
                for (int mid : {a, b, c}) {
                  if (mid == src) continue;
                  const int snk = a + b + c - src - mid;
                  if (t.arc(src, mid) && t.arc(mid, snk) && t.arc(src, snk)) {
                    u = src;
                    v = mid;
                    w = snk;
                    found = true;
                  }
                }
            }
        if (!found) {
          std::cerr << "no rainbow triangle in the transitive pattern found\n";
          return kExitInvariant;
        }
      }
      const gallai::ColoredTournament out =
          gallai::recolor_rainbow(t, u, v, w, t.base().color(u, v));
      write_output(recolor_out, gallai::serialize(out));
      return kExitOk;
    }

    if (search->parsed()) {
      gallai::SearchOptions opts;
      opts.max_colorings = search_budget;
      opts.canonical = !no_prune;
      if (oseed->count() > 0) opts.orientation_seed = orientation_seed_value;
      const gallai::SearchResult result =
          gallai::brute_force_f(search_n, search_r, search_s, opts);
      if (format == "json-lines") {
        json j{{"n", result.n},
               {"r", result.r},
               {"s", result.s},
               {"f", result.f_value},
               {"exact", result.exact},
               {"transitive", result.transitive},
               {"colorings_examined", result.colorings_examined}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (result.transitive ? "f(" : "exploratory min(") << result.n << ","
                  << result.r << "," << result.s << ") = " << result.f_value
                  << (result.exact ? "" : " (upper bound, budget exhausted)")
                  << "  [examined " << result.colorings_examined << " colorings]\n";
        if (result.witness) std::cout << gallai::serialize(*result.witness);
      }
      return result.exact ? kExitOk : kExitBudget;
    }

    if (verify->parsed()) return run_verify(verify_flags);
  } catch (const gallai::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gallai::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const gallai::RainbowError& e) {
    std::cerr << "rainbow input: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }

  return kExitOk;
}
