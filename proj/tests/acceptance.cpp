// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All thresholds are exact integer equalities or the wall
// clock limits stated next to each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "wirecube/cube.hpp"
#include "wirecube/embedding.hpp"
#include "wirecube/host.hpp"
#include "wirecube/parallel.hpp"
#include "wirecube/rng.hpp"
#include "wirecube/search.hpp"
#include "wirecube/wirelength.hpp"

using namespace wirecube;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------

Verdict torus_closed_form() {
  Verdict v;
  const auto start = Clock::now();
  const HostSpec spec = parse_host("C4xC4");
  const auto formula = formula_wl(spec).total;
  const Embedding gray = gray_embedding(spec);
  const auto direct = wl_direct(gray).total;
  const auto cut = wl_cut(gray).total;
  v.require(formula == 32, "formula " + std::to_string(formula));
  v.require(direct == 32, "direct " + std::to_string(direct));
  v.require(cut == 32, "cut sum " + std::to_string(cut));
  v.require(seconds_since(start) < 1.0, "slower than 1 s");
  v.detail = v.passed ? "formula = direct = cut = 32" : v.detail;
  return v;
}

Verdict single_factor_brute_force() {
  Verdict v;
  SearchBudget budget;
  budget.method = SearchMethod::Brute;
  budget.prune_origin = false;  // all 8! embeddings
  std::string summary;
  for (const auto& [text, expected] : {std::pair{"C8", 20ULL}, std::pair{"P8", 28ULL}}) {
    const auto start = Clock::now();
    const HostSpec spec = parse_host(text);
    const SearchResult r = brute_force_min(spec, budget);
    const double elapsed = seconds_since(start);
    v.require(r.evaluations == 40320, std::string(text) + " evaluated " + std::to_string(r.evaluations));
    v.require(r.best_wirelength == expected, std::string(text) + " minimum " + std::to_string(r.best_wirelength));
    v.require(formula_term(spec, 0) == expected, std::string(text) + " closed-form term differs");
    v.require(wl_direct(gray_embedding(spec)).total == r.best_wirelength, std::string(text) + " Gray misses minimum");
    v.require(elapsed < 60.0, std::string(text) + " slower than 1 min");
    summary += std::string(text) + " min " + std::to_string(r.best_wirelength) + " ";
  }
  if (v.passed) v.detail = summary + "(40320 embeddings each, Gray attains both)";
  return v;
}

std::vector<HostSpec> engine_hosts() {
  std::vector<HostSpec> hosts;
  for (int e = 1; e <= 10; ++e) {
    hosts.emplace_back(std::vector<HostFactor>{{FactorKind::Path, e}});
    if (e >= 2) hosts.emplace_back(std::vector<HostFactor>{{FactorKind::Cycle, e}});
  }
  for (int a = 2; a <= 4; ++a) {
    for (int b = 2; b <= 4; ++b) {
      for (auto ka : {FactorKind::Cycle, FactorKind::Path}) {
        for (auto kb : {FactorKind::Cycle, FactorKind::Path}) {
          hosts.emplace_back(std::vector<HostFactor>{{ka, a}, {kb, b}});
        }
      }
    }
  }
  return hosts;
}

Verdict engine_equivalence() {
  Verdict v;
  const auto hosts = engine_hosts();
  std::vector<std::string> failures(hosts.size());
  parallel_for(hosts.size(), [&](std::size_t h) {
    for (std::uint64_t s = 0; s < 1000; ++s) {
      const Embedding e = random_embedding(hosts[h], mix_seed(2024, h * 1000 + s));
      if (wl_cut(e).total != wl_direct(e).total) {
        failures[h] = hosts[h].to_string() + " sample " + std::to_string(s);
        return;
      }
    }
  });
  for (const auto& f : failures) v.require(f.empty(), "engines disagree on " + f);
  if (v.passed) v.detail = std::to_string(hosts.size()) + " hosts x 1000 random embeddings agree";
  return v;
}

Verdict gray_formula_sweep() {
  Verdict v;
  const auto start = Clock::now();
  const auto hosts = enumerate_hosts(12, 3, 2);
  std::vector<std::string> failures(hosts.size());
  parallel_for(hosts.size(), [&](std::size_t h) {
    const HostSpec& spec = hosts[h];
    const FormulaResult formula = formula_wl(spec);
    const Embedding gray = gray_embedding(spec);
    const auto direct = wl_direct(gray).total;
    const auto cut = wl_cut(gray).total;
    if (direct != formula.total || cut != formula.total) {
      failures[h] = spec.to_string() + " Gray " + std::to_string(direct) + "/" + std::to_string(cut) +
                    " vs formula " + std::to_string(formula.total);
      return;
    }
    for (const auto& term : formula.terms) {
      if (gray_cut_sum(spec, term.factor) != term.value || factor_cut_sum(gray, term.factor) != term.value) {
        failures[h] = spec.to_string() + " factor " + std::to_string(term.factor + 1) + " subtotal mismatch";
        return;
      }
    }
  });
  for (const auto& f : failures) v.require(f.empty(), f);
  const double elapsed = seconds_since(start);
  v.require(elapsed < 300.0, "slower than 5 min");
  if (v.passed) v.detail = std::to_string(hosts.size()) + " hosts, totals and per-factor terms exact";
  return v;
}

Verdict lower_bound_sampling() {
  Verdict v;
  const auto hosts = enumerate_hosts(10, 3, 2);
  std::vector<std::string> failures(hosts.size());
  std::vector<std::uint64_t> anneal_runs(hosts.size(), 0);
  parallel_for(hosts.size(), [&](std::size_t h) {
    const HostSpec& spec = hosts[h];
    const auto formula = formula_wl(spec).total;
    std::vector<std::uint64_t> floor(spec.k());
    for (std::size_t i = 0; i < spec.k(); ++i) floor[i] = gray_cut_sum(spec, i);

    for (std::uint64_t s = 0; s < 1000; ++s) {
      const Embedding e = random_embedding(spec, mix_seed(77, h * 1000 + s));
      const auto report = wl_cut(e);
      std::vector<std::uint64_t> sums(spec.k(), 0);
      for (const auto& [cut, t] : report.per_cut) sums[cut.factor] += t;
      for (std::size_t i = 0; i < spec.k(); ++i) {
        if (sums[i] < floor[i]) {
          failures[h] = spec.to_string() + " sample " + std::to_string(s) + " factor " + std::to_string(i + 1) +
                        " below Gray";
          return;
        }
      }
      if (report.total < formula) {
        failures[h] = spec.to_string() + " sample " + std::to_string(s) + " below formula";
        return;
      }
    }

    SearchBudget budget;  // 20 restarts x 1e5 iterations
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      budget.seed = seed;
      const SearchResult r = anneal_search(spec, budget);
      ++anneal_runs[h];
      if (r.best_wirelength < formula) {
        failures[h] = spec.to_string() + " annealing seed " + std::to_string(seed) + " found " +
                      std::to_string(r.best_wirelength) + " < " + std::to_string(formula);
        return;
      }
    }
  });
  for (const auto& f : failures) v.require(f.empty(), f);
  const auto runs = std::accumulate(anneal_runs.begin(), anneal_runs.end(), std::uint64_t{0});
  if (v.passed) {
    v.detail = std::to_string(hosts.size()) + " hosts, 1000 samples each, " + std::to_string(runs) +
               " annealing runs, none below formula";
  }
  return v;
}

Verdict block_swap_property() {
  Verdict v;
  std::uint64_t cases = 0;
  // all 16 x 16 subset pairs of Q2
  for (std::uint32_t a = 0; a < 16; ++a) {
    for (std::uint32_t b = 0; b < 16; ++b) {
      VertexSubset s1(2), s2(2);
      for (Vertex x = 0; x < 4; ++x) {
        if ((a >> x) & 1U) s1.insert(x);
        if ((b >> x) & 1U) s2.insert(x);
      }
      ++cases;
      v.require(theta(block_product(s1, s2)) == theta(block_product(s2, s1)), "Q2 pair mismatch");
    }
  }
  // all 65536 subsets of Q4 with their two 2-bit coordinate blocks exchanged
  const std::vector<int> swap_blocks{2, 3, 0, 1};
  for (std::uint32_t bits = 0; bits < 65536; ++bits) {
    VertexSubset s(4);
    for (Vertex x = 0; x < 16; ++x) {
      if ((bits >> x) & 1U) s.insert(x);
    }
    ++cases;
    v.require(theta(s) == theta(permute_coordinates(s, swap_blocks)), "Q4 block swap mismatch");
  }
  // random pairs with n1 + n2 = 10
  Rng rng(6);
  for (int t = 0; t < 10000; ++t) {
    const int n1 = 1 + static_cast<int>(rng.below(9));
    const int n2 = 10 - n1;
    VertexSubset s1(n1), s2(n2);
    for (Vertex x = 0; x < (Vertex{1} << n1); ++x) {
      if (rng.below(2)) s1.insert(x);
    }
    for (Vertex x = 0; x < (Vertex{1} << n2); ++x) {
      if (rng.below(2)) s2.insert(x);
    }
    ++cases;
    v.require(theta(block_product(s1, s2)) == theta(block_product(s2, s1)), "random pair mismatch");
  }
  if (v.passed) v.detail = std::to_string(cases) + " cases exact";
  return v;
}

Verdict cut_distance_identity() {
  Verdict v;
  const auto hosts = enumerate_hosts(8, 8, 1);
  std::vector<std::string> failures(hosts.size());
  std::vector<std::uint64_t> pairs(hosts.size(), 0);
  parallel_for(hosts.size(), [&](std::size_t h) {
    const HostSpec& spec = hosts[h];
    std::vector<Coordinate> coords(spec.vertex_count());
    for (FlatIndex x = 0; x < spec.vertex_count(); ++x) coords[x] = unflatten(spec, x);
    std::vector<Cut> buffer;
    for (const auto& x : coords) {
      for (const auto& y : coords) {
        separating_cuts(spec, x, y, buffer);
        ++pairs[h];
        if (buffer.size() != host_distance(spec, x, y)) {
          failures[h] = spec.to_string();
          return;
        }
      }
    }
  });
  for (const auto& f : failures) v.require(f.empty(), "identity fails on " + f);
  if (v.passed) {
    v.detail = std::to_string(hosts.size()) + " hosts, " +
               std::to_string(std::accumulate(pairs.begin(), pairs.end(), std::uint64_t{0})) + " pairs";
  }
  return v;
}

Verdict gray_anchor() {
  Verdict v;
  v.require(gray_rank(parse_vertex_bits("110"), 3) == 5, "gray_rank(110,3) != 5");
  v.require(gray_rank(parse_vertex_bits("11"), 2) == 3, "gray_rank(11,2) != 3");
  const HostSpec spec = parse_host("C8xP4");
  v.require(gray_coordinate(spec, parse_vertex_bits("11011")) == Coordinate{5, 3}, "coordinate of 11011 != (5,3)");
  v.require(gray_embedding(spec)(parse_vertex_bits("11011")) == 18, "flat index of 11011 != 18");

  std::ostringstream out, err;
  const int code = cli::run({"gray", "--host", "C8xP4", "--vertex", "11011", "--format", "tsv"}, out, err);
  v.require(code == 0, "CLI exit " + std::to_string(code));
  v.require(out.str().find("\n11011\t(5,3)\t18\n") != std::string::npos, "CLI output lacks '11011\\t(5,3)\\t18'");
  if (v.passed) v.detail = "11011 -> (5,3) -> 18, CLI line matches";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"AC1 torus closed form C4xC4", torus_closed_form},
      {"AC2 brute-force optimality C8, P8", single_factor_brute_force},
      {"AC3 engine equivalence", engine_equivalence},
      {"AC4 Gray matches formula (k<=3, n<=12)", gray_formula_sweep},
      {"AC5 lower-bound sampling and annealing (n<=10)", lower_bound_sampling},
      {"AC6 block-product theta symmetry", block_swap_property},
      {"AC7 cut-distance identity (n<=8)", cut_distance_identity},
      {"AC8 Gray code anchor", gray_anchor},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.passed = false;
      v.detail = std::string("exception: ") + e.what();
    }
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.2fs", seconds_since(start));
    std::cout << (v.passed ? "[PASS] " : "[FAIL] ") << name << " (" << elapsed << "): " << v.detail << std::endl;
    if (!v.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
