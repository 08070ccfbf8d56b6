#include "wirecube/verify.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "wirecube/cube.hpp"
#include "wirecube/rng.hpp"
#include "wirecube/search.hpp"
#include "wirecube/wirelength.hpp"

namespace wirecube {

namespace {

constexpr int kExhaustivePairsDim = 8;
constexpr int kPartitionDim = 10;
constexpr int kComponentDim = 8;

VertexSubset random_subset(int n, Rng& rng) {
  VertexSubset s(n);
  for (Vertex v = 0; v < (Vertex{1} << n); ++v) {
    if (rng.next() & 1U) s.insert(v);
  }
  return s;
}

void fail(CheckResult& c, const std::string& detail) {
  if (c.passed) c.detail = detail;
  c.passed = false;
}

CheckResult check_theta_symmetry(const HostSpec& spec, Rng& rng, std::uint32_t samples) {
  CheckResult c{"theta_complement_symmetry", true, 0, {}, {}};
  const int n = spec.dim();
  const auto one = [&](const VertexSubset& s) {
    ++c.cases;
    const auto t = theta(s);
    if (t != theta(s.complement())) fail(c, "theta(S) != theta(complement S)");
    if (n <= 12 && boundary_edges(s).size() != t) fail(c, "|boundary_edges(S)| != theta(S)");
  };
  if (n <= 4) {
    for (std::uint32_t bits = 0; bits < (1U << (1U << n)); ++bits) {
      VertexSubset s(n);
      for (Vertex v = 0; v < (Vertex{1} << n); ++v) {
        if ((bits >> v) & 1U) s.insert(v);
      }
      one(s);
    }
  } else {
    for (std::uint32_t i = 0; i < samples; ++i) one(random_subset(n, rng));
  }
  return c;
}

// theta of the Gray cut preimage must not depend on where factor i sits.
CheckResult check_block_swap(const HostSpec& spec) {
  CheckResult c{"block_swap_consistency", true, 0, {}, {}};
  for (std::size_t i = 0; i < spec.k(); ++i) {
    std::vector<HostFactor> rotated(spec.factors().begin() + static_cast<std::ptrdiff_t>(i), spec.factors().end());
    rotated.insert(rotated.end(), spec.factors().begin(), spec.factors().begin() + static_cast<std::ptrdiff_t>(i));
    const HostSpec front(std::move(rotated));
    for (std::uint32_t j = 1; j <= spec.factor(i).cut_count(); ++j) {
      ++c.cases;
      if (theta(gray_cut_preimage(spec, Cut{i, j})) != theta(gray_cut_preimage(front, Cut{0, j}))) {
        fail(c, "rotation changed theta for cut (" + std::to_string(i + 1) + "," + std::to_string(j) + ")");
      }
    }
  }
  return c;
}

CheckResult check_partition(const HostSpec& spec) {
  CheckResult c{"cut_partition", true, 0, {}, {}};
  if (spec.dim() > kPartitionDim) {
    c.detail = "skipped above n=" + std::to_string(kPartitionDim);
    return c;
  }
  auto all = host_edges(spec);
  std::sort(all.begin(), all.end());
  std::vector<HostEdge> covered;
  for (const Cut& cut : cuts(spec)) {
    auto part = cut_edges(spec, cut);
    covered.insert(covered.end(), part.begin(), part.end());
  }
  std::sort(covered.begin(), covered.end());
  c.cases = all.size();
  if (covered != all) fail(c, "cut edge sets do not partition the host edges");
  return c;
}

// Two components after removing P_ij, one of them exactly B_ij.
CheckResult check_components(const HostSpec& spec) {
  CheckResult c{"cut_components", true, 0, {}, {}};
  if (spec.dim() > kComponentDim) {
    c.detail = "skipped above n=" + std::to_string(kComponentDim);
    return c;
  }
  const auto edges = host_edges(spec);
  const FlatIndex count = spec.vertex_count();
  for (const Cut& cut : cuts(spec)) {
    ++c.cases;
    auto removed = cut_edges(spec, cut);
    std::sort(removed.begin(), removed.end());
    std::vector<std::vector<FlatIndex>> adj(count);
    for (const auto& e : edges) {
      if (std::binary_search(removed.begin(), removed.end(), e)) continue;
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    std::vector<int> comp(count, -1);
    int components = 0;
    for (FlatIndex s = 0; s < count; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<FlatIndex> stack{s};
      comp[s] = components;
      while (!stack.empty()) {
        const FlatIndex x = stack.back();
        stack.pop_back();
        for (FlatIndex y : adj[x]) {
          if (comp[y] < 0) {
            comp[y] = components;
            stack.push_back(y);
          }
        }
      }
      ++components;
    }
    const InducedSet set = induced_set(spec, cut);
    bool matches = components == 2;
    if (matches) {
      int side = -1;
      for (FlatIndex x = 0; x < count && matches; ++x) {
        if (!contains(spec, set, x)) continue;
        if (side < 0) side = comp[x];
        matches = comp[x] == side;
      }
      for (FlatIndex x = 0; x < count && matches; ++x) {
        if (!contains(spec, set, x)) matches = comp[x] != side;
      }
    }
    if (!matches) {
      fail(c, "cut (" + std::to_string(cut.factor + 1) + "," + std::to_string(cut.index) +
                  ") does not split the host into its induced set and complement");
    }
  }
  return c;
}

CheckResult check_cut_distance(const HostSpec& spec, VerifyDepth depth, Rng& rng, std::uint32_t samples) {
  CheckResult c{"cut_distance_identity", true, 0, {}, {}};
  const FlatIndex count = spec.vertex_count();
  std::vector<Cut> buffer;
  const auto one = [&](FlatIndex a, FlatIndex b) {
    ++c.cases;
    const Coordinate x = unflatten(spec, a);
    const Coordinate y = unflatten(spec, b);
    separating_cuts(spec, x, y, buffer);
    if (buffer.size() != host_distance(spec, x, y)) {
      fail(c, "separating cut count differs from distance at flat pair (" + std::to_string(a) + "," +
                  std::to_string(b) + ")");
    }
  };
  if (depth == VerifyDepth::Full && spec.dim() <= kExhaustivePairsDim) {
    for (FlatIndex a = 0; a < count; ++a) {
      for (FlatIndex b = 0; b < count; ++b) one(a, b);
    }
  } else {
    const std::uint64_t pairs = std::uint64_t{samples} * 64;
    for (std::uint64_t i = 0; i < pairs; ++i) {
      one(static_cast<FlatIndex>(rng.below(count)), static_cast<FlatIndex>(rng.below(count)));
    }
  }
  return c;
}

CheckResult check_flatten(const HostSpec& spec, Rng& rng) {
  CheckResult c{"flatten_bijection", true, 0, {}, {}};
  const FlatIndex count = spec.vertex_count();
  const auto one = [&](FlatIndex x) {
    ++c.cases;
    if (flatten(spec, unflatten(spec, x)) != x) fail(c, "flatten(unflatten(x)) != x at " + std::to_string(x));
  };
  if (spec.dim() <= 10) {
    for (FlatIndex x = 0; x < count; ++x) one(x);
  } else {
    for (int i = 0; i < 4096; ++i) one(static_cast<FlatIndex>(rng.below(count)));
  }
  return c;
}

CheckResult check_gray_code(const HostSpec& spec) {
  CheckResult c{"gray_code_cyclic", true, 0, {}, {}};
  for (const auto& f : spec.factors()) {
    const std::uint32_t m = f.size();
    for (std::uint32_t r = 1; r <= m; ++r) {
      ++c.cases;
      const Vertex a = gray_unrank(r, f.exponent);
      const Vertex b = gray_unrank(r == m ? 1 : r + 1, f.exponent);
      if (gray_rank(a, f.exponent) != r) fail(c, "gray_rank(gray_unrank(r)) != r");
      if (std::popcount(a ^ b) != 1) fail(c, "consecutive Gray ranks not adjacent");
    }
  }
  try {
    (void)gray_embedding(spec);
  } catch (const std::exception& e) {
    fail(c, std::string("Gray embedding invalid: ") + e.what());
  }
  return c;
}

}  // namespace

std::string_view to_string(VerifyDepth d) noexcept { return d == VerifyDepth::Quick ? "quick" : "full"; }

VerifyDepth parse_depth(std::string_view text) {
  if (text == "quick") return VerifyDepth::Quick;
  if (text == "full") return VerifyDepth::Full;
  throw std::invalid_argument("depth must be quick or full");
}

bool VerifyReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(std::string_view name) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerifyReport verify_spec(const HostSpec& spec, const VerifyOptions& options) {
  VerifyReport report;
  report.subject = spec.to_string();
  report.depth = options.depth;
  const bool full = options.depth == VerifyDepth::Full;
  const std::uint32_t samples = options.samples != 0 ? options.samples : (full ? 1000U : 32U);
  Rng rng(mix_seed(options.seed, 0));

  report.checks.push_back(check_theta_symmetry(spec, rng, samples));
  report.checks.push_back(check_block_swap(spec));
  report.checks.push_back(check_partition(spec));
  report.checks.push_back(check_components(spec));
  report.checks.push_back(check_cut_distance(spec, options.depth, rng, samples));
  report.checks.push_back(check_flatten(spec, rng));
  report.checks.push_back(check_gray_code(spec));

  const bool applies = formula_applies(spec);
  const Embedding gray = gray_embedding(spec);
  std::vector<std::uint64_t> gray_sums(spec.k());
  for (std::size_t i = 0; i < spec.k(); ++i) gray_sums[i] = gray_cut_sum(spec, i);

  CheckResult agreement{"engine_agreement", true, 0, {}, {}};
  CheckResult incremental{"incremental_preimage", true, 0, {}, {}};
  CheckResult lower{"lower_bound_sampling", true, 0, {}, {}};
  for (std::uint32_t s = 0; s <= samples; ++s) {
    const Embedding e = s == 0 ? gray : random_embedding(spec, mix_seed(options.seed, 1000 + s));
    const auto direct = wl_direct(e);
    const auto cut = wl_cut(e);
    ++agreement.cases;
    if (direct.total != cut.total && agreement.passed) {
      fail(agreement, "direct " + std::to_string(direct.total) + " != cut sum " + std::to_string(cut.total));
      agreement.counterexample = e;
    }
    if (s < 4) {
      for (const auto& [c, t] : cut.per_cut) {
        ++incremental.cases;
        if (theta(preimage(e, induced_set(spec, c))) != t && incremental.passed) {
          fail(incremental, "sweep theta differs from full scan");
          incremental.counterexample = e;
        }
      }
    }
    if (applies && s > 0) {
      std::vector<std::uint64_t> sums(spec.k(), 0);
      for (const auto& [c, t] : cut.per_cut) sums[c.factor] += t;
      for (std::size_t i = 0; i < spec.k(); ++i) {
        ++lower.cases;
        if (sums[i] < gray_sums[i] && lower.passed) {
          fail(lower, "factor " + std::to_string(i + 1) + " cut sum " + std::to_string(sums[i]) +
                          " below Gray value " + std::to_string(gray_sums[i]));
          lower.counterexample = e;
        }
      }
    }
  }
  report.checks.push_back(std::move(agreement));
  report.checks.push_back(std::move(incremental));

  if (applies) {
    const FormulaResult formula = formula_wl(spec);
    CheckResult match{"gray_matches_formula", true, 1, {}, {}};
    const auto gray_wl = wl_direct(gray).total;
    if (gray_wl != formula.total) {
      fail(match, "Gray wirelength " + std::to_string(gray_wl) + " != formula " + std::to_string(formula.total));
      match.counterexample = gray;
    }
    report.checks.push_back(std::move(match));

    CheckResult terms{"per_factor_closed_form", true, 0, {}, {}};
    for (const auto& term : formula.terms) {
      ++terms.cases;
      if (gray_sums[term.factor] != term.value || factor_cut_sum(gray, term.factor) != term.value) {
        fail(terms, "factor " + std::to_string(term.factor + 1) + " Gray cut sum differs from closed form " +
                        std::to_string(term.value));
      }
    }
    report.checks.push_back(std::move(terms));
    report.checks.push_back(std::move(lower));
  }

  if (!full) return report;

  CheckResult delta{"transposition_delta", true, 0, {}, {}};
  {
    Embedding e = random_embedding(spec, mix_seed(options.seed, 7));
    std::uint64_t current = wl_direct(e).total;
    const auto count = spec.vertex_count();
    for (int t = 0; t < 1000 && count > 1; ++t) {
      const auto u = static_cast<Vertex>(rng.below(count));
      const auto v = static_cast<Vertex>(rng.below(count));
      const auto d = transposition_delta(e, u, v);
      e.swap_images(u, v);
      const std::uint64_t next = wl_direct(e).total;
      ++delta.cases;
      if (static_cast<std::int64_t>(next) - static_cast<std::int64_t>(current) != d && delta.passed) {
        fail(delta, "incremental delta differs from recomputation");
        delta.counterexample = e;
      }
      current = next;
    }
  }
  report.checks.push_back(std::move(delta));

  if (spec.vertex_count() <= 8) {
    CheckResult brute{"brute_force_optimum", true, 0, {}, {}};
    SearchBudget budget;
    budget.method = SearchMethod::Brute;
    const SearchResult pruned = brute_force_min(spec, budget);
    budget.prune_origin = false;
    const SearchResult unpruned = brute_force_min(spec, budget);
    report.brute_minimum = pruned.best_wirelength;
    brute.cases = pruned.evaluations + unpruned.evaluations;
    if (pruned.best_wirelength != unpruned.best_wirelength) fail(brute, "origin pruning changed the minimum");
    if (wl_direct(gray).total != pruned.best_wirelength) {
      fail(brute, "Gray embedding misses the brute-force minimum " + std::to_string(pruned.best_wirelength));
    }
    if (pruned.formula_value && *pruned.formula_value != pruned.best_wirelength) {
      fail(brute, "brute-force minimum " + std::to_string(pruned.best_wirelength) + " != formula " +
                      std::to_string(*pruned.formula_value));
      brute.counterexample = pruned.best_embedding;
    }
    report.checks.push_back(std::move(brute));
  }

  if (applies) {
    CheckResult anneal{"anneal_lower_bound", true, 0, {}, {}};
    SearchBudget budget;
    budget.restarts = 4;
    budget.iterations_per_restart = 20000;
    budget.seed = options.seed;
    const SearchResult r = anneal_search(spec, budget);
    anneal.cases = r.evaluations;
    if (verdict(r) == FormulaVerdict::Below) {
      fail(anneal, "annealing found " + std::to_string(r.best_wirelength) + " below formula " +
                       std::to_string(*r.formula_value));
      anneal.counterexample = r.best_embedding;
    }
    report.checks.push_back(std::move(anneal));
  }
  return report;
}

VerifyReport verify_embedding_file(const std::string& path) {
  VerifyReport report;
  report.subject = path;
  CheckResult load{"embedding_file", true, 0, {}, {}};
  load.cases = 1;
  std::optional<Embedding> e;
  try {
    e = read_embedding_file(path);
  } catch (const std::exception& err) {
    fail(load, err.what());
  }
  report.checks.push_back(std::move(load));
  if (!e) return report;

  CheckResult agreement{"engine_agreement", true, 1, {}, {}};
  const auto direct = wl_direct(*e).total;
  const auto cut = wl_cut(*e).total;
  if (direct != cut) {
    fail(agreement, "direct " + std::to_string(direct) + " != cut sum " + std::to_string(cut));
    agreement.counterexample = *e;
  }
  report.checks.push_back(std::move(agreement));

  if (formula_applies(e->host())) {
    CheckResult bound{"formula_lower_bound", true, 1, {}, {}};
    const auto formula = formula_wl(e->host()).total;
    if (direct < formula) {
      fail(bound, "wirelength " + std::to_string(direct) + " below formula " + std::to_string(formula));
      bound.counterexample = *e;
    }
    report.checks.push_back(std::move(bound));
  }
  return report;
}

}  // namespace wirecube
