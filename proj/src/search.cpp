#include "wirecube/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wirecube/parallel.hpp"
#include "wirecube/rng.hpp"
#include "wirecube/wirelength.hpp"

namespace wirecube {

namespace {

// Host distance lookup; tabulated for up to 2^10 vertices.
class DistanceOracle {
 public:
  explicit DistanceOracle(const HostSpec& spec) : spec_(spec), size_(spec.vertex_count()) {
    if (spec.dim() <= 10) {
      table_.resize(std::size_t{size_} * size_);
      for (FlatIndex x = 0; x < size_; ++x) {
        for (FlatIndex y = 0; y < size_; ++y) {
          table_[std::size_t{x} * size_ + y] = static_cast<std::uint16_t>(flat_distance(spec, x, y));
        }
      }
    }
  }

  [[nodiscard]] std::int64_t operator()(FlatIndex x, FlatIndex y) const noexcept {
    if (!table_.empty()) return table_[std::size_t{x} * size_ + y];
    return static_cast<std::int64_t>(flat_distance(spec_, x, y));
  }

 private:
  const HostSpec& spec_;
  FlatIndex size_;
  std::vector<std::uint16_t> table_;
};

std::uint64_t total_wirelength(std::span<const FlatIndex> map, int n, const DistanceOracle& dist) {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < map.size(); ++v) {
    for (int b = 0; b < n; ++b) {
      const Vertex u = v | (Vertex{1} << b);
      if (u != v) total += static_cast<std::uint64_t>(dist(map[v], map[u]));
    }
  }
  return total;
}

std::int64_t swap_delta(std::span<const FlatIndex> map, int n, const DistanceOracle& dist, Vertex u, Vertex v) {
  if (u == v) return 0;
  const FlatIndex fu = map[u];
  const FlatIndex fv = map[v];
  std::int64_t delta = 0;
  for (int b = 0; b < n; ++b) {
    const Vertex bit = Vertex{1} << b;
    const Vertex wu = u ^ bit;
    if (wu != v) delta += dist(fv, map[wu]) - dist(fu, map[wu]);
    const Vertex wv = v ^ bit;
    if (wv != u) delta += dist(fu, map[wv]) - dist(fv, map[wv]);
  }
  return delta;
}

void attach_formula(const HostSpec& spec, SearchResult& r) {
  if (!formula_applies(spec)) return;
  r.formula_value = formula_wl(spec).total;
  r.matched_formula = r.best_wirelength == *r.formula_value;
}

}  // namespace

std::string_view to_string(SearchMethod m) noexcept { return m == SearchMethod::Brute ? "brute" : "anneal"; }

std::string_view to_string(FormulaVerdict v) noexcept {
  switch (v) {
    case FormulaVerdict::Matched:
      return "matched";
    case FormulaVerdict::Above:
      return "above_formula";
    case FormulaVerdict::Below:
      return "below_formula";
    case FormulaVerdict::NotApplicable:
      break;
  }
  return "no_formula";
}

FormulaVerdict verdict(const SearchResult& r) noexcept {
  if (!r.formula_value) return FormulaVerdict::NotApplicable;
  if (r.best_wirelength == *r.formula_value) return FormulaVerdict::Matched;
  return r.best_wirelength > *r.formula_value ? FormulaVerdict::Above : FormulaVerdict::Below;
}

void check_budget(const SearchBudget& budget) {
  if (budget.method == SearchMethod::Brute) {
    if (budget.max_vertices > kBruteVertexCap) {
      throw std::invalid_argument("brute force vertex limit " + std::to_string(budget.max_vertices) +
                                  " exceeds hard cap " + std::to_string(kBruteVertexCap));
    }
    return;
  }
  if (budget.restarts == 0) throw std::invalid_argument("annealing needs at least one restart");
  if (budget.initial_temperature && !(*budget.initial_temperature > 0.0)) {
    throw std::invalid_argument("initial temperature must be positive");
  }
  if (!(budget.cooling_rate > 0.0 && budget.cooling_rate <= 1.0)) {
    throw std::invalid_argument("cooling rate must lie in (0, 1]");
  }
}

std::int64_t transposition_delta(const Embedding& e, Vertex u, Vertex v) {
  const auto count = e.host().vertex_count();
  if (u >= count || v >= count) throw std::out_of_range("transposition vertex outside Q_n");
  const HostSpec& spec = e.host();
  const auto map = e.map();
  const auto dist = [&](FlatIndex x, FlatIndex y) { return static_cast<std::int64_t>(flat_distance(spec, x, y)); };
  if (u == v) return 0;
  std::int64_t delta = 0;
  for (int b = 0; b < spec.dim(); ++b) {
    const Vertex bit = Vertex{1} << b;
    const Vertex wu = u ^ bit;
    if (wu != v) delta += dist(map[v], map[wu]) - dist(map[u], map[wu]);
    const Vertex wv = v ^ bit;
    if (wv != u) delta += dist(map[u], map[wv]) - dist(map[v], map[wv]);
  }
  return delta;
}

SearchResult brute_force_min(const HostSpec& spec, const SearchBudget& budget) {
  SearchBudget b = budget;
  b.method = SearchMethod::Brute;
  check_budget(b);
  const std::uint32_t count = spec.vertex_count();
  if (count > b.max_vertices) {
    throw std::invalid_argument("instance too large for brute force: " + spec.to_string() + " has " +
                                std::to_string(count) + " vertices, limit " + std::to_string(b.max_vertices));
  }
  const DistanceOracle dist(spec);
  const int n = spec.dim();

  // Partition by the image of the first free vertex; each part enumerates
  // the remaining slots in lexicographic order.
  const Vertex first_free = b.prune_origin ? 1 : 0;
  std::vector<FlatIndex> heads;
  for (FlatIndex x = b.prune_origin ? 1 : 0; x < count; ++x) heads.push_back(x);

  struct Part {
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<FlatIndex> map;
    std::uint64_t evaluations = 0;
  };
  std::vector<Part> parts(heads.size());

  parallel_for(heads.size(), [&](std::size_t p) {
    std::vector<FlatIndex> map;
    if (b.prune_origin) map.push_back(0);
    map.push_back(heads[p]);
    for (FlatIndex x = 0; x < count; ++x) {
      if (std::find(map.begin(), map.end(), x) == map.end()) map.push_back(x);
    }
    Part& part = parts[p];
    const auto tail = map.begin() + first_free + 1;
    do {
      const std::uint64_t wl = total_wirelength(map, n, dist);
      ++part.evaluations;
      if (wl < part.best) {
        part.best = wl;
        part.map = map;
      }
    } while (std::next_permutation(tail, map.end()));
  });

  std::size_t winner = 0;
  std::uint64_t evaluations = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    evaluations += parts[p].evaluations;
    if (parts[p].best < parts[winner].best) winner = p;
  }
  // a single-vertex host never happens (n >= 1), so parts is nonempty
  SearchResult result{SearchMethod::Brute, parts[winner].best, Embedding(spec, parts[winner].map), evaluations,
                      std::nullopt, std::nullopt, 0};
  attach_formula(spec, result);
  return result;
}

SearchResult anneal_search(const HostSpec& spec, const SearchBudget& budget) {
  SearchBudget b = budget;
  b.method = SearchMethod::Anneal;
  check_budget(b);
  const DistanceOracle dist(spec);
  const int n = spec.dim();
  const std::uint64_t count = spec.vertex_count();
  const double t0 = b.initial_temperature.value_or(2.0 * n);

  struct Run {
    std::uint64_t best = 0;
    std::vector<FlatIndex> map;
    std::uint64_t evaluations = 0;
  };
  std::vector<Run> runs(b.restarts);

  parallel_for(b.restarts, [&](std::size_t r) {
    Rng rng(mix_seed(b.seed, r));
    std::vector<FlatIndex> map;
    if (r == 0 && b.gray_start) {
      const Embedding g = gray_embedding(spec);
      map.assign(g.map().begin(), g.map().end());
    } else {
      map.resize(count);
      std::iota(map.begin(), map.end(), FlatIndex{0});
      rng.shuffle(std::span<FlatIndex>(map));
    }
    std::uint64_t current = total_wirelength(map, n, dist);
    Run& run = runs[r];
    run.best = current;
    run.map = map;
    run.evaluations = 1;
    if (count < 2) return;

    double temperature = t0;
    for (std::uint64_t it = 0; it < b.iterations_per_restart; ++it) {
      const auto u = static_cast<Vertex>(rng.below(count));
      auto v = static_cast<Vertex>(rng.below(count - 1));
      if (v >= u) ++v;
      const std::int64_t delta = swap_delta(map, n, dist, u, v);
      ++run.evaluations;
      const bool accept = delta <= 0 || rng.unit() < std::exp(-static_cast<double>(delta) / temperature);
      if (accept) {
        std::swap(map[u], map[v]);
        current = static_cast<std::uint64_t>(static_cast<std::int64_t>(current) + delta);
        if (current < run.best) {
          run.best = current;
          run.map = map;
        }
      }
      temperature *= b.cooling_rate;
    }
  });

  std::size_t winner = 0;
  std::uint64_t evaluations = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    evaluations += runs[r].evaluations;
    if (runs[r].best < runs[winner].best) winner = r;
  }
  SearchResult result{SearchMethod::Anneal, runs[winner].best, Embedding(spec, runs[winner].map), evaluations,
                      std::nullopt, std::nullopt, static_cast<std::uint32_t>(winner)};
  attach_formula(spec, result);
  return result;
}

SearchResult run_search(const HostSpec& spec, const SearchBudget& budget) {
  return budget.method == SearchMethod::Brute ? brute_force_min(spec, budget) : anneal_search(spec, budget);
}

}  // namespace wirecube
