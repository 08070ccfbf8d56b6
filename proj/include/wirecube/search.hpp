#pragma once

// Optimality oracles: exhaustive minimum over all (2^n)! embeddings at tiny
// sizes, and seeded restart annealing over transpositions elsewhere.

#include <cstdint>
#include <optional>
#include <string_view>

#include "wirecube/embedding.hpp"
#include "wirecube/host.hpp"

namespace wirecube {

enum class SearchMethod { Brute, Anneal };

[[nodiscard]] std::string_view to_string(SearchMethod m) noexcept;

/// Hard ceiling on brute-force instance size; 10! is about 3.6e6.
inline constexpr std::uint32_t kBruteVertexCap = 10;

struct SearchBudget {
  SearchMethod method = SearchMethod::Anneal;

  // brute
  std::uint32_t max_vertices = 8;
  // Fix f(0) to host index 0. Value-preserving: XOR-translating the cube
  // moves whichever vertex lands on the origin to 0 without changing any
  // edge length.
  bool prune_origin = true;

  // anneal
  std::uint32_t restarts = 20;
  std::uint64_t iterations_per_restart = 100000;
  std::optional<double> initial_temperature;  // default 2n
  double cooling_rate = 0.999;
  bool gray_start = true;  // restart 0 starts at the Gray embedding

  std::uint64_t seed = 1;
};

/// Throws std::invalid_argument on an inconsistent budget.
void check_budget(const SearchBudget& budget);

struct SearchResult {
  SearchMethod method;
  std::uint64_t best_wirelength;
  Embedding best_embedding;
  std::uint64_t evaluations;
  std::optional<std::uint64_t> formula_value;
  std::optional<bool> matched_formula;
  std::uint32_t best_restart = 0;  // anneal only
};

enum class FormulaVerdict { Matched, Above, Below, NotApplicable };

[[nodiscard]] FormulaVerdict verdict(const SearchResult& r) noexcept;
[[nodiscard]] std::string_view to_string(FormulaVerdict v) noexcept;

/// Exact minimum of the wirelength over every embedding. Throws
/// std::invalid_argument when 2^n exceeds budget.max_vertices or the cap.
[[nodiscard]] SearchResult brute_force_min(const HostSpec& spec, const SearchBudget& budget);

[[nodiscard]] SearchResult anneal_search(const HostSpec& spec, const SearchBudget& budget);

/// Dispatches on budget.method.
[[nodiscard]] SearchResult run_search(const HostSpec& spec, const SearchBudget& budget);

/// Change in wirelength if the images of u and v were exchanged. Looks only
/// at the 2n cube edges incident to u or v.
[[nodiscard]] std::int64_t transposition_delta(const Embedding& e, Vertex u, Vertex v);

}  // namespace wirecube
