#pragma once

// Host graphs G_1 x ... x G_k where each factor is a path or cycle on 2^{n_i}
// vertices. Coordinates are 1-based per factor; the flattened index is
// row-major with factor 1 most significant.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wirecube {

enum class FactorKind { Path, Cycle };

struct HostFactor {
  FactorKind kind;
  int exponent;  // size is 2^exponent

  [[nodiscard]] std::uint32_t size() const noexcept { return std::uint32_t{1} << exponent; }
  /// Number of cuts q_i this factor contributes.
  [[nodiscard]] std::uint32_t cut_count() const noexcept {
    return kind == FactorKind::Cycle ? size() / 2 : size() - 1;
  }

  friend bool operator==(const HostFactor&, const HostFactor&) = default;
};

using Coordinate = std::vector<std::uint32_t>;
using FlatIndex = std::uint32_t;

class HostSpec {
 public:
  /// Validates: k >= 1, path exponent >= 1, cycle exponent >= 2, total n <= 20.
  explicit HostSpec(std::vector<HostFactor> factors);

  [[nodiscard]] std::span<const HostFactor> factors() const noexcept { return factors_; }
  [[nodiscard]] const HostFactor& factor(std::size_t i) const { return factors_.at(i); }
  [[nodiscard]] std::size_t k() const noexcept { return factors_.size(); }
  /// Total exponent n = sum of n_i; the guest is Q_n.
  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] std::uint32_t vertex_count() const noexcept { return std::uint32_t{1} << dim_; }
  /// Bit offset of factor i inside a flat index: sum of exponents after i.
  [[nodiscard]] int shift(std::size_t i) const { return shifts_.at(i); }

  /// 1-based label of factor i in the flattened vertex.
  [[nodiscard]] std::uint32_t label(FlatIndex x, std::size_t i) const noexcept {
    return ((x >> shifts_[i]) & (factors_[i].size() - 1)) + 1;
  }

  /// Canonical text form, e.g. "C8xP4".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const HostSpec& a, const HostSpec& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<HostFactor> factors_;
  std::vector<int> shifts_;
  int dim_ = 0;
};

/// Parses `factor ("x" factor)*` with `factor := ("C"|"P") uint`, letters
/// case-insensitive. Throws std::invalid_argument on any violation.
[[nodiscard]] HostSpec parse_host(std::string_view text);

/// Throws std::out_of_range if any label is outside [1, 2^{n_i}].
void check_coordinate(const HostSpec& spec, const Coordinate& x);

[[nodiscard]] FlatIndex flatten(const HostSpec& spec, const Coordinate& x);
[[nodiscard]] Coordinate unflatten(const HostSpec& spec, FlatIndex index);

/// Geodesic distance between labels a and b (1-based) in one factor.
[[nodiscard]] std::uint32_t factor_distance(const HostFactor& factor, std::uint32_t a, std::uint32_t b);

[[nodiscard]] std::uint64_t host_distance(const HostSpec& spec, const Coordinate& x, const Coordinate& y);
/// host_distance on flattened indices, no validation.
[[nodiscard]] std::uint64_t flat_distance(const HostSpec& spec, FlatIndex x, FlatIndex y) noexcept;

/// Names one edge cut P_ij: factor is 0-based internally, index is the
/// 1-based j in [1, q_i].
struct Cut {
  std::size_t factor;
  std::uint32_t index;

  friend bool operator==(const Cut&, const Cut&) = default;
  friend auto operator<=>(const Cut&, const Cut&) = default;
};

void check_cut(const HostSpec& spec, const Cut& cut);

/// All cuts in (factor, index) order.
[[nodiscard]] std::vector<Cut> cuts(const HostSpec& spec);

/// One side of a cut: labels [first, last] in the cut's factor, every label
/// elsewhere. For a cycle this is F_j = {j, ..., j + 2^{n_i-1} - 1}; for a
/// path it is N_j = {1, ..., j}.
struct InducedSet {
  Cut cut;
  std::uint32_t first;
  std::uint32_t last;

  [[nodiscard]] bool contains_label(std::uint32_t label) const noexcept {
    return label >= first && label <= last;
  }
};

[[nodiscard]] InducedSet induced_set(const HostSpec& spec, const Cut& cut);
[[nodiscard]] bool contains(const HostSpec& spec, const InducedSet& set, FlatIndex x) noexcept;
[[nodiscard]] std::uint64_t induced_size(const HostSpec& spec, const InducedSet& set);

/// Cuts whose induced set holds exactly one of x, y.
[[nodiscard]] std::vector<Cut> separating_cuts(const HostSpec& spec, const Coordinate& x, const Coordinate& y);
/// Allocation-free form for sweeps; clears and fills `out`.
void separating_cuts(const HostSpec& spec, const Coordinate& x, const Coordinate& y, std::vector<Cut>& out);

using HostEdge = std::pair<FlatIndex, FlatIndex>;

/// Edges of one factor graph as 1-based label pairs (a < b).
[[nodiscard]] std::vector<std::pair<std::uint32_t, std::uint32_t>> factor_edges(const HostFactor& factor);

/// The factor-level cut X_ij (cycle, two edges) or Y_ij (path, one edge).
[[nodiscard]] std::vector<std::pair<std::uint32_t, std::uint32_t>> factor_cut_edges(const HostSpec& spec,
                                                                                    const Cut& cut);

/// All edges of the product graph, each once, as (lower, higher) flat indices.
[[nodiscard]] std::vector<HostEdge> host_edges(const HostSpec& spec);

/// The product edge set P_ij: every edge along factor i whose factor-i
/// endpoints form an edge of the factor-level cut.
[[nodiscard]] std::vector<HostEdge> cut_edges(const HostSpec& spec, const Cut& cut);

/// Every ordered factorization with at most max_factors factors whose total
/// exponent is at most max_n, each factor exponent >= min_exponent.
[[nodiscard]] std::vector<HostSpec> enumerate_hosts(int max_n, std::size_t max_factors, int min_exponent);

}  // namespace wirecube
