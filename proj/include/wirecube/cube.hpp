#pragma once

// Hypercube vertex and subset algebra.
//
// A vertex of Q_n is an n-bit integer whose most significant bit is the
// leftmost coordinate of the 0-1 vector. Subsets are dense bit vectors of
// length 2^n packed into 64-bit words.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wirecube {

using Vertex = std::uint32_t;

/// Largest supported cube dimension; a subset over Q_20 is 1 Mib.
inline constexpr int kMaxDim = 20;

/// Throws std::invalid_argument unless 1 <= n <= kMaxDim.
void check_dim(int n);

/// Parses a 0-1 string such as "11011" (leftmost char = most significant bit).
Vertex parse_vertex_bits(std::string_view bits);
/// Inverse of parse_vertex_bits, zero-padded to n characters.
std::string vertex_bits(Vertex v, int n);

class VertexSubset {
 public:
  using Word = std::uint64_t;

  /// Empty subset of Q_n.
  explicit VertexSubset(int n);

  static VertexSubset full(int n);
  static VertexSubset from_vertices(int n, std::span<const Vertex> vertices);

  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t universe() const noexcept { return std::size_t{1} << dim_; }

  [[nodiscard]] bool contains(Vertex v) const noexcept {
    return (words_[v >> 6] >> (v & 63U)) & 1U;
  }
  void insert(Vertex v) noexcept { words_[v >> 6] |= Word{1} << (v & 63U); }
  void erase(Vertex v) noexcept { words_[v >> 6] &= ~(Word{1} << (v & 63U)); }
  void toggle(Vertex v) noexcept { words_[v >> 6] ^= Word{1} << (v & 63U); }

  [[nodiscard]] std::size_t count() const noexcept;
  [[nodiscard]] VertexSubset complement() const;
  [[nodiscard]] std::vector<Vertex> vertices() const;

  [[nodiscard]] std::span<const Word> words() const noexcept { return words_; }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  int dim_;
  std::vector<Word> words_;  // bits past 2^dim are always zero
};

/// Edge boundary size: number of edges of Q_n with exactly one endpoint in s.
[[nodiscard]] std::uint64_t theta(const VertexSubset& s);

/// The boundary edges themselves as (inside, outside) pairs, ordered by the
/// inside vertex and then by flipped bit from least significant. Slow; kept
/// as the audited counterpart of theta().
[[nodiscard]] std::vector<std::pair<Vertex, Vertex>> boundary_edges(const VertexSubset& s);

/// { u * 2^{n2} + v : u in high, v in low } over Q_{n1+n2}.
/// Throws std::invalid_argument if n1 + n2 > kMaxDim.
[[nodiscard]] VertexSubset block_product(const VertexSubset& high, const VertexSubset& low);

/// Relabels coordinates: bit b of each member moves to bit perm[b].
/// perm must be a permutation of [0, n).
[[nodiscard]] VertexSubset permute_coordinates(const VertexSubset& s, std::span<const int> perm);

/// 1-based position of v in the n-bit binary-reflected Gray sequence.
/// Throws std::out_of_range if v >= 2^n.
[[nodiscard]] std::uint32_t gray_rank(Vertex v, int n);

/// Vertex at 1-based position r of the n-bit binary-reflected Gray sequence.
/// Throws std::out_of_range unless 1 <= r <= 2^n.
[[nodiscard]] Vertex gray_unrank(std::uint32_t r, int n);

/// { gray_unrank(r) : r in positions }.
[[nodiscard]] VertexSubset gray_preimage(std::span<const std::uint32_t> positions, int n);

/// Preimage of the contiguous rank interval [first, last].
[[nodiscard]] VertexSubset gray_preimage_interval(std::uint32_t first, std::uint32_t last, int n);

}  // namespace wirecube
