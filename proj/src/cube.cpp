#include "wirecube/cube.hpp"

#include <bit>
#include <stdexcept>

namespace wirecube {

namespace {

using Word = VertexSubset::Word;

// Bit p of kLowHalf[d] is set iff bit d of p is zero, for d < 6.
constexpr Word kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

std::size_t word_count(int n) { return n >= 6 ? std::size_t{1} << (n - 6) : 1; }

Word tail_mask(int n) { return n >= 6 ? ~Word{0} : (Word{1} << (1U << n)) - 1; }

}  // namespace

void check_dim(int n) {
  if (n < 1 || n > kMaxDim) {
    throw std::invalid_argument("cube dimension " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxDim) + "]");
  }
}

Vertex parse_vertex_bits(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxDim)) {
    throw std::invalid_argument("vertex bit string must have 1.." + std::to_string(kMaxDim) +
                                " characters");
  }
  Vertex v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("vertex bit string must be 0/1");
    v = (v << 1) | static_cast<Vertex>(c - '0');
  }
  return v;
}

std::string vertex_bits(Vertex v, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int b = 0; b < n; ++b) {
    if ((v >> b) & 1U) out[static_cast<std::size_t>(n - 1 - b)] = '1';
  }
  return out;
}

VertexSubset::VertexSubset(int n) : dim_(n) {
  check_dim(n);
  words_.assign(word_count(n), 0);
}

VertexSubset VertexSubset::full(int n) {
  VertexSubset s(n);
  for (auto& w : s.words_) w = ~Word{0};
  s.words_.back() &= tail_mask(n);
  return s;
}

VertexSubset VertexSubset::from_vertices(int n, std::span<const Vertex> vertices) {
  VertexSubset s(n);
  for (Vertex v : vertices) {
    if (v >= s.universe()) throw std::out_of_range("vertex outside Q_" + std::to_string(n));
    s.insert(v);
  }
  return s;
}

std::size_t VertexSubset::count() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

VertexSubset VertexSubset::complement() const {
  VertexSubset s(*this);
  for (auto& w : s.words_) w = ~w;
  s.words_.back() &= tail_mask(dim_);
  return s;
}

std::vector<Vertex> VertexSubset::vertices() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t theta(const VertexSubset& s) {
  const auto words = s.words();
  const int n = s.dim();
  std::uint64_t total = 0;
  for (int d = 0; d < n; ++d) {
    if (d < 6) {
      const unsigned shift = 1U << d;
      for (Word w : words) total += static_cast<std::uint64_t>(std::popcount((w ^ (w >> shift)) & kLowHalf[d]));
    } else {
      const std::size_t stride = std::size_t{1} << (d - 6);
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (i & stride) continue;
        total += static_cast<std::uint64_t>(std::popcount(words[i] ^ words[i + stride]));
      }
    }
  }
  return total;
}

std::vector<std::pair<Vertex, Vertex>> boundary_edges(const VertexSubset& s) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u : s.vertices()) {
    for (int b = 0; b < s.dim(); ++b) {
      const Vertex v = u ^ (Vertex{1} << b);
      if (!s.contains(v)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

VertexSubset block_product(const VertexSubset& high, const VertexSubset& low) {
  const int n = high.dim() + low.dim();
  if (n > kMaxDim) {
    throw std::invalid_argument("block product dimension " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxDim));
  }
  VertexSubset out(n);
  const auto low_members = low.vertices();
  for (Vertex u : high.vertices()) {
    const Vertex base = u << low.dim();
    for (Vertex v : low_members) out.insert(base | v);
  }
  return out;
}

VertexSubset permute_coordinates(const VertexSubset& s, std::span<const int> perm) {
  const int n = s.dim();
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("coordinate permutation has wrong length");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("not a coordinate permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  VertexSubset out(n);
  for (Vertex u : s.vertices()) {
    Vertex v = 0;
    for (int b = 0; b < n; ++b) v |= ((u >> b) & 1U) << perm[static_cast<std::size_t>(b)];
    out.insert(v);
  }
  return out;
}

std::uint32_t gray_rank(Vertex v, int n) {
  check_dim(n);
  if (v >= (Vertex{1} << n)) throw std::out_of_range("vertex outside Q_" + std::to_string(n));
  // prefix xor inverts g = i ^ (i >> 1)
  Vertex i = v;
  for (unsigned shift = 1; shift < 32; shift <<= 1) i ^= i >> shift;
  return i + 1;
}

Vertex gray_unrank(std::uint32_t r, int n) {
  check_dim(n);
  if (r < 1 || r > (std::uint32_t{1} << n)) {
    throw std::out_of_range("Gray rank " + std::to_string(r) + " outside [1, 2^" + std::to_string(n) + "]");
  }
  const std::uint32_t i = r - 1;
  return i ^ (i >> 1);
}

VertexSubset gray_preimage(std::span<const std::uint32_t> positions, int n) {
  VertexSubset s(n);
  for (std::uint32_t r : positions) s.insert(gray_unrank(r, n));
  return s;
}

VertexSubset gray_preimage_interval(std::uint32_t first, std::uint32_t last, int n) {
  VertexSubset s(n);
  for (std::uint32_t r = first; r <= last; ++r) s.insert(gray_unrank(r, n));
  return s;
}

}  // namespace wirecube
