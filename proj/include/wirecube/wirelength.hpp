#pragma once

// Wirelength of Q_n embeddings under geodesic routing.
//
// Two engines compute the same number by different routes: wl_direct sums
// host distances over the n 2^{n-1} cube edges, wl_cut sums edge boundaries
// of cut preimages over the host's cut family. The closed forms live in
// formula_wl and share no code with either engine.

#include <cstdint>
#include <string_view>
#include <vector>

#include "wirecube/cube.hpp"
#include "wirecube/embedding.hpp"
#include "wirecube/host.hpp"

namespace wirecube {

enum class WirelengthMethod { Direct, CutSum };

[[nodiscard]] std::string_view to_string(WirelengthMethod m) noexcept;

struct CutTheta {
  Cut cut;
  std::uint64_t theta;
};

struct WirelengthReport {
  std::uint64_t total = 0;
  std::vector<CutTheta> per_cut;  // empty for Direct
  WirelengthMethod method = WirelengthMethod::Direct;
};

[[nodiscard]] WirelengthReport wl_direct(const Embedding& e);
[[nodiscard]] WirelengthReport wl_cut(const Embedding& e);

/// f^{-1}(induced set) by a full scan of the map.
[[nodiscard]] VertexSubset preimage(const Embedding& e, const InducedSet& set);

/// theta(f^{-1}(B_ij)) for j = 1..q_i of one factor, built by sliding the
/// window (cycle) or growing the prefix (path) one host layer at a time.
[[nodiscard]] std::vector<std::uint64_t> factor_cut_thetas(const Embedding& e, std::size_t factor);

/// Sum over j of theta(f^{-1}(B_ij)) for one factor.
[[nodiscard]] std::uint64_t factor_cut_sum(const Embedding& e, std::size_t factor);

/// Gray preimage of B_ij built directly as a block product
/// V(Q_before) x xi^{-1}(A_ij) x V(Q_after), without an embedding.
[[nodiscard]] VertexSubset gray_cut_preimage(const HostSpec& spec, const Cut& cut);

/// Sum over j of theta(gray_cut_preimage(i, j)).
[[nodiscard]] std::uint64_t gray_cut_sum(const HostSpec& spec, std::size_t factor);

struct FormulaTerm {
  std::size_t factor;
  std::uint64_t value;
};

struct FormulaResult {
  std::uint64_t total = 0;
  std::vector<FormulaTerm> terms;
};

/// True when every factor exponent is at least 2.
[[nodiscard]] bool formula_applies(const HostSpec& spec) noexcept;

/// Per-factor term: 2^{n-n_i}(3*2^{2n_i-3} - 2^{n_i-1}) for a cycle,
/// 2^{n-n_i}(2^{2n_i-1} - 2^{n_i-1}) for a path. Requires n_i >= 2.
[[nodiscard]] std::uint64_t formula_term(const HostSpec& spec, std::size_t factor);

/// Minimum wirelength of Q_n into the host; throws std::invalid_argument if
/// some n_i = 1.
[[nodiscard]] FormulaResult formula_wl(const HostSpec& spec);

}  // namespace wirecube
