#include "wirecube/host.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "wirecube/cube.hpp"

namespace wirecube {

HostSpec::HostSpec(std::vector<HostFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("host needs at least one factor");
  for (const auto& f : factors_) {
    if (f.kind == FactorKind::Path && f.exponent < 1) {
      throw std::invalid_argument("path factor needs at least 2 vertices");
    }
    if (f.kind == FactorKind::Cycle && f.exponent < 2) {
      throw std::invalid_argument("cycle factor needs at least 4 vertices (C2 is degenerate)");
    }
    if (f.exponent > kMaxDim) throw std::invalid_argument("factor too large");
    dim_ += f.exponent;
  }
  if (dim_ > kMaxDim) {
    throw std::invalid_argument("host has 2^" + std::to_string(dim_) + " vertices, limit is 2^" +
                                std::to_string(kMaxDim));
  }
  shifts_.resize(factors_.size());
  int acc = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    shifts_[i] = acc;
    acc += factors_[i].exponent;
  }
}

std::string HostSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += 'x';
    out += factors_[i].kind == FactorKind::Cycle ? 'C' : 'P';
    out += std::to_string(factors_[i].size());
  }
  return out;
}

HostSpec parse_host(std::string_view text) {
  std::vector<HostFactor> factors;
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("bad host spec '" + std::string(text) + "': " + why);
  };
  if (text.empty()) fail("empty");
  while (true) {
    if (pos >= text.size()) fail("expected factor");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (letter != 'C' && letter != 'P') fail("factor must start with C or P");
    ++pos;
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) fail("missing factor size");
    std::uint64_t size = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, size);
    if (ec != std::errc{} || ptr != text.data() + end) fail("factor size out of range");
    if (size < 2 || !std::has_single_bit(size)) fail(std::to_string(size) + " is not a power of two >= 2");
    const int exponent = std::countr_zero(size);
    if (exponent > kMaxDim) fail("factor size too large");
    if (letter == 'C' && size < 4) fail("C2 is a degenerate cycle");
    factors.push_back({letter == 'C' ? FactorKind::Cycle : FactorKind::Path, exponent});
    pos = end;
    if (pos == text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X') fail("expected 'x' between factors");
    ++pos;
  }
  try {
    return HostSpec(std::move(factors));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  throw std::logic_error("unreachable");
}

void check_coordinate(const HostSpec& spec, const Coordinate& x) {
  if (x.size() != spec.k()) throw std::out_of_range("coordinate has wrong number of components");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 1 || x[i] > spec.factor(i).size()) {
      throw std::out_of_range("coordinate component " + std::to_string(i + 1) + " = " + std::to_string(x[i]) +
                              " outside [1, " + std::to_string(spec.factor(i).size()) + "]");
    }
  }
}

FlatIndex flatten(const HostSpec& spec, const Coordinate& x) {
  check_coordinate(spec, x);
  FlatIndex out = 0;
  for (std::size_t i = 0; i < x.size(); ++i) out |= (x[i] - 1) << spec.shift(i);
  return out;
}

Coordinate unflatten(const HostSpec& spec, FlatIndex index) {
  if (index >= spec.vertex_count()) throw std::out_of_range("flat index outside host");
  Coordinate x(spec.k());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = spec.label(index, i);
  return x;
}

std::uint32_t factor_distance(const HostFactor& factor, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t d = a > b ? a - b : b - a;
  if (factor.kind == FactorKind::Path) return d;
  return std::min(d, factor.size() - d);
}

std::uint64_t host_distance(const HostSpec& spec, const Coordinate& x, const Coordinate& y) {
  check_coordinate(spec, x);
  check_coordinate(spec, y);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < spec.k(); ++i) total += factor_distance(spec.factor(i), x[i], y[i]);
  return total;
}

std::uint64_t flat_distance(const HostSpec& spec, FlatIndex x, FlatIndex y) noexcept {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    total += factor_distance(spec.factors()[i], spec.label(x, i), spec.label(y, i));
  }
  return total;
}

void check_cut(const HostSpec& spec, const Cut& cut) {
  if (cut.factor >= spec.k()) throw std::out_of_range("cut factor outside host");
  if (cut.index < 1 || cut.index > spec.factor(cut.factor).cut_count()) {
    throw std::out_of_range("cut index " + std::to_string(cut.index) + " outside [1, " +
                            std::to_string(spec.factor(cut.factor).cut_count()) + "]");
  }
}

std::vector<Cut> cuts(const HostSpec& spec) {
  std::vector<Cut> out;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    for (std::uint32_t j = 1; j <= spec.factor(i).cut_count(); ++j) out.push_back({i, j});
  }
  return out;
}

InducedSet induced_set(const HostSpec& spec, const Cut& cut) {
  check_cut(spec, cut);
  const HostFactor& f = spec.factor(cut.factor);
  if (f.kind == FactorKind::Cycle) return {cut, cut.index, cut.index + f.size() / 2 - 1};
  return {cut, 1, cut.index};
}

bool contains(const HostSpec& spec, const InducedSet& set, FlatIndex x) noexcept {
  return set.contains_label(spec.label(x, set.cut.factor));
}

std::uint64_t induced_size(const HostSpec& spec, const InducedSet& set) {
  const std::uint64_t rest = std::uint64_t{spec.vertex_count()} / spec.factor(set.cut.factor).size();
  return std::uint64_t{set.last - set.first + 1} * rest;
}

void separating_cuts(const HostSpec& spec, const Coordinate& x, const Coordinate& y, std::vector<Cut>& out) {
  check_coordinate(spec, x);
  check_coordinate(spec, y);
  out.clear();
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const HostFactor& f = spec.factor(i);
    if (x[i] == y[i]) continue;
    const std::uint32_t half = f.size() / 2;
    for (std::uint32_t j = 1; j <= f.cut_count(); ++j) {
      const std::uint32_t first = f.kind == FactorKind::Cycle ? j : 1;
      const std::uint32_t last = f.kind == FactorKind::Cycle ? j + half - 1 : j;
      const bool in_x = x[i] >= first && x[i] <= last;
      const bool in_y = y[i] >= first && y[i] <= last;
      if (in_x != in_y) out.push_back({i, j});
    }
  }
}

std::vector<Cut> separating_cuts(const HostSpec& spec, const Coordinate& x, const Coordinate& y) {
  std::vector<Cut> out;
  separating_cuts(spec, x, y, out);
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> factor_edges(const HostFactor& factor) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const std::uint32_t m = factor.size();
  for (std::uint32_t a = 1; a < m; ++a) out.emplace_back(a, a + 1);
  if (factor.kind == FactorKind::Cycle) out.emplace_back(1, m);
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> factor_cut_edges(const HostSpec& spec, const Cut& cut) {
  check_cut(spec, cut);
  const HostFactor& f = spec.factor(cut.factor);
  const std::uint32_t j = cut.index;
  if (f.kind == FactorKind::Path) return {{j, j + 1}};
  const std::uint32_t m = f.size();
  const auto wrap = [m](std::uint32_t label) { return (label + m - 1) % m + 1; };
  const auto ordered = [](std::uint32_t a, std::uint32_t b) {
    return std::pair{std::min(a, b), std::max(a, b)};
  };
  const std::uint32_t h = m / 2;
  return {ordered(wrap(j - 1 + m), j), ordered(j + h - 1, wrap(j + h))};
}

namespace {

// Lifts factor-level edges along factor i to the product graph.
std::vector<HostEdge> lift_edges(const HostSpec& spec, std::size_t i,
                                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::vector<HostEdge> out;
  const int shift = spec.shift(i);
  const FlatIndex field = (spec.factor(i).size() - 1) << shift;
  for (FlatIndex base = 0; base < spec.vertex_count(); ++base) {
    if (base & field) continue;
    for (const auto& [a, b] : edges) {
      const FlatIndex u = base | ((a - 1) << shift);
      const FlatIndex v = base | ((b - 1) << shift);
      out.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return out;
}

}  // namespace

std::vector<HostEdge> host_edges(const HostSpec& spec) {
  std::vector<HostEdge> out;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    auto lifted = lift_edges(spec, i, factor_edges(spec.factor(i)));
    out.insert(out.end(), lifted.begin(), lifted.end());
  }
  return out;
}

std::vector<HostEdge> cut_edges(const HostSpec& spec, const Cut& cut) {
  return lift_edges(spec, cut.factor, factor_cut_edges(spec, cut));
}

namespace {

void enumerate_into(std::vector<HostFactor>& prefix, int remaining, std::size_t max_factors, int min_exponent,
                    std::vector<HostSpec>& out) {
  if (!prefix.empty()) out.emplace_back(prefix);
  if (prefix.size() == max_factors) return;
  for (int e = std::max(1, min_exponent); e <= remaining; ++e) {
    for (FactorKind kind : {FactorKind::Cycle, FactorKind::Path}) {
      if (kind == FactorKind::Cycle && e < 2) continue;
      prefix.push_back({kind, e});
      enumerate_into(prefix, remaining - e, max_factors, min_exponent, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<HostSpec> enumerate_hosts(int max_n, std::size_t max_factors, int min_exponent) {
  std::vector<HostSpec> out;
  std::vector<HostFactor> prefix;
  enumerate_into(prefix, std::min(max_n, kMaxDim), max_factors, min_exponent, out);
  std::stable_sort(out.begin(), out.end(), [](const HostSpec& a, const HostSpec& b) {
    return a.dim() != b.dim() ? a.dim() < b.dim() : a.k() < b.k();
  });
  return out;
}

}  // namespace wirecube
