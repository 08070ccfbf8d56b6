#include "wirecube/wirelength.hpp"

#include <stdexcept>

namespace wirecube {

std::string_view to_string(WirelengthMethod m) noexcept {
  return m == WirelengthMethod::Direct ? "direct" : "cut_sum";
}

WirelengthReport wl_direct(const Embedding& e) {
  const HostSpec& spec = e.host();
  const auto map = e.map();
  WirelengthReport report;
  report.method = WirelengthMethod::Direct;
  for (Vertex v = 0; v < map.size(); ++v) {
    for (int b = 0; b < spec.dim(); ++b) {
      const Vertex u = v | (Vertex{1} << b);
      if (u == v) continue;
      report.total += flat_distance(spec, map[v], map[u]);
    }
  }
  return report;
}

VertexSubset preimage(const Embedding& e, const InducedSet& set) {
  VertexSubset s(e.dim());
  const auto map = e.map();
  for (Vertex v = 0; v < map.size(); ++v) {
    if (contains(e.host(), set, map[v])) s.insert(v);
  }
  return s;
}

std::vector<std::uint64_t> factor_cut_thetas(const Embedding& e, std::size_t factor) {
  const HostSpec& spec = e.host();
  const HostFactor& f = spec.factor(factor);
  const auto map = e.map();

  // layers[l] holds the cube vertices whose image has label l + 1 in this factor
  std::vector<std::vector<Vertex>> layers(f.size());
  for (Vertex v = 0; v < map.size(); ++v) layers[spec.label(map[v], factor) - 1].push_back(v);

  std::vector<std::uint64_t> thetas;
  thetas.reserve(f.cut_count());
  VertexSubset s(e.dim());
  const auto add = [&s](const std::vector<Vertex>& layer) {
    for (Vertex v : layer) s.toggle(v);
  };

  if (f.kind == FactorKind::Path) {
    for (std::uint32_t j = 1; j <= f.cut_count(); ++j) {
      add(layers[j - 1]);
      thetas.push_back(theta(s));
    }
    return thetas;
  }

  const std::uint32_t half = f.size() / 2;
  for (std::uint32_t l = 0; l < half; ++l) add(layers[l]);
  thetas.push_back(theta(s));
  for (std::uint32_t j = 2; j <= half; ++j) {
    add(layers[j - 2]);         // drop label j - 1
    add(layers[j + half - 2]);  // take label j + half - 1
    thetas.push_back(theta(s));
  }
  return thetas;
}

std::uint64_t factor_cut_sum(const Embedding& e, std::size_t factor) {
  std::uint64_t total = 0;
  for (std::uint64_t t : factor_cut_thetas(e, factor)) total += t;
  return total;
}

WirelengthReport wl_cut(const Embedding& e) {
  const HostSpec& spec = e.host();
  WirelengthReport report;
  report.method = WirelengthMethod::CutSum;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const auto thetas = factor_cut_thetas(e, i);
    for (std::size_t j = 0; j < thetas.size(); ++j) {
      report.per_cut.push_back({Cut{i, static_cast<std::uint32_t>(j + 1)}, thetas[j]});
      report.total += thetas[j];
    }
  }
  return report;
}

VertexSubset gray_cut_preimage(const HostSpec& spec, const Cut& cut) {
  const InducedSet set = induced_set(spec, cut);
  const int own = spec.factor(cut.factor).exponent;
  const int after = spec.shift(cut.factor);
  const int before = spec.dim() - own - after;
  VertexSubset s = gray_preimage_interval(set.first, set.last, own);
  if (after > 0) s = block_product(s, VertexSubset::full(after));
  if (before > 0) s = block_product(VertexSubset::full(before), s);
  return s;
}

std::uint64_t gray_cut_sum(const HostSpec& spec, std::size_t factor) {
  std::uint64_t total = 0;
  for (std::uint32_t j = 1; j <= spec.factor(factor).cut_count(); ++j) {
    total += theta(gray_cut_preimage(spec, Cut{factor, j}));
  }
  return total;
}

bool formula_applies(const HostSpec& spec) noexcept {
  for (const auto& f : spec.factors()) {
    if (f.exponent < 2) return false;
  }
  return true;
}

std::uint64_t formula_term(const HostSpec& spec, std::size_t factor) {
  const HostFactor& f = spec.factor(factor);
  const int ni = f.exponent;
  if (ni < 2) {
    throw std::invalid_argument("closed form needs every factor exponent >= 2; factor " +
                                std::to_string(factor + 1) + " of " + spec.to_string() + " has exponent " +
                                std::to_string(ni));
  }
  const std::uint64_t scale = std::uint64_t{1} << (spec.dim() - ni);
  const std::uint64_t tail = std::uint64_t{1} << (ni - 1);
  if (f.kind == FactorKind::Cycle) return scale * ((std::uint64_t{3} << (2 * ni - 3)) - tail);
  return scale * ((std::uint64_t{1} << (2 * ni - 1)) - tail);
}

FormulaResult formula_wl(const HostSpec& spec) {
  FormulaResult result;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const std::uint64_t value = formula_term(spec, i);
    result.terms.push_back({i, value});
    result.total += value;
  }
  return result;
}

}  // namespace wirecube
