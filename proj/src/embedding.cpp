#include "wirecube/embedding.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wirecube/rng.hpp"

namespace wirecube {

Embedding::Embedding(HostSpec spec, std::vector<FlatIndex> map) : spec_(std::move(spec)), map_(std::move(map)) {
  const std::size_t count = spec_.vertex_count();
  if (map_.size() != count) {
    throw std::invalid_argument("embedding map has " + std::to_string(map_.size()) + " entries, host " +
                                spec_.to_string() + " needs " + std::to_string(count));
  }
  std::vector<bool> seen(count, false);
  for (std::size_t v = 0; v < count; ++v) {
    const FlatIndex x = map_[v];
    if (x >= count) {
      throw std::invalid_argument("not a permutation: entry " + std::to_string(v) + " = " + std::to_string(x) +
                                  " is out of range");
    }
    if (seen[x]) {
      throw std::invalid_argument("not a permutation: host index " + std::to_string(x) + " used twice");
    }
    seen[x] = true;
  }
}

std::vector<Vertex> Embedding::inverse() const {
  std::vector<Vertex> inv(map_.size());
  for (std::size_t v = 0; v < map_.size(); ++v) inv[map_[v]] = static_cast<Vertex>(v);
  return inv;
}

Coordinate gray_coordinate(const HostSpec& spec, Vertex v) {
  if (v >= spec.vertex_count()) throw std::out_of_range("vertex outside Q_" + std::to_string(spec.dim()));
  Coordinate x(spec.k());
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const HostFactor& f = spec.factor(i);
    const Vertex block = (v >> spec.shift(i)) & (f.size() - 1);
    x[i] = gray_rank(block, f.exponent);
  }
  return x;
}

Embedding gray_embedding(const HostSpec& spec) {
  std::vector<FlatIndex> map(spec.vertex_count());
  for (Vertex v = 0; v < spec.vertex_count(); ++v) map[v] = flatten(spec, gray_coordinate(spec, v));
  return {spec, std::move(map)};
}

Embedding random_embedding(const HostSpec& spec, std::uint64_t seed) {
  std::vector<FlatIndex> map(spec.vertex_count());
  std::iota(map.begin(), map.end(), FlatIndex{0});
  Rng rng(seed);
  rng.shuffle(std::span<FlatIndex>(map));
  return {spec, std::move(map)};
}

std::string to_json(const Embedding& e) {
  nlohmann::json doc;
  doc["host"] = e.host().to_string();
  doc["map"] = std::vector<FlatIndex>(e.map().begin(), e.map().end());
  return doc.dump();
}

Embedding embedding_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("embedding file is not valid JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("host") || !doc.contains("map") || !doc["host"].is_string() ||
      !doc["map"].is_array()) {
    throw std::invalid_argument("embedding file must be {\"host\": string, \"map\": array}");
  }
  HostSpec spec = parse_host(doc["host"].get<std::string>());
  std::vector<FlatIndex> map;
  map.reserve(doc["map"].size());
  for (const auto& entry : doc["map"]) {
    if (!entry.is_number_unsigned()) throw std::invalid_argument("embedding map entries must be nonnegative integers");
    const auto value = entry.get<std::uint64_t>();
    if (value > std::numeric_limits<FlatIndex>::max()) throw std::invalid_argument("embedding map entry too large");
    map.push_back(static_cast<FlatIndex>(value));
  }
  return {std::move(spec), std::move(map)};
}

void write_embedding_file(const std::string& path, const Embedding& e) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << to_json(e) << '\n';
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

Embedding read_embedding_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open embedding file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return embedding_from_json(buf.str());
}

}  // namespace wirecube
