#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wirecube/cube.hpp"
#include "wirecube/host.hpp"

namespace wirecube {

/// Bijection from Q_n onto the host's vertices: map()[v] is the flattened
/// host index of vertex v.
class Embedding {
 public:
  /// Throws std::invalid_argument if the map is the wrong length or "not a
  /// permutation".
  Embedding(HostSpec spec, std::vector<FlatIndex> map);

  [[nodiscard]] const HostSpec& host() const noexcept { return spec_; }
  [[nodiscard]] int dim() const noexcept { return spec_.dim(); }
  [[nodiscard]] std::span<const FlatIndex> map() const noexcept { return map_; }
  [[nodiscard]] FlatIndex operator()(Vertex v) const { return map_[v]; }
  /// inverse()[x] is the vertex placed at host index x.
  [[nodiscard]] std::vector<Vertex> inverse() const;

  /// Exchanges the images of u and v.
  void swap_images(Vertex u, Vertex v) noexcept { std::swap(map_[u], map_[v]); }

  friend bool operator==(const Embedding&, const Embedding&) = default;

 private:
  HostSpec spec_;
  std::vector<FlatIndex> map_;
};

/// k-order Gray code map: vertex v = v_1 ... v_k, split into blocks of n_i
/// bits, goes to (gray_rank(v_1), ..., gray_rank(v_k)).
[[nodiscard]] Embedding gray_embedding(const HostSpec& spec);

/// Host coordinate of v under the k-order Gray code map.
[[nodiscard]] Coordinate gray_coordinate(const HostSpec& spec, Vertex v);

/// Uniform random bijection, reproducible from seed.
[[nodiscard]] Embedding random_embedding(const HostSpec& spec, std::uint64_t seed);

/// {"host": "<spec>", "map": [...]}
[[nodiscard]] std::string to_json(const Embedding& e);
/// Parses and validates an embedding document; throws std::invalid_argument.
[[nodiscard]] Embedding embedding_from_json(const std::string& text);

void write_embedding_file(const std::string& path, const Embedding& e);
[[nodiscard]] Embedding read_embedding_file(const std::string& path);

}  // namespace wirecube
