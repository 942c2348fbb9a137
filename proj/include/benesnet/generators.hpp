#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "benesnet/graph.hpp"

namespace benesnet {

// Identity of a network vertex: an n-bit column word and a level.
struct NodeLabel {
  std::uint32_t column = 0;  // n-bit value, bit 0 is the least significant
  std::uint32_t level = 0;

  friend bool operator==(const NodeLabel& a, const NodeLabel& b) {
    return a.column == b.column && a.level == b.level;
  }
};

enum class Network { butterfly, benes, augmented_benes };

inline const char* network_name(Network n) {
  switch (n) {
    case Network::butterfly: return "bf";
    case Network::benes: return "bb";
    case Network::augmented_benes: return "bba";
  }
  return "?";
}

// A generated network together with its label bookkeeping. Vertex indices
// are dense: index = level * 2^n + column, so label/index conversion is
// arithmetic and outputs are reproducible.
class LabeledNetwork {
 public:
  LabeledNetwork(Network kind, int dimension, std::uint32_t level_count, SwGraph graph)
      : kind_(kind), n_(dimension), levels_(level_count), graph_(std::move(graph)) {}

  Network kind() const { return kind_; }
  int dimension() const { return n_; }
  std::uint32_t level_count() const { return levels_; }
  std::uint32_t columns() const { return 1u << n_; }
  const SwGraph& graph() const { return graph_; }

  VertexId index_of(const NodeLabel& l) const {
    if (l.column >= columns() || l.level >= levels_)
      throw std::invalid_argument("node label out of range");
    return l.level * columns() + l.column;
  }
  NodeLabel label_of(VertexId v) const {
    if (v >= graph_.vertex_count()) throw std::invalid_argument("vertex index out of range");
    return NodeLabel{v % columns(), v / columns()};
  }

  // "<binary column>:<level>", column printed with n digits, high bit first.
  std::string label_string(VertexId v) const {
    NodeLabel l = label_of(v);
    std::string bits(static_cast<std::size_t>(n_), '0');
    for (int b = 0; b < n_; ++b)
      if (l.column & (1u << b)) bits[static_cast<std::size_t>(n_ - 1 - b)] = '1';
    return bits + ":" + std::to_string(l.level);
  }

 private:
  Network kind_;
  int n_;
  std::uint32_t levels_;
  SwGraph graph_;
};

namespace detail {

// Bit flipped by the cross edges between levels k and k+1 of the back-to-back
// construction: bit k on the way in, mirrored on the way out.
inline int benes_cross_bit(int n, int k) { return k <= n - 1 ? k : 2 * n - k - 1; }

// Column bits matched by the same-level edges at level k of the augmented
// construction. The nominal pair is {k, k-1} in the first half and
// {2n-k, 2n-k-1} in the second; indices outside [0, n-1] yield no matching,
// which is what makes the edge total come out to 2^{n-1}(12n-1).
inline std::vector<int> augmented_level_bits(int n, int k) {
  int a, b;
  if (k <= n) {
    a = k;
    b = k - 1;
  } else {
    a = 2 * n - k;
    b = 2 * n - k - 1;
  }
  std::vector<int> bits;
  if (a >= 0 && a <= n - 1) bits.push_back(a);
  if (b >= 0 && b <= n - 1 && b != a) bits.push_back(b);
  return bits;
}

}  // namespace detail

inline LabeledNetwork make_butterfly(int n) {
  if (n < 1) throw std::invalid_argument("butterfly dimension must be >= 1");
  const std::uint32_t cols = 1u << n;
  const std::uint32_t levels = static_cast<std::uint32_t>(n) + 1;
  auto idx = [cols](std::uint32_t j, std::uint32_t k) { return k * cols + j; };
  std::vector<Edge> edges;
  edges.reserve(std::size_t(n) * cols * 2);
  for (std::uint32_t k = 0; k + 1 < levels; ++k) {
    for (std::uint32_t j = 0; j < cols; ++j) {
      edges.push_back({idx(j, k), idx(j, k + 1)});
      edges.push_back({idx(j, k), idx(j ^ (1u << k), k + 1)});
    }
  }
  return LabeledNetwork(Network::butterfly, n, levels,
                        SwGraph::plain(std::size_t(cols) * levels, std::move(edges)));
}

inline LabeledNetwork make_benes(int n) {
  if (n < 1) throw std::invalid_argument("benes dimension must be >= 1");
  const std::uint32_t cols = 1u << n;
  const std::uint32_t levels = 2u * static_cast<std::uint32_t>(n) + 1;
  auto idx = [cols](std::uint32_t j, std::uint32_t k) { return k * cols + j; };
  std::vector<Edge> edges;
  edges.reserve(std::size_t(n) * cols * 4);
  for (std::uint32_t k = 0; k + 1 < levels; ++k) {
    std::uint32_t bit = 1u << detail::benes_cross_bit(n, static_cast<int>(k));
    for (std::uint32_t j = 0; j < cols; ++j) {
      edges.push_back({idx(j, k), idx(j, k + 1)});
      edges.push_back({idx(j, k), idx(j ^ bit, k + 1)});
    }
  }
  return LabeledNetwork(Network::benes, n, levels,
                        SwGraph::plain(std::size_t(cols) * levels, std::move(edges)));
}

inline LabeledNetwork make_augmented_benes(int n) {
  if (n < 1) throw std::invalid_argument("augmented benes dimension must be >= 1");
  const std::uint32_t cols = 1u << n;
  const std::uint32_t levels = 2u * static_cast<std::uint32_t>(n) + 1;
  auto idx = [cols](std::uint32_t j, std::uint32_t k) { return k * cols + j; };
  std::vector<Edge> edges;
  for (std::uint32_t k = 0; k + 1 < levels; ++k) {
    std::uint32_t bit = 1u << detail::benes_cross_bit(n, static_cast<int>(k));
    for (std::uint32_t j = 0; j < cols; ++j) {
      edges.push_back({idx(j, k), idx(j, k + 1)});
      edges.push_back({idx(j, k), idx(j ^ bit, k + 1)});
    }
  }
  for (std::uint32_t k = 0; k < levels; ++k) {
    for (int b : detail::augmented_level_bits(n, static_cast<int>(k))) {
      std::uint32_t bit = 1u << b;
      for (std::uint32_t j = 0; j < cols; ++j) {
        if (j < (j ^ bit)) edges.push_back({idx(j, k), idx(j ^ bit, k)});
      }
    }
  }
  return LabeledNetwork(Network::augmented_benes, n, levels,
                        SwGraph::plain(std::size_t(cols) * levels, std::move(edges)));
}

inline LabeledNetwork make_network(Network kind, int n) {
  switch (kind) {
    case Network::butterfly: return make_butterfly(n);
    case Network::benes: return make_benes(n);
    case Network::augmented_benes: return make_augmented_benes(n);
  }
  throw std::invalid_argument("unknown network kind");
}

// Parameters of the two-layer clique family: `a` cliques of X-vertices and
// `b` cliques of Y-vertices, all of size m, every X-vertex adjacent to every
// Y-vertex, with vertex weights alpha on X and beta on Y.
struct ClusterFamilyParams {
  int clique_size = 2;   // m >= 2
  int x_cliques = 1;     // a >= 1
  int y_cliques = 1;     // b >= 1
  Int128 x_weight = 1;   // alpha >= 1
  Int128 y_weight = 1;   // beta >= 1
};

struct ClusterFamily {
  SwGraph graph;
  // clique id per vertex: X cliques come first (0..a-1), then Y (a..a+b-1)
  std::vector<std::uint32_t> clique_of;
  int x_cliques;
  int y_cliques;
  int clique_size;

  bool is_x_vertex(VertexId v) const {
    return clique_of[v] < static_cast<std::uint32_t>(x_cliques);
  }
};

inline ClusterFamily make_cluster_family(const ClusterFamilyParams& p) {
  if (p.clique_size < 2) throw std::invalid_argument("clique size must be >= 2");
  if (p.x_cliques < 1 || p.y_cliques < 1)
    throw std::invalid_argument("clique counts must be >= 1");
  if (p.x_weight < Int128(1) || p.y_weight < Int128(1))
    throw std::invalid_argument("cluster weights must be >= 1");
  const std::uint32_t m = static_cast<std::uint32_t>(p.clique_size);
  const std::uint32_t a = static_cast<std::uint32_t>(p.x_cliques);
  const std::uint32_t b = static_cast<std::uint32_t>(p.y_cliques);
  const std::size_t nv = std::size_t(a + b) * m;
  std::vector<Edge> edges;
  std::vector<std::uint32_t> clique_of(nv);
  for (std::uint32_t c = 0; c < a + b; ++c) {
    for (std::uint32_t i = 0; i < m; ++i) {
      clique_of[std::size_t(c) * m + i] = c;
      for (std::uint32_t j = i + 1; j < m; ++j)
        edges.push_back({c * m + i, c * m + j});
    }
  }
  const std::uint32_t x_end = a * m;
  for (std::uint32_t x = 0; x < x_end; ++x)
    for (std::uint32_t y = x_end; y < nv; ++y) edges.push_back({x, y});
  std::vector<Int128> w(nv);
  for (std::size_t v = 0; v < nv; ++v) w[v] = v < x_end ? p.x_weight : p.y_weight;
  SwGraph g(nv, std::move(edges), std::move(w), std::vector<Int128>(nv, Int128(0)),
            std::vector<Int128>(std::size_t(a + b) * m * (m - 1) / 2 + std::size_t(x_end) * (nv - x_end),
                                Int128(1)));
  return ClusterFamily{std::move(g), std::move(clique_of), p.x_cliques, p.y_cliques,
                       p.clique_size};
}

}  // namespace benesnet
