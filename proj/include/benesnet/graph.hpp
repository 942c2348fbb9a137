#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "benesnet/checked_int.hpp"

namespace benesnet {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
};

// Graph carrying a weight per vertex, a strength per vertex and a strength
// per edge. A plain graph is the special case w=1, vertex strength 0,
// edge strength 1; quotient graphs use the general form.
//
// The constructor validates edge sanity and connectivity up front so every
// later computation can assume both.
class SwGraph {
 public:
  SwGraph(std::size_t vertex_count, std::vector<Edge> edges,
          std::vector<Int128> vertex_weight, std::vector<Int128> vertex_strength,
          std::vector<Int128> edge_strength)
      : vertex_count_(vertex_count),
        edges_(std::move(edges)),
        vertex_weight_(std::move(vertex_weight)),
        vertex_strength_(std::move(vertex_strength)),
        edge_strength_(std::move(edge_strength)) {
    if (vertex_count_ == 0) throw std::invalid_argument("graph must have at least one vertex");
    if (vertex_weight_.size() != vertex_count_ || vertex_strength_.size() != vertex_count_)
      throw std::invalid_argument("vertex weight/strength size mismatch");
    if (edge_strength_.size() != edges_.size())
      throw std::invalid_argument("edge strength size mismatch");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (const Edge& e : edges_) {
      if (e.u >= vertex_count_ || e.v >= vertex_count_)
        throw std::invalid_argument("edge endpoint out of range");
      if (e.u == e.v) throw std::invalid_argument("self-loop not allowed");
      std::uint64_t key = (std::uint64_t(std::min(e.u, e.v)) << 32) | std::max(e.u, e.v);
      if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
    }
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      if (vertex_weight_[v].is_negative() || vertex_strength_[v].is_negative())
        throw std::invalid_argument("negative vertex weight or strength");
    }
    for (const Int128& s : edge_strength_)
      if (s.is_negative()) throw std::invalid_argument("negative edge strength");
    build_adjacency();
    check_connected();
  }

  static SwGraph plain(std::size_t vertex_count, std::vector<Edge> edges) {
    std::size_t ne = edges.size();
    return SwGraph(vertex_count, std::move(edges),
                   std::vector<Int128>(vertex_count, Int128(1)),
                   std::vector<Int128>(vertex_count, Int128(0)),
                   std::vector<Int128>(ne, Int128(1)));
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  const Int128& vertex_weight(VertexId v) const { return vertex_weight_[v]; }
  const Int128& vertex_strength(VertexId v) const { return vertex_strength_[v]; }
  const Int128& edge_strength(std::size_t i) const { return edge_strength_[i]; }

  Int128 total_vertex_weight() const {
    Int128 t = 0;
    for (const Int128& w : vertex_weight_) t += w;
    return t;
  }
  Int128 total_vertex_strength() const {
    Int128 t = 0;
    for (const Int128& s : vertex_strength_) t += s;
    return t;
  }
  Int128 total_edge_strength() const {
    Int128 t = 0;
    for (const Int128& s : edge_strength_) t += s;
    return t;
  }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  bool has_edge(VertexId u, VertexId v) const {
    const auto& nb = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    VertexId other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    return std::find(nb.begin(), nb.end(), other) != nb.end();
  }

  // Index of the edge {u,v} regardless of stored orientation.
  std::size_t edge_index(VertexId u, VertexId v) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if ((edges_[i].u == u && edges_[i].v == v) || (edges_[i].u == v && edges_[i].v == u))
        return i;
    }
    throw std::invalid_argument("not an edge of the graph");
  }

 private:
  void build_adjacency() {
    adjacency_.assign(vertex_count_, {});
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
  }

  void check_connected() const {
    std::vector<char> visited(vertex_count_, 0);
    std::queue<VertexId> q;
    q.push(0);
    visited[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (VertexId y : adjacency_[x]) {
        if (!visited[y]) {
          visited[y] = 1;
          ++reached;
          q.push(y);
        }
      }
    }
    if (reached != vertex_count_) throw std::invalid_argument("graph not connected");
  }

  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<Int128> vertex_weight_;
  std::vector<Int128> vertex_strength_;
  std::vector<Int128> edge_strength_;
  std::vector<std::vector<VertexId>> adjacency_;
};

// All-pairs shortest-path table from one BFS per vertex (unit edge lengths).
class DistanceOracle {
 public:
  explicit DistanceOracle(const SwGraph& g)
      : n_(g.vertex_count()), table_(n_ * n_, kUnreached) {
    std::vector<VertexId> queue(n_);
    for (std::size_t s = 0; s < n_; ++s) {
      std::uint16_t* row = table_.data() + s * n_;
      std::size_t head = 0, tail = 0;
      row[s] = 0;
      queue[tail++] = static_cast<VertexId>(s);
      while (head < tail) {
        VertexId x = queue[head++];
        std::uint16_t dx = row[x];
        for (VertexId y : g.neighbors(x)) {
          if (row[y] == kUnreached) {
            row[y] = static_cast<std::uint16_t>(dx + 1);
            queue[tail++] = y;
          }
        }
      }
      if (tail != n_) throw std::invalid_argument("graph not connected");
      for (std::size_t v = 0; v < n_; ++v) diameter_ = std::max(diameter_, row[v]);
    }
  }

  std::size_t vertex_count() const { return n_; }
  std::uint16_t operator()(VertexId u, VertexId v) const { return table_[std::size_t(u) * n_ + v]; }
  const std::uint16_t* row(VertexId u) const { return table_.data() + std::size_t(u) * n_; }
  std::uint16_t diameter() const { return diameter_; }

  std::uint16_t eccentricity(VertexId v) const {
    const std::uint16_t* r = row(v);
    std::uint16_t e = 0;
    for (std::size_t x = 0; x < n_; ++x) e = std::max(e, r[x]);
    return e;
  }

 private:
  static constexpr std::uint16_t kUnreached = 0xffff;
  std::size_t n_;
  std::vector<std::uint16_t> table_;
  std::uint16_t diameter_ = 0;
};

inline DistanceOracle all_pairs_distances(const SwGraph& g) { return DistanceOracle(g); }

// Distance from a vertex to an edge, taken as the minimum over the edge's
// endpoints. This is the convention the side counts below rely on.
inline int vertex_to_edge_distance(const DistanceOracle& d, VertexId vertex, const Edge& e) {
  return std::min(d(vertex, e.u), d(vertex, e.v));
}

// Side quantities of an edge {u,v}: total vertex weight strictly closer to
// each endpoint, and total strength (vertex strength plus edge strength of
// strictly closer edges). Equidistant items count for neither side.
struct EdgeSideCounts {
  Int128 weight_near_u;
  Int128 weight_near_v;
  Int128 strength_near_u;
  Int128 strength_near_v;
};

// Side counts with explicit endpoint roles; {u,v} must be an edge of g.
inline EdgeSideCounts edge_side_counts(const SwGraph& g, const DistanceOracle& d,
                                       VertexId u, VertexId v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("not an edge of the graph");
  EdgeSideCounts c{0, 0, 0, 0};
  const std::uint16_t* du = d.row(u);
  const std::uint16_t* dv = d.row(v);
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    if (du[x] < dv[x]) {
      c.weight_near_u += g.vertex_weight(static_cast<VertexId>(x));
      c.strength_near_u += g.vertex_strength(static_cast<VertexId>(x));
    } else if (dv[x] < du[x]) {
      c.weight_near_v += g.vertex_weight(static_cast<VertexId>(x));
      c.strength_near_v += g.vertex_strength(static_cast<VertexId>(x));
    }
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    std::uint16_t eu = std::min(du[e.u], du[e.v]);
    std::uint16_t ev = std::min(dv[e.u], dv[e.v]);
    if (eu < ev) {
      c.strength_near_u += g.edge_strength(i);
    } else if (ev < eu) {
      c.strength_near_v += g.edge_strength(i);
    }
  }
  return c;
}

inline EdgeSideCounts edge_side_counts(const SwGraph& g, const DistanceOracle& d,
                                       std::size_t edge_index) {
  const Edge& e = g.edge(edge_index);
  return edge_side_counts(g, d, e.u, e.v);
}

}  // namespace benesnet
