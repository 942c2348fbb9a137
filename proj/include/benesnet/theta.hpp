#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "benesnet/descriptors.hpp"
#include "benesnet/generators.hpp"
#include "benesnet/graph.hpp"

namespace benesnet {

// Djokovic-Winkler relation: edges {a,b} and {c,d} are related when
// d(b,d) + d(a,c) != d(a,d) + d(b,c). The test is symmetric in the edge
// orientations, so the stored endpoint order never matters.
inline bool theta_related(const DistanceOracle& d, const Edge& e, const Edge& f) {
  int lhs = d(e.v, f.v) + d(e.u, f.u);
  int rhs = d(e.u, f.v) + d(e.v, f.u);
  return lhs != rhs;
}

// Edge partition into the transitive closure classes of the relation above.
struct ThetaPartition {
  std::vector<std::uint32_t> class_of;              // per edge
  std::vector<std::vector<std::uint32_t>> classes;  // edge indices per class

  std::size_t class_count() const { return classes.size(); }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void merge(std::uint32_t a, std::uint32_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace detail

// Exhaustive O(|E|^2) pair testing followed by union-find. Classes are
// numbered by their smallest contained edge index.
inline ThetaPartition theta_star_classes(const SwGraph& g, const DistanceOracle& d) {
  const std::size_t ne = g.edge_count();
  detail::UnionFind uf(ne);
  for (std::size_t i = 0; i < ne; ++i) {
    for (std::size_t j = i + 1; j < ne; ++j) {
      if (theta_related(d, g.edge(i), g.edge(j)))
        uf.merge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
  }
  ThetaPartition part;
  part.class_of.assign(ne, 0);
  std::vector<std::int64_t> class_id_of_root(ne, -1);
  for (std::size_t i = 0; i < ne; ++i) {
    std::uint32_t root = uf.find(static_cast<std::uint32_t>(i));
    if (class_id_of_root[root] < 0) {
      class_id_of_root[root] = static_cast<std::int64_t>(part.classes.size());
      part.classes.emplace_back();
    }
    std::uint32_t cid = static_cast<std::uint32_t>(class_id_of_root[root]);
    part.class_of[i] = cid;
    part.classes[cid].push_back(static_cast<std::uint32_t>(i));
  }
  return part;
}

// True when the relation is already transitive on g, i.e. every pair of
// edges inside one closure class is directly related. Recorded as a
// diagnostic; the computation never assumes it.
inline bool theta_is_transitive(const SwGraph& g, const DistanceOracle& d,
                                const ThetaPartition& part) {
  for (const auto& cls : part.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (!theta_related(d, g.edge(cls[i]), g.edge(cls[j]))) return false;
  }
  return true;
}

// Quotient of g by one edge class: the connected components left after
// removing the class become vertices. Component weight is the member weight
// sum; component strength picks up member strengths plus the strengths of
// edges interior to the component; quotient edge strength aggregates the
// class edges joining the two components.
struct QuotientGraph {
  SwGraph graph;
  std::vector<std::uint32_t> component_of;        // original vertex -> quotient vertex
  std::vector<std::vector<VertexId>> members;     // quotient vertex -> original vertices
};

inline QuotientGraph quotient(const SwGraph& g, const ThetaPartition& part,
                              std::uint32_t class_id) {
  if (class_id >= part.class_count()) throw std::invalid_argument("class id out of range");
  const std::size_t nv = g.vertex_count();
  std::vector<std::uint32_t> comp(nv, UINT32_MAX);
  std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> adj(nv);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    adj[e.u].push_back({e.v, static_cast<std::uint32_t>(i)});
    adj[e.v].push_back({e.u, static_cast<std::uint32_t>(i)});
  }
  std::uint32_t ncomp = 0;
  std::vector<VertexId> stack;
  for (std::size_t s = 0; s < nv; ++s) {
    if (comp[s] != UINT32_MAX) continue;
    comp[s] = ncomp;
    stack.push_back(static_cast<VertexId>(s));
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (auto [y, ei] : adj[x]) {
        if (part.class_of[ei] == class_id) continue;
        if (comp[y] == UINT32_MAX) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
      }
    }
    ++ncomp;
  }

  std::vector<Int128> qw(ncomp, Int128(0)), qs(ncomp, Int128(0));
  std::vector<std::vector<VertexId>> members(ncomp);
  for (std::size_t v = 0; v < nv; ++v) {
    qw[comp[v]] += g.vertex_weight(static_cast<VertexId>(v));
    qs[comp[v]] += g.vertex_strength(static_cast<VertexId>(v));
    members[comp[v]].push_back(static_cast<VertexId>(v));
  }

  // deterministic quotient edge order: by (min component, max component)
  std::vector<std::vector<Int128>> cross(ncomp);
  std::vector<std::vector<std::uint32_t>> cross_cols(ncomp);
  auto add_cross = [&](std::uint32_t a, std::uint32_t b, const Int128& s) {
    if (a > b) std::swap(a, b);
    auto& cols = cross_cols[a];
    auto it = std::find(cols.begin(), cols.end(), b);
    if (it == cols.end()) {
      cols.push_back(b);
      cross[a].push_back(s);
    } else {
      cross[a][static_cast<std::size_t>(it - cols.begin())] += s;
    }
  };
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    std::uint32_t cu = comp[e.u], cv = comp[e.v];
    if (part.class_of[i] == class_id) {
      if (cu == cv)
        throw std::logic_error("theta class edge has both ends in one component");
      add_cross(cu, cv, g.edge_strength(i));
    } else {
      if (cu != cv) throw std::logic_error("non-class edge crosses components");
      qs[cu] += g.edge_strength(i);
    }
  }

  std::vector<Edge> qedges;
  std::vector<Int128> qse;
  for (std::uint32_t a = 0; a < ncomp; ++a) {
    std::vector<std::size_t> order(cross_cols[a].size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return cross_cols[a][x] < cross_cols[a][y]; });
    for (std::size_t k : order) {
      qedges.push_back({a, cross_cols[a][k]});
      qse.push_back(cross[a][k]);
    }
  }

  SwGraph qg(ncomp, std::move(qedges), std::move(qw), std::move(qs), std::move(qse));
  return QuotientGraph{std::move(qg), std::move(comp), std::move(members)};
}

// Descriptors by summation over all quotient graphs of the partition.
inline DescriptorSet cut_method_descriptors(const SwGraph& g, const ThetaPartition& part) {
  DescriptorSet total;
  for (std::uint32_t c = 0; c < part.class_count(); ++c) {
    QuotientGraph q = quotient(g, part, c);
    total += all_descriptors(q.graph);
  }
  return total;
}

inline DescriptorSet cut_method_descriptors(const SwGraph& g) {
  DistanceOracle d(g);
  ThetaPartition part = theta_star_classes(g, d);
  return cut_method_descriptors(g, part);
}

// Class ids ordered from the middle levels outward, which is the order the
// per-class closed forms use: position 0 is the class whose lowest touched
// level is highest (the mid-level cut), position n-1 touches level 0.
inline std::vector<std::uint32_t> level_ordered_classes(const LabeledNetwork& net,
                                                        const ThetaPartition& part) {
  const SwGraph& g = net.graph();
  std::vector<std::uint32_t> min_level(part.class_count(), UINT32_MAX);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    std::uint32_t lvl = std::min(net.label_of(g.edge(i).u).level, net.label_of(g.edge(i).v).level);
    std::uint32_t c = part.class_of[i];
    min_level[c] = std::min(min_level[c], lvl);
  }
  std::vector<std::uint32_t> order(part.class_count());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (min_level[a] != min_level[b]) return min_level[a] > min_level[b];
    return a < b;
  });
  return order;
}

}  // namespace benesnet
