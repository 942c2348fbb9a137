#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "benesnet/generators.hpp"
#include "benesnet/graph.hpp"

namespace benesnet {

inline int eccentricity(const SwGraph& g, VertexId v) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<VertexId> queue(g.vertex_count());
  std::size_t head = 0, tail = 0;
  dist[v] = 0;
  queue[tail++] = v;
  int ecc = 0;
  while (head < tail) {
    VertexId x = queue[head++];
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        ecc = std::max(ecc, dist[y]);
        queue[tail++] = y;
      }
    }
  }
  if (tail != g.vertex_count()) throw std::invalid_argument("graph not connected");
  return ecc;
}

// One synchronous broadcast run: per round the set of (sender, receiver)
// transmissions, plus the resulting spanning tree as a parent map.
struct BroadcastTrace {
  VertexId source = 0;
  std::vector<std::vector<std::pair<VertexId, VertexId>>> rounds;
  std::vector<std::int64_t> parent;  // -1 for the source
  std::size_t total_rounds() const { return rounds.size(); }
};

namespace detail {

// Tie-breaking index relative to the source: columns are re-keyed by XOR
// with the source column and levels are reflected when the source sits on
// the top boundary. Any two boundary sources then drive byte-identical
// decisions, which keeps their broadcast trees isomorphic.
class SourceRelativeOrder {
 public:
  SourceRelativeOrder(const LabeledNetwork& net, VertexId source)
      : cols_(net.columns()),
        top_(net.level_count() - 1),
        src_(net.label_of(source)),
        reflect_(net.label_of(source).level == net.level_count() - 1) {}

  std::uint32_t operator()(VertexId v) const {
    std::uint32_t j = v % cols_;
    std::uint32_t k = v / cols_;
    std::uint32_t rj = j ^ src_.column;
    std::uint32_t rk = reflect_ ? top_ - k : k;
    return rk * cols_ + rj;
  }

 private:
  std::uint32_t cols_;
  std::uint32_t top_;
  NodeLabel src_;
  bool reflect_;
};

// Greedy furthest-first broadcast core, parameterized over the tie-break
// order. Every informed vertex transmits to at most one neighbor per round;
// all transmissions of a round land together. A sender prefers the
// uninformed neighbor that opens the most new ground (most neighbors not
// yet informed or claimed this round), then the one with the largest
// eccentricity, then the one furthest from the source. Remaining ties fall
// to the given order.
template <typename Order>
BroadcastTrace simulate_fdf_impl(const SwGraph& g, VertexId source, const Order& rel) {
  if (source >= g.vertex_count()) throw std::invalid_argument("source out of range");
  DistanceOracle d(g);
  std::vector<int> ecc(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    ecc[v] = d.eccentricity(static_cast<VertexId>(v));
  const std::uint16_t* from_source = d.row(source);

  std::vector<char> informed(g.vertex_count(), 0);
  std::vector<char> claimed(g.vertex_count(), 0);
  informed[source] = 1;
  std::size_t informed_count = 1;

  BroadcastTrace trace;
  trace.source = source;
  trace.parent.assign(g.vertex_count(), -1);

  std::vector<VertexId> senders{source};
  while (informed_count < g.vertex_count()) {
    std::sort(senders.begin(), senders.end(),
              [&](VertexId a, VertexId b) { return rel(a) < rel(b); });
    std::vector<std::pair<VertexId, VertexId>> sends;
    for (VertexId v : senders) {
      VertexId best = 0;
      bool found = false;
      long best_key0 = -1;
      int best_key1 = -1, best_key2 = -1;
      std::uint32_t best_rel = 0;
      for (VertexId u : g.neighbors(v)) {
        if (informed[u] || claimed[u]) continue;
        long opens = 0;
        for (VertexId w : g.neighbors(u))
          if (!informed[w] && !claimed[w]) ++opens;
        std::uint32_t r = rel(u);
        bool better;
        if (!found) {
          better = true;
        } else if (opens != best_key0) {
          better = opens > best_key0;
        } else if (ecc[u] != best_key1) {
          better = ecc[u] > best_key1;
        } else if (from_source[u] != best_key2) {
          better = from_source[u] > best_key2;
        } else {
          better = r < best_rel;
        }
        if (better) {
          found = true;
          best = u;
          best_key0 = opens;
          best_key1 = ecc[u];
          best_key2 = from_source[u];
          best_rel = r;
        }
      }
      if (found) {
        claimed[best] = 1;
        sends.push_back({v, best});
      }
    }
    for (auto [v, u] : sends) {
      informed[u] = 1;
      claimed[u] = 0;
      trace.parent[u] = v;
      senders.push_back(u);
      ++informed_count;
    }
    trace.rounds.push_back(std::move(sends));
  }
  return trace;
}

}  // namespace detail

// Network form: the final tie-break is the source-relative index, so every
// boundary source produces the same tree shape.
inline BroadcastTrace simulate_fdf(const LabeledNetwork& net, VertexId source) {
  return detail::simulate_fdf_impl(net.graph(), source,
                                   detail::SourceRelativeOrder(net, source));
}

inline BroadcastTrace simulate_fdf(const LabeledNetwork& net, const NodeLabel& source) {
  return simulate_fdf(net, net.index_of(source));
}

// Plain-graph form, tie-broken on vertex indices directly.
inline BroadcastTrace simulate_fdf(const SwGraph& g, VertexId source) {
  return detail::simulate_fdf_impl(g, source, [](VertexId v) { return v; });
}

// Checks every trace invariant: senders send at most once per round, every
// receiver was uninformed and adjacent to its sender, everyone ends up
// informed, and the parent map is a spanning tree rooted at the source.
// Returns an empty string when the trace is sound.
inline std::string validate_trace(const SwGraph& g, const BroadcastTrace& trace) {
  std::vector<char> informed(g.vertex_count(), 0);
  informed[trace.source] = 1;
  std::size_t count = 1;
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    std::vector<char> sent(g.vertex_count(), 0);
    for (auto [v, u] : trace.rounds[r]) {
      if (sent[v]) return "sender transmitted twice in round " + std::to_string(r + 1);
      sent[v] = 1;
      if (!informed[v]) return "uninformed sender in round " + std::to_string(r + 1);
      if (informed[u]) return "receiver already informed in round " + std::to_string(r + 1);
      if (!g.has_edge(v, u)) return "transmission along a non-edge";
      if (trace.parent[u] != static_cast<std::int64_t>(v)) return "parent map mismatch";
    }
    for (auto [v, u] : trace.rounds[r]) {
      (void)v;
      informed[u] = 1;
      ++count;
    }
  }
  if (count != g.vertex_count()) return "not all vertices informed";
  if (trace.parent[trace.source] != -1) return "source has a parent";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v == trace.source) continue;
    if (trace.parent[v] < 0) return "vertex missing from tree";
  }
  return {};
}

// Post-hoc checks of the broadcast-tree shape conditions. All three are
// reported, never enforced; the simulation itself is unconstrained.
struct TreeConditionReport {
  bool source_on_boundary = false;      // source level is 0 or 2n
  std::size_t source_children = 0;
  bool source_has_three_children = false;
  VertexId last_receiver = 0;
  bool last_on_boundary = false;        // final receiver level is 0 or 2n
  std::size_t last_parent_children = 0;
  bool last_parent_has_two_children = false;
};

inline TreeConditionReport check_tree_conditions(const LabeledNetwork& net,
                                                 const BroadcastTrace& trace) {
  TreeConditionReport rep;
  std::uint32_t top = net.level_count() - 1;
  auto on_boundary = [&](VertexId v) {
    std::uint32_t k = net.label_of(v).level;
    return k == 0 || k == top;
  };
  std::vector<std::size_t> children(net.graph().vertex_count(), 0);
  for (const auto& round : trace.rounds)
    for (auto [v, u] : round) {
      (void)u;
      ++children[v];
    }
  rep.source_on_boundary = on_boundary(trace.source);
  rep.source_children = children[trace.source];
  rep.source_has_three_children = rep.source_children == 3;
  if (!trace.rounds.empty() && !trace.rounds.back().empty()) {
    rep.last_receiver = trace.rounds.back().back().second;
    rep.last_on_boundary = on_boundary(rep.last_receiver);
    VertexId par = static_cast<VertexId>(trace.parent[rep.last_receiver]);
    rep.last_parent_children = children[par];
    rep.last_parent_has_two_children = rep.last_parent_children == 2;
  }
  return rep;
}

inline int broadcast_round_bound(int n, int ecc_of_source) {
  return ecc_of_source + (n % 2 == 0 ? 2 : 3);
}

inline int broadcast_lower_bound(std::size_t vertex_count, int ecc_of_source) {
  int lg = 0;
  while ((std::size_t{1} << lg) < vertex_count) ++lg;
  return std::max(ecc_of_source, lg);
}

struct BroadcastSweepRow {
  int n;
  NodeLabel source;
  int source_eccentricity;
  std::size_t rounds;
  int bound;
  bool meets_bound;
};

// Rounds per source over a dimension range on the augmented network.
// `boundary_only` restricts sources to levels 0 and 2n.
inline std::vector<BroadcastSweepRow> broadcast_sweep(int n_lo, int n_hi, bool boundary_only) {
  if (n_lo < 1 || n_hi > 6 || n_lo > n_hi) throw std::invalid_argument("empty sweep");
  std::vector<BroadcastSweepRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    LabeledNetwork net = make_augmented_benes(n);
    std::vector<std::uint32_t> levels;
    if (boundary_only) {
      levels = {0u, 2u * static_cast<std::uint32_t>(n)};
    } else {
      for (std::uint32_t k = 0; k < net.level_count(); ++k) levels.push_back(k);
    }
    for (std::uint32_t k : levels) {
      for (std::uint32_t j = 0; j < net.columns(); ++j) {
        NodeLabel src{j, k};
        VertexId s = net.index_of(src);
        int es = eccentricity(net.graph(), s);
        BroadcastTrace t = simulate_fdf(net, s);
        int bound = broadcast_round_bound(n, es);
        rows.push_back({n, src, es, t.total_rounds(), bound,
                        t.total_rounds() <= static_cast<std::size_t>(bound)});
      }
    }
  }
  return rows;
}

}  // namespace benesnet
