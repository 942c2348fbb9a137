#pragma once

#include <ostream>
#include <string>

#include "benesnet/broadcast.hpp"
#include "benesnet/generators.hpp"
#include "benesnet/graph.hpp"
#include "benesnet/theta.hpp"

namespace benesnet {

// DOT with one node per vertex. Networks get "<binary column>:<level>"
// labels; plain graphs fall back to indices.
inline void write_dot(std::ostream& os, const SwGraph& g, const LabeledNetwork* net,
                      const std::string& name) {
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  n" << v;
    if (net) os << " [label=\"" << net->label_string(static_cast<VertexId>(v)) << "\"]";
    os << ";\n";
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    os << "  n" << g.edge(i).u << " -- n" << g.edge(i).v << ";\n";
  os << "}\n";
}

inline void write_adjacency_csv(std::ostream& os, const SwGraph& g) {
  os << "u,v\n";
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    os << g.edge(i).u << "," << g.edge(i).v << "\n";
}

// Quotient DOT carries the component weights and the aggregated edge
// strengths so the reduced graph is readable on its own.
inline void write_quotient_dot(std::ostream& os, const QuotientGraph& q,
                               const std::string& name) {
  const SwGraph& g = q.graph;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  c" << v << " [label=\"w=" << g.vertex_weight(static_cast<VertexId>(v))
       << " s=" << g.vertex_strength(static_cast<VertexId>(v)) << "\"];\n";
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    os << "  c" << g.edge(i).u << " -- c" << g.edge(i).v << " [label=\"" << g.edge_strength(i)
       << "\"];\n";
  }
  os << "}\n";
}

inline void write_quotient_weights_csv(std::ostream& os, const QuotientGraph& q) {
  os << "component_id,w_v,s_v,member_count\n";
  for (std::size_t v = 0; v < q.graph.vertex_count(); ++v) {
    os << v << "," << q.graph.vertex_weight(static_cast<VertexId>(v)) << ","
       << q.graph.vertex_strength(static_cast<VertexId>(v)) << "," << q.members[v].size() << "\n";
  }
}

inline void write_trace_csv(std::ostream& os, const LabeledNetwork& net,
                            const BroadcastTrace& trace) {
  os << "round,sender,receiver\n";
  for (std::size_t r = 0; r < trace.rounds.size(); ++r)
    for (auto [v, u] : trace.rounds[r])
      os << (r + 1) << "," << net.label_string(v) << "," << net.label_string(u) << "\n";
}

inline void write_tree_dot(std::ostream& os, const LabeledNetwork& net,
                           const BroadcastTrace& trace, const std::string& name) {
  os << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < net.graph().vertex_count(); ++v)
    os << "  n" << v << " [label=\"" << net.label_string(static_cast<VertexId>(v)) << "\"];\n";
  for (std::size_t r = 0; r < trace.rounds.size(); ++r)
    for (auto [v, u] : trace.rounds[r])
      os << "  n" << v << " -> n" << u << " [label=\"" << (r + 1) << "\"];\n";
  os << "}\n";
}

}  // namespace benesnet
