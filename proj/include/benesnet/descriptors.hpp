#pragma once

#include <string>

#include "benesnet/graph.hpp"
#include "benesnet/rational.hpp"

namespace benesnet {

// The seven distance-based indices. Everything is an exact integer; the
// edge-vertex Szeged value carries a factor 1/2 in its definition, so it is
// stored doubled and halved only at the output boundary.
struct DescriptorSet {
  Int128 wiener = 0;
  Int128 szeged_vertex = 0;
  Int128 szeged_edge = 0;
  Int128 szeged_edge_vertex_x2 = 0;
  Int128 padmakar_ivan = 0;
  Int128 mostar = 0;
  Int128 mostar_edge = 0;

  DescriptorSet& operator+=(const DescriptorSet& o) {
    wiener += o.wiener;
    szeged_vertex += o.szeged_vertex;
    szeged_edge += o.szeged_edge;
    szeged_edge_vertex_x2 += o.szeged_edge_vertex_x2;
    padmakar_ivan += o.padmakar_ivan;
    mostar += o.mostar;
    mostar_edge += o.mostar_edge;
    return *this;
  }
  friend DescriptorSet operator+(DescriptorSet a, const DescriptorSet& b) { return a += b; }

  friend bool operator==(const DescriptorSet& a, const DescriptorSet& b) {
    return a.wiener == b.wiener && a.szeged_vertex == b.szeged_vertex &&
           a.szeged_edge == b.szeged_edge &&
           a.szeged_edge_vertex_x2 == b.szeged_edge_vertex_x2 &&
           a.padmakar_ivan == b.padmakar_ivan && a.mostar == b.mostar &&
           a.mostar_edge == b.mostar_edge;
  }
  friend bool operator!=(const DescriptorSet& a, const DescriptorSet& b) { return !(a == b); }

  Rational szeged_edge_vertex() const { return Rational(szeged_edge_vertex_x2, Int128(2)); }
};

// Canonical short names used in CSV output and table reproduction.
inline constexpr const char* kDescriptorNames[7] = {"W",  "Sz_v", "Sz_e", "Sz_ev",
                                                    "PI", "Mo",   "Mo_e"};

// Value by position matching kDescriptorNames; Sz_ev is returned halved.
inline Rational descriptor_value(const DescriptorSet& d, int i) {
  switch (i) {
    case 0: return Rational(d.wiener);
    case 1: return Rational(d.szeged_vertex);
    case 2: return Rational(d.szeged_edge);
    case 3: return d.szeged_edge_vertex();
    case 4: return Rational(d.padmakar_ivan);
    case 5: return Rational(d.mostar);
    case 6: return Rational(d.mostar_edge);
  }
  throw std::out_of_range("descriptor index");
}

inline int descriptor_index(const std::string& name) {
  for (int i = 0; i < 7; ++i)
    if (name == kDescriptorNames[i]) return i;
  throw std::invalid_argument("unknown descriptor: " + name);
}

// Wiener index: sum over unordered vertex pairs of w(u) w(v) d(u,v).
inline Int128 wiener(const SwGraph& g, const DistanceOracle& d) {
  Int128 total = 0;
  for (VertexId u = 0; u + 1 < g.vertex_count(); ++u) {
    const std::uint16_t* row = d.row(u);
    for (VertexId v = u + 1; v < g.vertex_count(); ++v)
      total += g.vertex_weight(u) * g.vertex_weight(v) * Int128(row[v]);
  }
  return total;
}

// The three Szeged-type indices in one pass over the edges.
inline DescriptorSet szeged_family(const SwGraph& g, const DistanceOracle& d) {
  DescriptorSet out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    EdgeSideCounts c = edge_side_counts(g, d, i);
    const Int128& s = g.edge_strength(i);
    out.szeged_vertex += s * c.weight_near_u * c.weight_near_v;
    out.szeged_edge += s * c.strength_near_u * c.strength_near_v;
    out.szeged_edge_vertex_x2 +=
        s * (c.weight_near_u * c.strength_near_v + c.strength_near_u * c.weight_near_v);
  }
  return out;
}

inline Int128 pi_index(const SwGraph& g, const DistanceOracle& d) {
  Int128 total = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    EdgeSideCounts c = edge_side_counts(g, d, i);
    total += g.edge_strength(i) * (c.strength_near_u + c.strength_near_v);
  }
  return total;
}

struct MostarPair {
  Int128 mostar;
  Int128 mostar_edge;
};

inline MostarPair mostar_family(const SwGraph& g, const DistanceOracle& d) {
  MostarPair out{0, 0};
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    EdgeSideCounts c = edge_side_counts(g, d, i);
    out.mostar += g.edge_strength(i) * (c.weight_near_u - c.weight_near_v).abs();
    out.mostar_edge += g.edge_strength(i) * (c.strength_near_u - c.strength_near_v).abs();
  }
  return out;
}

// All seven indices with a single distance table and a single side-count
// pass per edge. This is the definition-level computation the other two
// methods are checked against.
inline DescriptorSet all_descriptors(const SwGraph& g, const DistanceOracle& d) {
  DescriptorSet out;
  out.wiener = wiener(g, d);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    EdgeSideCounts c = edge_side_counts(g, d, i);
    const Int128& s = g.edge_strength(i);
    out.szeged_vertex += s * c.weight_near_u * c.weight_near_v;
    out.szeged_edge += s * c.strength_near_u * c.strength_near_v;
    out.szeged_edge_vertex_x2 +=
        s * (c.weight_near_u * c.strength_near_v + c.strength_near_u * c.weight_near_v);
    out.padmakar_ivan += s * (c.strength_near_u + c.strength_near_v);
    out.mostar += s * (c.weight_near_u - c.weight_near_v).abs();
    out.mostar_edge += s * (c.strength_near_u - c.strength_near_v).abs();
  }
  return out;
}

inline DescriptorSet all_descriptors(const SwGraph& g) {
  DistanceOracle d(g);
  return all_descriptors(g, d);
}

}  // namespace benesnet
