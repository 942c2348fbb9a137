#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "benesnet/closed_forms.hpp"
#include "benesnet/descriptors.hpp"
#include "benesnet/generators.hpp"
#include "benesnet/graph.hpp"

namespace benesnet {

// Table of efficiency figures for one network instance. The raw Wiener
// value doubles as the traditional "average distance" figure; the
// normalized variant (per vertex pair) is carried alongside.
struct NetworkParams {
  Int128 diameter = 0;
  Int128 wiener = 0;
  Rational avg_distance;        // wiener / C(|V|, 2)
  Rational traffic_density;     // wiener * |V| / |E|
  Rational throughput;          // |E| / diameter
  Rational graph_density;       // 2|E| / (|V| (|V|-1))
  Rational total_connectivity;  // |E| / (|V| (|V|-1))

  friend bool operator==(const NetworkParams& a, const NetworkParams& b) {
    return a.diameter == b.diameter && a.wiener == b.wiener &&
           a.avg_distance == b.avg_distance && a.traffic_density == b.traffic_density &&
           a.throughput == b.throughput && a.graph_density == b.graph_density &&
           a.total_connectivity == b.total_connectivity;
  }
  friend bool operator!=(const NetworkParams& a, const NetworkParams& b) { return !(a == b); }
};

inline constexpr const char* kParamNames[7] = {
    "diameter",      "wiener",        "avg_distance",      "message_traffic_density",
    "network_throughput", "graph_density", "total_connectivity"};

inline Rational param_value(const NetworkParams& p, int i) {
  switch (i) {
    case 0: return Rational(p.diameter);
    case 1: return Rational(p.wiener);
    case 2: return p.avg_distance;
    case 3: return p.traffic_density;
    case 4: return p.throughput;
    case 5: return p.graph_density;
    case 6: return p.total_connectivity;
  }
  throw std::out_of_range("parameter index");
}

// Parameters measured directly on a graph: BFS diameter, definition-level
// Wiener, and the |V|/|E| ratios.
inline NetworkParams measure_params(const SwGraph& g) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("network parameters need at least two vertices");
  DistanceOracle d(g);
  NetworkParams p;
  p.diameter = Int128(d.diameter());
  p.wiener = wiener(g, d);
  Int128 V(static_cast<long long>(g.vertex_count()));
  Int128 E(static_cast<long long>(g.edge_count()));
  p.avg_distance = Rational(p.wiener) / Rational(V * (V - Int128(1)) / Int128(2));
  p.traffic_density = Rational(p.wiener * V, E);
  p.throughput = Rational(E, p.diameter);
  p.graph_density = Rational(Int128(2) * E, V * (V - Int128(1)));
  p.total_connectivity = Rational(E, V * (V - Int128(1)));
  return p;
}

// Parameters from the closed forms, n >= 2. Note the traffic density of the
// augmented network: the factor is W |V| / |E| with |E| = 2^{n-1}(12n-1),
// i.e. denominator 6(12n-1).
inline NetworkParams formula_params(Network net, int n) {
  if (n < 2) throw std::invalid_argument("parameter formulas require n >= 2");
  if (net == Network::butterfly)
    throw std::invalid_argument("parameter formulas exist for bb and bba only");
  Int128 p2 = Int128::pow2(static_cast<unsigned>(n));
  Int128 V = Int128(2 * n + 1) * p2;
  NetworkParams p;
  p.diameter = Int128(2 * n);
  if (net == Network::benes) {
    Int128 poly = (Int128(10 * n * n * n) - Int128(9 * n * n) + Int128(50 * n) - Int128(69)) * p2 +
                  Int128(69);
    p.wiener = detail::to_exact_int(Rational(p2 * poly, Int128(3)), "W");
    p.traffic_density = Rational(p2 * Int128(2 * n + 1) * poly, Int128(12 * n));
    p.throughput = Rational(Int128::pow2(static_cast<unsigned>(n + 1)));
    p.graph_density = Rational(Int128(8 * n), Int128(2 * n + 1) * (V - Int128(1)));
    p.total_connectivity = Rational(Int128(4 * n), Int128(2 * n + 1) * (V - Int128(1)));
    p.avg_distance = Rational(p.wiener) / Rational(V * (V - Int128(1)) / Int128(2));
  } else {
    Int128 poly = (Int128(20 * n * n * n) - Int128(36 * n * n) + Int128(148 * n) - Int128(207)) * p2 +
                  Int128(207);
    p.wiener = detail::to_exact_int(Rational(p2 * poly, Int128(6)), "W");
    p.traffic_density =
        Rational(Int128::pow2(static_cast<unsigned>(n + 1)) * Int128(2 * n + 1) * poly,
                 Int128(6) * Int128(12 * n - 1));
    p.throughput = Rational(Int128::pow2(static_cast<unsigned>(n - 2)) * Int128(12 * n - 1),
                            Int128(n));
    p.graph_density = Rational(Int128(12 * n - 1), Int128(2 * n + 1) * (V - Int128(1)));
    p.total_connectivity =
        Rational(Int128(12 * n - 1), Int128(2) * Int128(2 * n + 1) * (V - Int128(1)));
    p.avg_distance = Rational(p.wiener) / Rational(V * (V - Int128(1)) / Int128(2));
  }
  return p;
}

struct SweepRow {
  Network network;
  int n;
  const char* parameter;
  Rational value;
  Rational benes_over_augmented;  // same (n, parameter) ratio, bb / bba
};

// Formula-side parameter sweep over both networks with the pairwise
// bb/bba ratio attached to every row.
inline std::vector<SweepRow> comparison_sweep(int n_lo, int n_hi) {
  if (n_lo < 2 || n_hi > 10 || n_lo > n_hi) throw std::invalid_argument("empty sweep");
  std::vector<SweepRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    NetworkParams bb = formula_params(Network::benes, n);
    NetworkParams ba = formula_params(Network::augmented_benes, n);
    for (int i = 0; i < 7; ++i) {
      Rational ratio = param_value(bb, i) / param_value(ba, i);
      rows.push_back({Network::benes, n, kParamNames[i], param_value(bb, i), ratio});
      rows.push_back({Network::augmented_benes, n, kParamNames[i], param_value(ba, i), ratio});
    }
  }
  return rows;
}

}  // namespace benesnet
