// Acceptance suite: every criterion below runs at its stated tolerance
// (exact equality throughout) and prints one PASS/FAIL line. Exit status is
// nonzero when any criterion fails.

#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "benesnet/broadcast.hpp"
#include "benesnet/closed_forms.hpp"
#include "benesnet/descriptors.hpp"
#include "benesnet/generators.hpp"
#include "benesnet/netparams.hpp"
#include "benesnet/theta.hpp"

using namespace benesnet;

namespace {

int failures = 0;
int criterion_no = 0;

void report(const std::string& what, bool pass, const std::string& detail = {}) {
  ++criterion_no;
  std::printf("[%d/9] %s  %s%s%s\n", criterion_no, pass ? "PASS" : "FAIL", what.c_str(),
              detail.empty() ? "" : "  -- ", detail.c_str());
  if (!pass) ++failures;
}

DescriptorSet make_set(long long w, long long szv, long long sze, long long szev, long long pi,
                       long long mo, long long moe) {
  DescriptorSet d;
  d.wiener = w;
  d.szeged_vertex = szv;
  d.szeged_edge = sze;
  d.szeged_edge_vertex_x2 = Int128(szev) * Int128(2);
  d.padmakar_ivan = pi;
  d.mostar = mo;
  d.mostar_edge = moe;
  return d;
}

// Frozen known-good descriptor values, n = 2..6.
const std::map<int, DescriptorSet> kBenesTable = {
    {2, make_set(492, 2912, 3840, 3344, 736, 192, 224)},
    {3, make_set(5944, 69952, 129824, 95392, 7296, 1408, 1728)},
    {4, make_set(53872, 1247872, 2728576, 1848128, 54400, 8448, 10624)},
    {5, make_set(412384, 18711808, 45143424, 29116032, 350208, 45568, 69376)},
    {6, make_set(2823616, 250456576, 645950464, 402967808, 2059776, 250880, 437760)},
};
const std::map<int, DescriptorSet> kAugmentedTable = {
    {2, make_set(418, 1270, 6148, 2752, 1176, 224, 464)},
    {3, make_set(5108, 35628, 191464, 82032, 10768, 1728, 3808)},
    {4, make_set(47016, 726616, 4200592, 1741984, 78368, 10624, 24000)},
    {5, make_set(365136, 12043440, 73545120, 29729088, 501056, 58112, 132992)},
    {6, make_set(2531488, 173578592, 1105984576, 438073984, 2945152, 296448, 683776)},
};

std::string mismatch(const DescriptorSet& a, const DescriptorSet& b) {
  std::ostringstream os;
  for (int i = 0; i < 7; ++i)
    if (descriptor_value(a, i) != descriptor_value(b, i))
      os << kDescriptorNames[i] << "=" << descriptor_value(a, i) << " want "
         << descriptor_value(b, i) << " ";
  return os.str();
}

struct Cache {
  std::map<std::pair<int, int>, DescriptorSet> brute;  // (kind, n)
  DescriptorSet get(Network kind, int n) {
    auto key = std::make_pair(static_cast<int>(kind), n);
    auto it = brute.find(key);
    if (it != brute.end()) return it->second;
    DescriptorSet d = all_descriptors(make_network(kind, n).graph());
    brute[key] = d;
    return d;
  }
};
Cache cache;

void criterion1_tables() {
  std::string detail;
  bool ok = true;
  for (int n = 2; n <= 6; ++n) {
    DescriptorSet bb = cache.get(Network::benes, n);
    if (bb != kBenesTable.at(n)) {
      ok = false;
      detail += "bb n=" + std::to_string(n) + ": " + mismatch(bb, kBenesTable.at(n));
    }
    DescriptorSet ba = cache.get(Network::augmented_benes, n);
    if (ba != kAugmentedTable.at(n)) {
      ok = false;
      detail += "bba n=" + std::to_string(n) + ": " + mismatch(ba, kAugmentedTable.at(n));
    }
    // the halved Szeged variant must stay integral on these instances
    if (bb.szeged_edge_vertex_x2 % Int128(2) != Int128(0) ||
        ba.szeged_edge_vertex_x2 % Int128(2) != Int128(0)) {
      ok = false;
      detail += "odd doubled Sz_ev at n=" + std::to_string(n) + " ";
    }
  }
  report("table regression: definition-level descriptors, n=2..6, exact", ok, detail);
}

void criterion2_three_way() {
  std::string detail;
  bool ok = true;
  for (int n = 2; n <= 8; ++n) {
    for (Network kind : {Network::benes, Network::augmented_benes}) {
      DescriptorSet brute = cache.get(kind, n);
      DescriptorSet closed = network_closed_forms(kind, n);
      if (brute != closed) {
        ok = false;
        detail += std::string(network_name(kind)) + " n=" + std::to_string(n) +
                  " closed: " + mismatch(brute, closed);
      }
      if (n <= 5) {
        DescriptorSet cuts = cut_method_descriptors(make_network(kind, n).graph());
        if (brute != cuts) {
          ok = false;
          detail += std::string(network_name(kind)) + " n=" + std::to_string(n) +
                    " cuts: " + mismatch(brute, cuts);
        }
      }
    }
  }
  report("three-way agreement: brute==cuts==closed n=2..5, brute==closed n=6..8", ok, detail);
}

void criterion3_theta_structure() {
  std::string detail;
  bool ok = true;
  for (int n = 2; n <= 5 && ok; ++n) {
    for (Network kind : {Network::benes, Network::augmented_benes}) {
      LabeledNetwork net = make_network(kind, n);
      DistanceOracle d(net.graph());
      ThetaPartition p = theta_star_classes(net.graph(), d);
      if (p.class_count() != std::size_t(n)) {
        ok = false;
        detail = std::string(network_name(kind)) + " n=" + std::to_string(n) + ": " +
                 std::to_string(p.class_count()) + " classes";
        break;
      }
      auto order = level_ordered_classes(net, p);
      if (kind == Network::benes) {
        for (int delta = 1; delta <= n && ok; ++delta) {
          QuotientGraph q = quotient(net.graph(), p, order[std::size_t(delta - 1)]);
          std::size_t side_a = std::size_t(1) << (delta + 1);
          std::size_t side_b = std::size_t(1) << (n - delta + 1);
          // structural complete-bipartite check with the expected weights
          bool shape = q.graph.vertex_count() == side_a + side_b &&
                       q.graph.edge_count() == side_a * side_b;
          Int128 wa = Int128::pow2(unsigned(n - delta)) * Int128(n - delta + 1);
          Int128 sa = Int128::pow2(unsigned(n - delta + 1)) * Int128(n - delta);
          Int128 wb = Int128::pow2(unsigned(delta - 1)) * Int128(2 * delta - 1);
          Int128 sb = Int128::pow2(unsigned(delta + 1)) * Int128(delta - 1);
          std::size_t na = 0, nb = 0;
          for (VertexId v = 0; v < q.graph.vertex_count(); ++v) {
            bool is_a = q.graph.vertex_weight(v) == wa && q.graph.vertex_strength(v) == sa;
            bool is_b = q.graph.vertex_weight(v) == wb && q.graph.vertex_strength(v) == sb;
            na += is_a;
            nb += is_b;
            // sides must not mix: every neighbor of an a-vertex is a b-vertex
            if (is_a) {
              for (VertexId y : q.graph.neighbors(v)) {
                shape = shape && !(q.graph.vertex_weight(y) == wa &&
                                   q.graph.vertex_strength(y) == sa);
              }
            }
          }
          if (!shape || na != side_a || nb != side_b) {
            ok = false;
            detail = "bb n=" + std::to_string(n) + " class " + std::to_string(delta) +
                     " shape/weights";
          }
        }
      } else {
        QuotientGraph q = quotient(net.graph(), p, order[0]);
        Int128 w = Int128::pow2(unsigned(n - 1)) * Int128(n);
        Int128 s = Int128::pow2(unsigned(n - 1)) * Int128(3 * (n - 1));
        std::size_t heavy = 0;
        for (VertexId v = 0; v < q.graph.vertex_count(); ++v)
          if (q.graph.vertex_weight(v) == w && q.graph.vertex_strength(v) == s) ++heavy;
        if (heavy != 4) {
          ok = false;
          detail = "bba n=" + std::to_string(n) + " first-class heavy vertices: " +
                   std::to_string(heavy);
        }
      }
    }
  }
  report("theta-star structure: n classes, bipartite quotients, expected component weights", ok, detail);
}

void criterion4_counts_diameter() {
  std::string detail;
  bool ok = true;
  for (int n = 1; n <= 8; ++n) {
    LabeledNetwork bb = make_benes(n);
    LabeledNetwork ba = make_augmented_benes(n);
    std::size_t v_want = std::size_t(2 * n + 1) << n;
    if (bb.graph().vertex_count() != v_want || ba.graph().vertex_count() != v_want ||
        bb.graph().edge_count() != (std::size_t(n) << (n + 2)) ||
        ba.graph().edge_count() != (std::size_t(12 * n - 1) << (n - 1))) {
      ok = false;
      detail += "counts n=" + std::to_string(n) + " ";
    }
  }
  for (int n = 2; n <= 6; ++n) {
    if (DistanceOracle(make_benes(n).graph()).diameter() != 2 * n ||
        DistanceOracle(make_augmented_benes(n).graph()).diameter() != 2 * n) {
      ok = false;
      detail += "diameter n=" + std::to_string(n) + " ";
    }
  }
  report("counts n=1..8 and diameter 2n for n=2..6, both networks", ok, detail);
}

void criterion5_parameters() {
  std::string detail;
  bool ok = true;
  for (int n = 2; n <= 6; ++n) {
    NetworkParams bbm = measure_params(make_benes(n).graph());
    NetworkParams bbf = formula_params(Network::benes, n);
    NetworkParams bam = measure_params(make_augmented_benes(n).graph());
    NetworkParams baf = formula_params(Network::augmented_benes, n);
    if (bbm != bbf || bam != baf) {
      ok = false;
      detail += "measured!=formula n=" + std::to_string(n) + " ";
    }
    bool dom = baf.wiener < bbf.wiener && baf.traffic_density < bbf.traffic_density &&
               baf.throughput > bbf.throughput && baf.graph_density > bbf.graph_density &&
               baf.total_connectivity > bbf.total_connectivity;
    bool gd2tc = bbf.graph_density == Rational(2) * bbf.total_connectivity &&
                 baf.graph_density == Rational(2) * baf.total_connectivity;
    if (!dom || !gd2tc) {
      ok = false;
      detail += "identities n=" + std::to_string(n) + " ";
    }
  }
  report("network parameters: measured==formulas n=2..6, dominance, GD=2TC", ok, detail);
}

void criterion6_cluster_grid() {
  std::string detail;
  bool ok = true;
  int cases = 0;
  for (int m = 2; m <= 4; ++m)
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        for (int al = 1; al <= 2; ++al)
          for (int be = 1; be <= 2; ++be) {
            ++cases;
            ClusterFamilyParams p{m, a, b, Int128(al), Int128(be)};
            ClusterFamily fam = make_cluster_family(p);
            DistanceOracle d(fam.graph);
            if (cluster_family_wiener(p) != wiener(fam.graph, d)) {
              ok = false;
              detail = "m=" + std::to_string(m) + ",a=" + std::to_string(a) +
                       ",b=" + std::to_string(b) + ",alpha=" + std::to_string(al) +
                       ",beta=" + std::to_string(be);
            }
          }
  report("clique-family Wiener closed form over the " + std::to_string(cases) + "-case grid",
         ok, detail);
}

void criterion7_broadcast() {
  std::string detail;
  bool ok = true;
  for (int n : {2, 3}) {
    LabeledNetwork net = make_augmented_benes(n);
    for (std::uint32_t k : {0u, 2u * std::uint32_t(n)}) {
      for (std::uint32_t j = 0; j < net.columns(); ++j) {
        VertexId s = net.index_of({j, k});
        BroadcastTrace t = simulate_fdf(net, s);
        std::string why = validate_trace(net.graph(), t);
        if (!why.empty()) {
          ok = false;
          detail += "invalid trace n=" + std::to_string(n) + ": " + why + " ";
          continue;
        }
        int es = eccentricity(net.graph(), s);
        std::size_t bound = std::size_t(broadcast_round_bound(n, es));
        std::size_t lower =
            std::size_t(broadcast_lower_bound(net.graph().vertex_count(), es));
        bool rounds_ok = n == 2 ? t.total_rounds() == bound : t.total_rounds() <= bound;
        if (!rounds_ok || t.total_rounds() < lower) {
          ok = false;
          detail += "n=" + std::to_string(n) + " source " + net.label_string(s) + ": " +
                    std::to_string(t.total_rounds()) + " rounds (bound " +
                    std::to_string(bound) + ", lower " + std::to_string(lower) + ") ";
        }
      }
    }
  }
  report("broadcast: n=2 exactly e(S)+2 rounds, n=3 within e(S)+3, all traces valid", ok,
         detail);
}

void criterion8_cross_identity() {
  std::string detail;
  bool ok = true;
  const std::map<int, long long> expected{{2, 224}, {3, 1728}, {4, 10624}};
  for (auto [n, value] : expected) {
    Int128 moe = cache.get(Network::benes, n).mostar_edge;
    Int128 mo = cache.get(Network::augmented_benes, n).mostar;
    if (moe != Int128(value) || mo != Int128(value)) {
      ok = false;
      detail += "n=" + std::to_string(n) + ": Mo_e(bb)=" + moe.str() + " Mo(bba)=" + mo.str() +
                " want " + std::to_string(value) + " ";
    }
  }
  report("cross identity: edge-Mostar of bb equals Mostar of bba, n=2..4", ok, detail);
}

void criterion9_random_properties() {
  std::string detail;
  bool ok = true;
  std::mt19937 rng(1942);
  int instances = 0;
  while (instances < 100 && ok) {
    std::uniform_int_distribution<int> nv_dist(2, 12);
    int nv = nv_dist(rng);
    std::set<std::pair<VertexId, VertexId>> eset;
    for (int v = 1; v < nv; ++v) {
      std::uniform_int_distribution<int> parent(0, v - 1);
      eset.insert({static_cast<VertexId>(parent(rng)), static_cast<VertexId>(v)});
    }
    std::uniform_int_distribution<int> extra_dist(0, nv), pick(0, nv - 1);
    for (int t = extra_dist(rng); t > 0; --t) {
      VertexId u = static_cast<VertexId>(pick(rng)), v = static_cast<VertexId>(pick(rng));
      if (u != v) eset.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<Edge> edges;
    for (auto [u, v] : eset) edges.push_back({u, v});
    SwGraph g = SwGraph::plain(std::size_t(nv), std::move(edges));
    ++instances;

    DistanceOracle d(g);
    DescriptorSet by_def = all_descriptors(g, d);
    ThetaPartition part = theta_star_classes(g, d);
    DescriptorSet by_cut = cut_method_descriptors(g, part);
    if (by_def.wiener != by_cut.wiener) {
      ok = false;
      detail = "cut Wiener mismatch on instance " + std::to_string(instances);
    }
    for (std::size_t i = 0; i < g.edge_count() && ok; ++i) {
      if (!theta_related(d, g.edge(i), g.edge(i))) {
        ok = false;
        detail = "relation not reflexive";
      }
      for (std::size_t j = i + 1; j < g.edge_count() && ok; ++j)
        if (theta_related(d, g.edge(i), g.edge(j)) !=
            theta_related(d, g.edge(j), g.edge(i))) {
          ok = false;
          detail = "relation not symmetric";
        }
      const Edge& e = g.edge(i);
      std::size_t cu = 0, cv = 0, tie = 0;
      for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (d(e.u, x) < d(e.v, x))
          ++cu;
        else if (d(e.v, x) < d(e.u, x))
          ++cv;
        else
          ++tie;
      }
      if (cu + cv + tie != g.vertex_count()) {
        ok = false;
        detail = "vertex classification does not cover the graph";
      }
    }
  }
  report("property suite on " + std::to_string(instances) +
             " random graphs: cut Wiener, relation symmetry, equidistant accounting",
         ok, detail);
}

}  // namespace

int main() {
  criterion1_tables();
  criterion2_three_way();
  criterion3_theta_structure();
  criterion4_counts_diameter();
  criterion5_parameters();
  criterion6_cluster_grid();
  criterion7_broadcast();
  criterion8_cross_identity();
  criterion9_random_properties();
  if (failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
