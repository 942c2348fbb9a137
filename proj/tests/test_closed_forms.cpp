#include <catch2/catch_amalgamated.hpp>

#include "benesnet/closed_forms.hpp"
#include "benesnet/descriptors.hpp"
#include "benesnet/generators.hpp"
#include "benesnet/theta.hpp"

using namespace benesnet;

namespace {

DescriptorSet expect(long long w, long long szv, long long sze, long long szev, long long pi,
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

}  // namespace

TEST_CASE("clique-family Wiener closed form") {
  // K_4 via two joined K_2 cliques
  CHECK(cluster_family_wiener({2, 1, 1, 1, 1}) == Int128(6));
  CHECK_THROWS_AS(cluster_family_wiener({1, 1, 1, 1, 1}), std::invalid_argument);

  // frozen from the definition-level computation on the generated instance
  ClusterFamilyParams fig{3, 3, 2, 1, 1};
  ClusterFamily fam = make_cluster_family(fig);
  DistanceOracle d(fam.graph);
  CHECK(wiener(fam.graph, d) == Int128(141));
  CHECK(cluster_family_wiener(fig) == Int128(141));

  ClusterFamilyParams heavy{2, 2, 4, Int128(3), Int128(1)};
  ClusterFamily hf = make_cluster_family(heavy);
  DistanceOracle hd(hf.graph);
  CHECK(cluster_family_wiener(heavy) == wiener(hf.graph, hd));
}

TEST_CASE("clique-family grid agrees with the definition") {
  for (int m = 2; m <= 4; ++m)
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        for (int al = 1; al <= 2; ++al)
          for (int be = 1; be <= 2; ++be) {
            ClusterFamilyParams p{m, a, b, Int128(al), Int128(be)};
            ClusterFamily fam = make_cluster_family(p);
            DistanceOracle d(fam.graph);
            REQUIRE(cluster_family_wiener(p) == wiener(fam.graph, d));
          }
}

TEST_CASE("plain network closed forms, table values") {
  CHECK_THROWS_AS(benes_closed_forms(1), std::invalid_argument);
  CHECK(benes_closed_forms(2) == expect(492, 2912, 3840, 3344, 736, 192, 224));
  CHECK(benes_closed_forms(3) == expect(5944, 69952, 129824, 95392, 7296, 1408, 1728));
  CHECK(benes_closed_forms(4) ==
        expect(53872, 1247872, 2728576, 1848128, 54400, 8448, 10624));
  CHECK(benes_closed_forms(5) ==
        expect(412384, 18711808, 45143424, 29116032, 350208, 45568, 69376));
  CHECK(benes_closed_forms(6) ==
        expect(2823616, 250456576, 645950464, 402967808, 2059776, 250880, 437760));
}

TEST_CASE("augmented network closed forms, table values") {
  CHECK_THROWS_AS(augmented_closed_forms(1), std::invalid_argument);
  CHECK(augmented_closed_forms(2) == expect(418, 1270, 6148, 2752, 1176, 224, 464));
  CHECK(augmented_closed_forms(3) == expect(5108, 35628, 191464, 82032, 10768, 1728, 3808));
  CHECK(augmented_closed_forms(4) ==
        expect(47016, 726616, 4200592, 1741984, 78368, 10624, 24000));
  CHECK(augmented_closed_forms(5) ==
        expect(365136, 12043440, 73545120, 29729088, 501056, 58112, 132992));
  CHECK(augmented_closed_forms(6) ==
        expect(2531488, 173578592, 1105984576, 438073984, 2945152, 296448, 683776));
}

TEST_CASE("per-class contributions") {
  // plain network, n=2: the outer class alone contributes 96 to Mostar
  CHECK(benes_class_closed_forms(2, 2).mostar == Int128(96));
  CHECK(benes_class_closed_forms(2, 1).mostar + benes_class_closed_forms(2, 2).mostar ==
        Int128(192));
  // augmented network, n=2: the mid class contributes 576 to PI
  CHECK(augmented_class_closed_forms(2, 1).padmakar_ivan == Int128(576));

  CHECK_THROWS_AS(benes_class_closed_forms(3, 0), std::out_of_range);
  CHECK_THROWS_AS(benes_class_closed_forms(3, 4), std::out_of_range);
  CHECK_THROWS_AS(augmented_class_closed_forms(3, 4), std::out_of_range);
}

TEST_CASE("per-class contributions sum to the totals") {
  for (int n = 2; n <= 8; ++n) {
    for (Network kind : {Network::benes, Network::augmented_benes}) {
      DescriptorSet sum;
      for (int idx = 1; idx <= n; ++idx) sum += network_class_closed_forms(kind, n, idx);
      CHECK(sum == network_closed_forms(kind, n));
    }
  }
}

TEST_CASE("per-class forms match the computed quotients") {
  for (int n : {2, 3}) {
    for (Network kind : {Network::benes, Network::augmented_benes}) {
      LabeledNetwork net = make_network(kind, n);
      DistanceOracle d(net.graph());
      ThetaPartition p = theta_star_classes(net.graph(), d);
      auto order = level_ordered_classes(net, p);
      for (int idx = 1; idx <= n; ++idx) {
        QuotientGraph q = quotient(net.graph(), p, order[std::size_t(idx - 1)]);
        REQUIRE(all_descriptors(q.graph) == network_class_closed_forms(kind, n, idx));
      }
    }
  }
}

TEST_CASE("closed forms stay exact far past the table range") {
  // the integrality guards run on every evaluation; exercise them high up
  for (int n = 7; n <= 12; ++n) {
    CHECK_NOTHROW(benes_closed_forms(n));
    CHECK_NOTHROW(augmented_closed_forms(n));
  }
  LabeledNetwork b8 = make_benes(8);
  DistanceOracle d8(b8.graph());
  CHECK(benes_closed_forms(8).wiener == wiener(b8.graph(), d8));
}
