#pragma once

#include <stdexcept>

#include "benesnet/descriptors.hpp"
#include "benesnet/generators.hpp"
#include "benesnet/rational.hpp"

namespace benesnet {

namespace detail {

inline Int128 to_exact_int(const Rational& r, const char* what) {
  if (!r.is_integer())
    throw std::runtime_error(std::string("closed-form integrality violated: ") + what + " = " +
                             r.str());
  return r.num();
}

// n choose 2 without intermediate overflow drama; n is a power of two here.
inline Int128 choose2(Int128 n) { return n * (n - Int128(1)) / Int128(2); }

}  // namespace detail

// Closed-form Wiener index of the two-layer clique family.
inline Int128 cluster_family_wiener(const ClusterFamilyParams& p) {
  if (p.clique_size < 2) throw std::invalid_argument("clique size must be >= 2");
  Int128 m(p.clique_size), a(p.x_cliques), b(p.y_cliques);
  const Int128& al = p.x_weight;
  const Int128& be = p.y_weight;
  Int128 pair_part = a * (a - Int128(1)) * al * al + b * (b - Int128(1)) * be * be +
                     a * b * al * be;
  Int128 clique_part = a * al * al + b * be * be;
  return m * m * pair_part + detail::choose2(m) * clique_part;
}

namespace detail {

// Side quantities that every edge of the delta-th quotient of the plain
// back-to-back network shares; the per-class and total forms below are all
// assembled from these.
struct BenesClassSides {
  Int128 nm, ne, mm, me;
};

inline BenesClassSides benes_class_sides(int n, int d) {
  Int128 p_nd = Int128::pow2(static_cast<unsigned>(n - d));        // 2^{n-d}
  Int128 p_nd1 = Int128::pow2(static_cast<unsigned>(n - d + 1));   // 2^{n-d+1}
  Int128 p_d1 = Int128::pow2(static_cast<unsigned>(d + 1));        // 2^{d+1}
  Int128 p_dm1 = Int128::pow2(static_cast<unsigned>(d - 1));       // 2^{d-1}
  Int128 wa = p_nd * Int128(n - d + 1);
  Int128 wb = p_dm1 * Int128(2 * d - 1);
  Int128 sa = p_nd1 * Int128(n - d);
  Int128 sb = p_d1 * Int128(d - 1);
  BenesClassSides s;
  s.nm = wa + (p_nd1 - Int128(1)) * wb;
  s.ne = (p_d1 - Int128(1)) * wa + wb;
  s.mm = sa + (p_nd1 - Int128(1)) * sb + p_nd1 - Int128(1);
  s.me = (p_d1 - Int128(1)) * sa + sb + p_d1 - Int128(1);
  return s;
}

}  // namespace detail

// Per-class contribution for the plain back-to-back network; delta runs
// from 1 (mid-level class) to n.
inline DescriptorSet benes_class_closed_forms(int n, int delta) {
  if (n < 2) throw std::invalid_argument("closed forms require n >= 2");
  if (delta < 1 || delta > n) throw std::out_of_range("class index out of range");
  auto s = detail::benes_class_sides(n, delta);
  Int128 ecount = Int128::pow2(static_cast<unsigned>(n + 2));
  Int128 wa = Int128::pow2(static_cast<unsigned>(n - delta)) * Int128(n - delta + 1);
  Int128 wb = Int128::pow2(static_cast<unsigned>(delta - 1)) * Int128(2 * delta - 1);
  Int128 side_a = Int128::pow2(static_cast<unsigned>(delta + 1));
  Int128 side_b = Int128::pow2(static_cast<unsigned>(n - delta + 1));
  DescriptorSet d;
  d.wiener = side_a * wa * side_b * wb + Int128(2) * detail::choose2(side_a) * wa * wa +
             Int128(2) * detail::choose2(side_b) * wb * wb;
  d.szeged_vertex = ecount * s.nm * s.ne;
  d.szeged_edge = ecount * s.mm * s.me;
  d.szeged_edge_vertex_x2 = ecount * (s.nm * s.me + s.mm * s.ne);
  d.padmakar_ivan = ecount * (s.mm + s.me);
  d.mostar = ecount * (s.nm - s.ne).abs();
  d.mostar_edge = ecount * (s.mm - s.me).abs();
  return d;
}

// Closed forms for the plain back-to-back network, n >= 2.
inline DescriptorSet benes_closed_forms(int n) {
  if (n < 2) throw std::invalid_argument("closed forms require n >= 2");
  Rational p2(Int128::pow2(static_cast<unsigned>(n)));
  Rational p22 = p2 * p2;
  Rational N(n), N2(n * n), N3(n * n * n);
  DescriptorSet d;

  d.wiener = detail::to_exact_int(
      p2 / Rational(3) *
          (Rational(50) * N * p2 - Rational(69) * p2 - Rational(9) * N2 * p2 +
           Rational(10) * N3 * p2 + Rational(69)),
      "W");
  d.szeged_vertex = detail::to_exact_int(
      Rational(2) * p2 / Rational(27) *
          ((Rational(2608) - Rational(1308) * N + Rational(288) * N2 + Rational(36) * N3) * p22 -
           (Rational(2700) + Rational(423) * N - Rational(27) * N2 - Rational(18) * N3) * p2 +
           Rational(92)),
      "Sz_v");
  d.szeged_edge = detail::to_exact_int(
      p2 * ((Rational(Int128(20096), Int128(27)) - Rational(Int128(2864), Int128(9)) * N +
             Rational(Int128(112), Int128(3)) * N2 + Rational(Int128(32), Int128(3)) * N3) *
                p22 -
            (Rational(792) + Rational(Int128(496), Int128(3)) * N + Rational(16) * N2 -
             Rational(Int128(16), Int128(3)) * N3) *
                p2 +
            Rational(4) * N + Rational(Int128(1288), Int128(27))),
      "Sz_e");
  Int128 szev = detail::to_exact_int(
      p2 * ((Rational(Int128(10636), Int128(27)) - Rational(Int128(1660), Int128(9)) * N +
             Rational(Int128(92), Int128(3)) * N2 + Rational(Int128(16), Int128(3)) * N3) *
                p22 -
            (Rational(408) + Rational(Int128(242), Int128(3)) * N + Rational(2) * N2 -
             Rational(Int128(8), Int128(3)) * N3) *
                p2 +
            Rational(Int128(380), Int128(27))),
      "Sz_ev");
  d.szeged_edge_vertex_x2 = szev * Int128(2);
  d.padmakar_ivan = detail::to_exact_int(
      p2 * ((Rational(16) * N2 - Rational(16) * N + Rational(24)) * p2 - Rational(8) * N -
            Rational(24)),
      "PI");
  Int128 ecount = Int128::pow2(static_cast<unsigned>(n + 2));
  for (int delta = 1; delta <= n; ++delta) {
    auto s = detail::benes_class_sides(n, delta);
    d.mostar += ecount * (s.nm - s.ne).abs();
    d.mostar_edge += ecount * (s.mm - s.me).abs();
  }
  return d;
}

namespace detail {

// Cross-edge side quantities of the sigma-th quotient of the augmented
// network, sigma >= 2. Clique-internal edges have equal sides, so only the
// cross values show up in the Mostar terms.
struct AugmentedClassSides {
  Rational nmc, nec, mmc, mec;  // cross edge, near each endpoint
  Rational mx, my;              // clique-internal edge, both sides equal
  Rational alpha, beta;
};

inline AugmentedClassSides augmented_class_sides(int n, int s) {
  Rational p_ns(Int128::pow2(static_cast<unsigned>(n - s)));      // 2^{n-s}
  Rational p_s1(Int128::pow2(static_cast<unsigned>(s - 1)));      // 2^{s-1}
  Rational p_n(Int128::pow2(static_cast<unsigned>(n)));
  Rational p_sp(Int128::pow2(static_cast<unsigned>(s)));          // 2^s
  AugmentedClassSides r;
  r.alpha = Rational(n - s + 1) * p_ns;
  r.beta = Rational(2 * s - 1) * p_s1;
  r.nmc = r.alpha + Rational(2 * s - 1) * (p_n - p_sp);
  r.nec = r.beta + (p_sp * Rational(2) - Rational(2)) * r.alpha;
  r.mmc = Rational(11 - 12 * s) * (p_s1 - p_n / Rational(2)) +
          Rational(3 * (n - s + 1)) * p_ns - Rational(1);
  r.mec = Rational(12 * s - 13) * p_s1 / Rational(2) +
          Rational(3 * (n - s)) * p_ns * (p_sp * Rational(2) - Rational(2)) +
          p_ns * (p_sp - Rational(1)) + p_sp + p_sp * Rational(2) - Rational(1);
  r.mx = Rational(3 * (n - s)) * p_ns + p_ns * Rational(2);
  r.my = Rational(12 * s - 13) * p_s1 / Rational(2) + p_sp * Rational(2);
  return r;
}

}  // namespace detail

// Per-class contribution for the augmented network. Index 1 is the
// mid-level class with the four heavy vertices; 2..n follow the generic
// two-layer clique pattern.
inline DescriptorSet augmented_class_closed_forms(int n, int index) {
  if (n < 2) throw std::invalid_argument("closed forms require n >= 2");
  if (index < 1 || index > n) throw std::out_of_range("class index out of range");
  Rational p2(Int128::pow2(static_cast<unsigned>(n)));
  Rational p22 = p2 * p2;
  Int128 efac = Int128::pow2(static_cast<unsigned>(n + 2));
  DescriptorSet d;
  if (index == 1) {
    Rational N(n), N2(n * n);
    d.wiener = detail::to_exact_int(
        p2 * ((Rational(Int128(5), Int128(2)) * N2 + Rational(2) * N + Rational(1)) * p2 -
              Rational(Int128(3), Int128(2))),
        "class W");
    d.szeged_vertex = detail::to_exact_int(
        p2 / Rational(4) *
            ((Rational(16) * N + Rational(9) * N2) * p22 + (Rational(16) - Rational(24) * N) * p2 -
             Rational(30)),
        "class Sz_v");
    d.szeged_edge = detail::to_exact_int(
        p2 / Rational(4) *
            ((Rational(81) * N2 - Rational(42) * N - Rational(19)) * p22 + Rational(112) * p2 -
             Rational(96)),
        "class Sz_e");
    d.szeged_edge_vertex_x2 =
        detail::to_exact_int(p2 / Rational(2) *
                                 ((Rational(27) * N2 + Rational(17) * N - Rational(20)) * p22 +
                                  (Rational(76) - Rational(36) * N) * p2 - Rational(72)),
                             "class Sz_ev");
    d.padmakar_ivan = detail::to_exact_int(
        Rational(3) * p2 * ((Rational(7) * N - Rational(3)) * p2 + Rational(4)), "class PI");
    Int128 half = Int128::pow2(static_cast<unsigned>(n - 1));
    d.mostar = efac * (Int128(n) * half - half * Int128(2) + Int128(3)).abs();
    d.mostar_edge =
        efac * (half - Int128(3 * (n - 1)) * half + half * Int128(2) - Int128(6)).abs();
    return d;
  }
  auto s = detail::augmented_class_sides(n, index);
  ClusterFamilyParams cp;
  cp.clique_size = 2;
  cp.x_cliques = 1 << index;
  cp.y_cliques = 1 << (n - index);
  cp.x_weight = detail::to_exact_int(s.alpha, "alpha");
  cp.y_weight = detail::to_exact_int(s.beta, "beta");
  d.wiener = cluster_family_wiener(cp);
  Rational E(efac);
  Rational pn(Int128::pow2(static_cast<unsigned>(n)));
  d.szeged_vertex =
      detail::to_exact_int(E * s.nmc * s.nec + pn * (s.alpha * s.alpha + s.beta * s.beta),
                           "class Sz_v");
  d.szeged_edge = detail::to_exact_int(E * s.mmc * s.mec + pn * (s.mx * s.mx + s.my * s.my),
                                       "class Sz_e");
  d.szeged_edge_vertex_x2 = detail::to_exact_int(
      E * (s.nmc * s.mec + s.mmc * s.nec) + Rational(2) * pn * (s.alpha * s.mx + s.beta * s.my),
      "class Sz_ev");
  d.padmakar_ivan = detail::to_exact_int(E * (s.mmc + s.mec) + Rational(2) * pn * (s.mx + s.my),
                                         "class PI");
  d.mostar = detail::to_exact_int((E * (s.nmc - s.nec)).abs(), "class Mo");
  d.mostar_edge = detail::to_exact_int((E * (s.mmc - s.mec)).abs(), "class Mo_e");
  return d;
}

// Closed forms for the augmented network, n >= 2.
inline DescriptorSet augmented_closed_forms(int n) {
  if (n < 2) throw std::invalid_argument("closed forms require n >= 2");
  Rational p2(Int128::pow2(static_cast<unsigned>(n)));
  Rational p22 = p2 * p2;
  Rational N(n), N2(n * n), N3(n * n * n);
  DescriptorSet d;
  d.wiener = detail::to_exact_int(
      p2 / Rational(6) *
          ((Rational(20) * N3 - Rational(36) * N2 + Rational(148) * N - Rational(207)) * p2 +
           Rational(207)),
      "W");
  d.szeged_vertex = detail::to_exact_int(
      p2 / Rational(54) *
          ((Rational(15988) - Rational(7212) * N + Rational(882) * N2 + Rational(144) * N3) * p22 -
           (Rational(16632) + Rational(3366) * N - Rational(270) * N2 - Rational(180) * N3) * p2 +
           Rational(617)),
      "Sz_v");
  d.szeged_edge = detail::to_exact_int(
      p2 * ((Rational(Int128(30709), Int128(12)) - Rational(922) * N + Rational(57) * N2 +
             Rational(24) * N3) *
                p22 -
            (Rational(2756) + Rational(Int128(1445), Int128(2)) * N +
             Rational(Int128(123), Int128(2)) * N2 - Rational(30) * N3) *
                p2 +
            Rational(4) * N + Rational(Int128(587), Int128(3))),
      "Sz_e");
  Int128 szev = detail::to_exact_int(
      p2 * ((Rational(Int128(16145), Int128(18)) - Rational(Int128(1087), Int128(3)) * N +
             Rational(34) * N2 + Rational(8) * N3) *
                p22 -
            (Rational(943) + Rational(Int128(909), Int128(4)) * N +
             Rational(Int128(11), Int128(4)) * N2 - Rational(10) * N3) *
                p2 +
            Rational(Int128(410), Int128(9))),
      "Sz_ev");
  d.szeged_edge_vertex_x2 = szev * Int128(2);
  d.padmakar_ivan = detail::to_exact_int(
      p2 * ((Rational(73) - Rational(36) * N + Rational(24) * N2) * p2 - Rational(8) * N -
            Rational(78)),
      "PI");

  Int128 efac = Int128::pow2(static_cast<unsigned>(n + 2));
  Int128 half = Int128::pow2(static_cast<unsigned>(n - 1));
  d.mostar = efac * (Int128(n) * half - half * Int128(2) + Int128(3)).abs();
  d.mostar_edge = efac * (half - Int128(3 * (n - 1)) * half + half * Int128(2) - Int128(6)).abs();
  for (int s = 2; s <= n; ++s) {
    Rational mo_term =
        Rational(Int128::pow2(static_cast<unsigned>(n - s))) * Rational(n - s + 1) +
        Rational(2 * s - 1) *
            (Rational(Int128::pow2(static_cast<unsigned>(n))) -
             Rational(Int128::pow2(static_cast<unsigned>(s)))) -
        Rational(Int128::pow2(static_cast<unsigned>(s - 1))) * Rational(2 * s - 1) -
        Rational(Int128::pow2(static_cast<unsigned>(n - s))) *
            (Rational(Int128::pow2(static_cast<unsigned>(s + 1))) - Rational(2)) *
            Rational(n - s + 1);
    Rational moe_term =
        Rational(36 * n - 36 * s + 16) * Rational(Int128::pow2(static_cast<unsigned>(n - s)), Int128(4)) -
        Rational(24 * n - 48 * s + 26) * Rational(Int128::pow2(static_cast<unsigned>(n)), Int128(4)) -
        Rational(36 * s - 23) * Rational(Int128::pow2(static_cast<unsigned>(s)), Int128(4));
    d.mostar += detail::to_exact_int((Rational(efac) * mo_term).abs(), "Mo term");
    d.mostar_edge += detail::to_exact_int((Rational(efac) * moe_term).abs(), "Mo_e term");
  }
  return d;
}

inline DescriptorSet network_closed_forms(Network net, int n) {
  switch (net) {
    case Network::benes: return benes_closed_forms(n);
    case Network::augmented_benes: return augmented_closed_forms(n);
    case Network::butterfly: break;
  }
  throw std::invalid_argument("closed forms exist for bb and bba only");
}

inline DescriptorSet network_class_closed_forms(Network net, int n, int index) {
  switch (net) {
    case Network::benes: return benes_class_closed_forms(n, index);
    case Network::augmented_benes: return augmented_class_closed_forms(n, index);
    case Network::butterfly: break;
  }
  throw std::invalid_argument("closed forms exist for bb and bba only");
}

}  // namespace benesnet
