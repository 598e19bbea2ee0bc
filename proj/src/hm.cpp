#include "polcurve/hm.hpp"

#include <bit>

namespace polcurve {

WeightPolynomial cubic_weight_polynomial(long long w1, long long w2, long long w3) {
    // Three families survive the reduction by x2^2 x3:
    //   x1^{m-k} x3^k              (k = 0..m)
    //   x2 x1^{m-1-h} x3^h         (h = 0..m-1)
    //   x2^{2+j} x1^{m-2-j}        (j = 0..m-2)
    WeightPolynomial poly;
    poly.a2 = Rational(3 * w1 + w2 + 2 * w3, 2);
    poly.a1 = Rational(3 * (w2 - w1), 2);
    poly.a0 = Rational(w1 - w2);
    return poly;
}

DestabCheck elliptic_tail_verdict(long long g, long long d) {
    if (g < 2) throw GenusTooSmall("elliptic-tail analysis assumes genus >= 2");
    DestabCheck check;
    check.g = g;
    check.d = d;
    check.r = d - g;
    check.total_weight = 3 * check.r;
    check.lhs = Rational(6 * d - 7);
    check.rhs = Rational(2 * d * check.total_weight, check.r + 1);
    bool in_band = 2 * (2 * g - 2) < d && d < 7 * (g - 1);
    if (!in_band) {
        check.verdict = DestabCheck::Verdict::Inconclusive;
        check.note = "degree outside 2(2g-2) < d < 7/2(2g-2); the weight bound is not asserted";
        return check;
    }
    if (check.lhs > check.rhs) check.verdict = DestabCheck::Verdict::ChowUnstable;
    else if (check.lhs == check.rhs) check.verdict = DestabCheck::Verdict::Boundary;
    else check.verdict = DestabCheck::Verdict::Inconclusive;
    return check;
}

std::optional<DestabCertificate> destabilizer_certificate(const CurveGraph& curve,
                                                          const Multidegree& dvec,
                                                          long long g, long long d,
                                                          int vertex_cap) {
    if (curve.genus() != g || dvec.total() != d)
        throw VertexMismatch("declared invariants disagree with the inputs");
    if (d <= 2 * (2 * g - 2))
        throw Unsupported("destabilizer certificates assume d > 2(2g-2)");
    CurveClass cls = classify_curve(curve, vertex_cap);
    if (!cls.quasi_wp_stable)
        throw NotQuasiWpStable("destabilizer certificates assume a quasi-wp-stable curve");
    BalanceReport balance = classify_multidegree(curve, dvec, vertex_cap);
    if (!balance.properly_balanced)
        throw NotProperlyBalanced("destabilizer certificates assume proper balance");

    long long two_g_minus_2 = 2 * g - 2;
    VertexMask exc = curve.exceptional_mask();
    VertexMask full = curve.full_mask();

    std::optional<DestabCertificate> certificate;
    for_each_two_sided_subcurve(
        curve,
        [&](VertexMask mask) {
            if (certificate) return;
            // Want Y at the lower extreme (equivalently Y^c at the upper one)
            // with Y^c not inside the exceptional locus.
            SubcurveStats st = subcurve_stats(curve, mask);
            long long lhs = 2 * two_g_minus_2 * dvec.on_subcurve(mask);
            long long rhs = 2 * d * st.omega_degree - two_g_minus_2 * st.crossing_length;
            if (lhs != rhs) return;
            VertexMask complement = full & ~mask;
            if ((complement & ~exc) == 0) return;

            DestabCertificate cert;
            cert.subcurve = mask_ids(curve, mask);
            cert.subcurve_degree = dvec.on_subcurve(mask);
            cert.subcurve_genus = st.genus;
            cert.crossing_length = st.crossing_length;
            cert.h0_subcurve = cert.subcurve_degree + 1 - st.genus;
            cert.h0_total = d + 1 - g;
            cert.dim_vanishing = cert.h0_total - cert.h0_subcurve;
            cert.quad_m2 = Rational(cert.subcurve_degree) + Rational(st.crossing_length, 2);
            cert.quad_m1 = Rational(1 - st.genus) - Rational(st.crossing_length, 2);
            cert.rhs_factor = Rational(cert.h0_subcurve, cert.h0_total);
            cert.identity_holds =
                cert.quad_m2 == cert.rhs_factor * Rational(d) &&
                cert.quad_m1 == cert.rhs_factor * Rational(1 - g);
            certificate = std::move(cert);
        },
        vertex_cap);
    return certificate;
}

}  // namespace polcurve
