#ifndef POLCURVE_HM_HPP
#define POLCURVE_HM_HPP

#include <optional>
#include <string>
#include <vector>

#include "polcurve/curve_graph.hpp"
#include "polcurve/multidegree.hpp"
#include "polcurve/rational.hpp"

namespace polcurve {

// W(m) = a2 m^2 + a1 m + a0 for m >> 0; e = 2 a2 is the normalized leading
// coefficient compared in the Chow criterion.
struct WeightPolynomial {
    Rational a2, a1, a0;

    Rational normalized_leading() const { return Rational(2) * a2; }
    Rational eval(long long m) const {
        Rational mm(m);
        return a2 * mm * mm + a1 * mm + a0;
    }
};

// Weight sum over the monomial basis left after discarding everything
// divisible by the leading cubic monomial x2^2 x3 (the generic plane-cubic
// situation of the elliptic-tail analysis). Closed form:
//   a2 = (3 w1 + w2 + 2 w3)/2, a1 = 3(w2 - w1)/2, a0 = w1 - w2,
// whence e = 3 w1 + w2 + 2 w3.
WeightPolynomial cubic_weight_polynomial(long long w1, long long w2, long long w3);

struct DestabCheck {
    long long g = 0;
    long long d = 0;
    long long r = 0;              // r = d - g, so the ambient space is P^r
    long long total_weight = 0;   // w(rho)
    Rational lhs;                 // e_rho
    Rational rhs;                 // 2 d w(rho) / (r+1)
    enum class Verdict { ChowUnstable, Boundary, Inconclusive } verdict =
        Verdict::Inconclusive;
    std::string note;
};

// The elliptic-tail one-parameter subgroup: e_rho = 6d - 7, w(rho) = 3r.
// Inside 2(2g-2) < d < 7/2(2g-2) the comparison always lands on
// chow_unstable; outside the band the check is declared inconclusive.
DestabCheck elliptic_tail_verdict(long long g, long long d);

struct DestabCertificate {
    std::vector<std::string> subcurve;   // Y, attaining the lower extreme
    long long subcurve_degree = 0;       // d_Y = m_Y
    long long subcurve_genus = 0;
    long long crossing_length = 0;       // k_Y
    long long h0_subcurve = 0;           // d_Y + 1 - g_Y (non-specialty)
    long long h0_total = 0;              // d + 1 - g
    long long dim_vanishing = 0;         // sections vanishing on Y (weight 0)
    // Lower bound on the weight polynomial: A m^2 + B m with
    //   A = d_Y + k_Y/2,  B = 1 - g_Y - k_Y/2,
    // equal to (d_Y + 1 - g_Y)/(d + 1 - g) * (d m^2 + (1 - g) m) exactly.
    Rational quad_m2, quad_m1;
    Rational rhs_factor;  // (d_Y + 1 - g_Y)/(d + 1 - g)
    bool identity_holds = false;
};

// Witness against Hilbert stability when the multidegree is not stably
// balanced: a subcurve at the lower extreme whose complement is not
// exceptional, with the exact polynomial identity that pins the
// Hilbert-Mumford index at zero or below.
std::optional<DestabCertificate> destabilizer_certificate(
    const CurveGraph& curve, const Multidegree& dvec, long long g, long long d,
    int vertex_cap = kDefaultVertexCap);

}  // namespace polcurve

#endif
