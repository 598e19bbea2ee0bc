#ifndef POLCURVE_GIT_CLASSIFIER_HPP
#define POLCURVE_GIT_CLASSIFIER_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polcurve/curve_graph.hpp"
#include "polcurve/multidegree.hpp"
#include "polcurve/rational.hpp"

namespace polcurve {

enum class RegimeKind {
    TheoremA,       // d > 4(2g-2), g >= 2: quasi-stable classification
    TheoremB,       // 2(2g-2) < d < 7/2(2g-2), g >= 3: quasi-p-stable classification
    OpenBand,       // 7/2(2g-2) <= d <= 4(2g-2): an open problem, never decided
    NecessaryOnly,  // d > 2(2g-2) otherwise (g = 2 inside the B band)
    OutOfRange,     // d <= 2(2g-2)
};

struct DegreeRegime {
    long long g = 0;
    long long d = 0;
    Rational slope;  // v with d = v(2g-2)
    RegimeKind kind = RegimeKind::OutOfRange;
};

DegreeRegime classify_regime(long long g, long long d);

enum class Verdict { Yes, No, Undetermined };

const char* verdict_name(Verdict v);

struct GITReport {
    DegreeRegime regime;
    Verdict semistable = Verdict::Undetermined;
    Verdict polystable = Verdict::Undetermined;
    Verdict stable = Verdict::Undetermined;
    bool necessary_conditions_met = false;  // quasi-wp-stable and properly balanced
    std::vector<std::string> reasons;
    std::vector<std::vector<std::string>> witnesses;  // offending subcurves, as id lists
    std::optional<int> stabilizer_dimension;          // gamma(X~) when semistable
};

// Inside the two characterized regimes the curve class plus the balance
// level decide the three verdicts. In the open band, and at genus 2 inside
// the low band, only the necessary conditions are reported and the verdicts
// stay undetermined, except that an elliptic tail inside the low band is
// outright unstable.
GITReport git_classify(const CurveGraph& curve, const Multidegree& dvec,
                       long long g, long long d, int vertex_cap = kDefaultVertexCap);

// gcd(d + 1 - g, 2g - 2) = 1: no strictly semistable points anywhere in the
// degree class.
bool is_geometric_quotient(long long g, long long d);

// gamma(X~): dimension of the identity component of the stabilizer.
int stabilizer_dim(const CurveGraph& curve, int vertex_cap = kDefaultVertexCap);

// Rank-1 torsion-free sheaf data on a p-stable base, recorded through the
// blow-up correspondence: component degrees carry the internal torsion
// corrections so that subcurve degrees are combinatorial.
struct SheafData {
    CurveGraph base;
    std::vector<long long> degrees;          // deg of the sheaf on each component
    std::set<int> non_free_edges;            // indices into base.edges()
    std::map<int, int> non_free_cusps;       // vertex index -> number of cusp sites

    long long total_degree() const;
    long long degree_on(VertexMask mask) const;  // includes the i_Z correction
};

SheafData simpson_pushforward(const CurveGraph& curve, const Multidegree& dvec,
                              int vertex_cap = kDefaultVertexCap);

// One-sided slope inequality on every proper subcurve of the base.
bool simpson_semistable(const SheafData& sheaf, long long d,
                        int vertex_cap = kDefaultVertexCap);

}  // namespace polcurve

#endif
