#ifndef POLCURVE_MULTIDEGREE_HPP
#define POLCURVE_MULTIDEGREE_HPP

#include <map>
#include <string>
#include <vector>

#include "polcurve/curve_graph.hpp"
#include "polcurve/rational.hpp"

namespace polcurve {

// Vertex-indexed integer vector, aligned with the canonical vertex order of
// an associated CurveGraph.
class Multidegree {
public:
    Multidegree() = default;
    explicit Multidegree(std::vector<long long> values) : values_(std::move(values)) {}
    Multidegree(const CurveGraph& curve, const std::map<std::string, long long>& by_id);

    int size() const { return static_cast<int>(values_.size()); }
    long long operator[](int i) const { return values_[i]; }
    long long& operator[](int i) { return values_[i]; }
    const std::vector<long long>& values() const { return values_; }

    long long total() const;
    long long on_subcurve(VertexMask mask) const;  // d_Z

    friend bool operator==(const Multidegree& a, const Multidegree& b) {
        return a.values_ == b.values_;
    }
    friend bool operator!=(const Multidegree& a, const Multidegree& b) {
        return !(a == b);
    }
    friend bool operator<(const Multidegree& a, const Multidegree& b) {
        return a.values_ < b.values_;
    }

private:
    std::vector<long long> values_;
};

// The two extremes of the basic inequality for subcurve Z:
//   m_Z = d * deg_Z(omega) / (2g-2) - k_Z / 2,   M_Z = m_Z + k_Z.
// They satisfy m_Z = d - M_{Z^c} and M_Z = d - m_{Z^c}.
struct BasicBounds {
    Rational lower;  // m_Z
    Rational upper;  // M_Z
};

BasicBounds basic_bounds(const CurveGraph& curve, long long d, const SubcurveStats& stats);
BasicBounds basic_bounds(const CurveGraph& curve, long long d, VertexMask subset);

enum class BalanceLevel { Balanced, Properly, Strictly, Stably };

struct BalanceViolation {
    VertexMask subcurve = 0;
    enum class Side { Lower, Upper } side = Side::Upper;
    Rational excess;  // positive amount by which the bound is missed
};

struct BalanceReport {
    bool balanced = false;
    bool properly_balanced = false;
    bool strictly_balanced = false;
    bool stably_balanced = false;
    std::vector<BalanceViolation> violations;
    std::vector<VertexMask> extremal_subcurves;  // Z with d_Z = M_Z, two-sided scan
    bool passes(BalanceLevel level) const;
};

// Scans subcurves Z with Z and Z^c connected, which suffices for every level.
// The strictly/stably flags read the exceptional locus, so they are only
// meaningful on quasi-wp-stable curves; the balanced flag is defined for any
// G-semistable curve.
BalanceReport classify_multidegree(const CurveGraph& curve, const Multidegree& dvec,
                                   int vertex_cap = kDefaultVertexCap);

// All multidegrees of total degree d passing the requested level, in
// lexicographic order of the canonical vertex order.
std::vector<Multidegree> enumerate_balanced(const CurveGraph& curve, long long d,
                                            BalanceLevel level,
                                            int vertex_cap = kDefaultVertexCap);

}  // namespace polcurve

#endif
