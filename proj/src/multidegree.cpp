#include "polcurve/multidegree.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace polcurve {

Multidegree::Multidegree(const CurveGraph& curve,
                         const std::map<std::string, long long>& by_id) {
    if (static_cast<int>(by_id.size()) != curve.size())
        throw VertexMismatch("multidegree must assign every vertex exactly once");
    values_.resize(curve.size());
    for (const auto& [id, value] : by_id) {
        int i = curve.index_of(id);
        if (i < 0) throw VertexMismatch("multidegree references unknown vertex '" + id + "'");
        values_[i] = value;
    }
}

long long Multidegree::total() const {
    long long sum = 0;
    for (long long v : values_) sum += v;
    return sum;
}

long long Multidegree::on_subcurve(VertexMask mask) const {
    long long sum = 0;
    VertexMask cursor = mask;
    while (cursor) {
        int i = std::countr_zero(cursor);
        cursor &= cursor - 1;
        sum += values_[i];
    }
    return sum;
}

BasicBounds basic_bounds(const CurveGraph& curve, long long d, const SubcurveStats& stats) {
    long long two_g_minus_2 = 2 * curve.genus() - 2;
    if (two_g_minus_2 <= 0) throw GenusTooSmall("basic bounds require genus >= 2");
    Rational mean(d * stats.omega_degree, two_g_minus_2);
    Rational half_k(stats.crossing_length, 2);
    return BasicBounds{mean - half_k, mean + half_k};
}

BasicBounds basic_bounds(const CurveGraph& curve, long long d, VertexMask subset) {
    return basic_bounds(curve, d, subcurve_stats(curve, subset));
}

bool BalanceReport::passes(BalanceLevel level) const {
    switch (level) {
        case BalanceLevel::Balanced: return balanced;
        case BalanceLevel::Properly: return properly_balanced;
        case BalanceLevel::Strictly: return strictly_balanced;
        case BalanceLevel::Stably: return stably_balanced;
    }
    return false;
}

namespace {

// Integer forms of the basic inequality, scaled by 2(2g-2):
//   lower holds  <=>  2 d deg_Z(omega) - (2g-2) k_Z <= 2(2g-2) d_Z
//   upper holds  <=>  2(2g-2) d_Z <= 2 d deg_Z(omega) + (2g-2) k_Z
struct ScaledBounds {
    long long lower_num;
    long long upper_num;
    long long scale;
};

ScaledBounds scaled_bounds(long long d, long long two_g_minus_2, const SubcurveStats& st) {
    return ScaledBounds{2 * d * st.omega_degree - two_g_minus_2 * st.crossing_length,
                        2 * d * st.omega_degree + two_g_minus_2 * st.crossing_length,
                        2 * two_g_minus_2};
}

}  // namespace

BalanceReport classify_multidegree(const CurveGraph& curve, const Multidegree& dvec,
                                   int vertex_cap) {
    if (dvec.size() != curve.size())
        throw VertexMismatch("multidegree is keyed on the wrong vertex set");
    long long g = curve.genus();
    if (g < 2) throw GenusTooSmall("balance classification requires genus >= 2");
    long long two_g_minus_2 = 2 * g - 2;
    long long d = dvec.total();
    // The scan works in integers scaled by 2(2g-2); keep that far from
    // overflow.
    constexpr long long kDegreeLimit = 1ll << 40;
    for (long long v : dvec.values())
        if (std::llabs(v) > kDegreeLimit)
            throw TooLarge("multidegree entries out of the supported range");

    BalanceReport report;
    report.balanced = true;
    report.strictly_balanced = true;
    report.stably_balanced = true;

    VertexMask exc = curve.exceptional_mask();
    for_each_two_sided_subcurve(
        curve,
        [&](VertexMask mask) {
            SubcurveStats st = subcurve_stats(curve, mask);
            ScaledBounds b = scaled_bounds(d, two_g_minus_2, st);
            long long scaled_deg = b.scale * dvec.on_subcurve(mask);
            if (scaled_deg < b.lower_num) {
                report.balanced = false;
                report.violations.push_back(
                    {mask, BalanceViolation::Side::Lower,
                     Rational(b.lower_num - scaled_deg, b.scale)});
            } else if (scaled_deg > b.upper_num) {
                report.balanced = false;
                report.violations.push_back(
                    {mask, BalanceViolation::Side::Upper,
                     Rational(scaled_deg - b.upper_num, b.scale)});
            } else if (scaled_deg == b.upper_num) {
                report.extremal_subcurves.push_back(mask);
                // Strictly balanced: every crossing edge of an extremal Z must
                // touch the exceptional locus. Stably balanced: Z itself must
                // sit inside it.
                for (const auto& e : curve.edges()) {
                    bool u_in = (mask >> e.u) & 1;
                    bool v_in = (mask >> e.v) & 1;
                    if (u_in == v_in) continue;
                    bool touches_exceptional =
                        ((exc >> e.u) & 1) || ((exc >> e.v) & 1);
                    if (!touches_exceptional) report.strictly_balanced = false;
                }
                if ((mask & ~exc) != 0) report.stably_balanced = false;
            }
        },
        vertex_cap);

    bool exceptional_degrees_one = true;
    for (int i = 0; i < curve.size(); ++i) {
        if ((exc >> i) & 1) {
            if (dvec[i] != 1) exceptional_degrees_one = false;
        }
    }
    report.properly_balanced = report.balanced && exceptional_degrees_one;
    report.strictly_balanced = report.properly_balanced && report.strictly_balanced;
    report.stably_balanced = report.properly_balanced && report.stably_balanced;
    return report;
}

std::vector<Multidegree> enumerate_balanced(const CurveGraph& curve, long long d,
                                            BalanceLevel level, int vertex_cap) {
    if (curve.genus() < 2) throw GenusTooSmall("enumeration requires genus >= 2");
    if (curve.size() > vertex_cap) throw TooLarge("enumeration above the vertex cap");

    int n = curve.size();
    std::vector<long long> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        BasicBounds b = basic_bounds(curve, d, VertexMask(1) << i);
        lo[i] = b.lower.ceil().to_long_long();
        hi[i] = b.upper.floor().to_long_long();
        if (lo[i] > hi[i]) return {};
    }
    std::vector<long long> suffix_lo(n + 1, 0), suffix_hi(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        suffix_lo[i] = suffix_lo[i + 1] + lo[i];
        suffix_hi[i] = suffix_hi[i + 1] + hi[i];
    }

    std::vector<Multidegree> found;
    std::vector<long long> current(n);
    auto walk = [&](auto&& self, int i, long long remaining) -> void {
        if (i == n) {
            Multidegree candidate{std::vector<long long>(current)};
            if (classify_multidegree(curve, candidate, vertex_cap).passes(level))
                found.push_back(std::move(candidate));
            return;
        }
        for (long long v = lo[i]; v <= hi[i]; ++v) {
            long long rest = remaining - v;
            if (rest < suffix_lo[i + 1] || rest > suffix_hi[i + 1]) continue;
            current[i] = v;
            self(self, i + 1, rest);
        }
    };
    walk(walk, 0, d);
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace polcurve
