#include "polcurve/git_classifier.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "polcurve/reductions.hpp"

namespace polcurve {

DegreeRegime classify_regime(long long g, long long d) {
    if (g < 2) throw GenusTooSmall("degree regimes are defined for genus >= 2");
    DegreeRegime regime;
    regime.g = g;
    regime.d = d;
    regime.slope = Rational(d, 2 * g - 2);
    long long twice = 2 * (2 * g - 2);
    long long quadruple = 4 * (2 * g - 2);
    // 7/2(2g-2) = 7(g-1), an integer.
    long long seven_half = 7 * (g - 1);
    if (d > quadruple) regime.kind = RegimeKind::TheoremA;
    else if (d >= seven_half) regime.kind = RegimeKind::OpenBand;
    else if (d > twice) regime.kind = g >= 3 ? RegimeKind::TheoremB : RegimeKind::NecessaryOnly;
    else regime.kind = RegimeKind::OutOfRange;
    return regime;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Undetermined: return "undetermined";
    }
    return "undetermined";
}

GITReport git_classify(const CurveGraph& curve, const Multidegree& dvec,
                       long long g, long long d, int vertex_cap) {
    if (!curve.connected()) throw NotConnected("git_classify requires a connected curve");
    if (curve.genus() != g)
        throw VertexMismatch("declared genus disagrees with the curve");
    if (dvec.total() != d)
        throw VertexMismatch("declared degree disagrees with the multidegree total");

    GITReport report;
    report.regime = classify_regime(g, d);
    if (report.regime.kind == RegimeKind::OutOfRange)
        throw Unsupported("no classification is available for d <= 2(2g-2)");

    CurveClass cls = classify_curve(curve, vertex_cap);
    BalanceReport balance = classify_multidegree(curve, dvec, vertex_cap);
    report.necessary_conditions_met = cls.quasi_wp_stable && balance.properly_balanced;
    if (!cls.quasi_wp_stable) report.reasons.push_back("curve is not quasi-wp-stable");
    if (!balance.properly_balanced) {
        report.reasons.push_back("multidegree is not properly balanced");
        for (const auto& violation : balance.violations)
            report.witnesses.push_back(mask_ids(curve, violation.subcurve));
    }

    auto decide = [&](bool curve_ok, const char* class_name) {
        if (!curve_ok) {
            report.semistable = Verdict::No;
            report.polystable = Verdict::No;
            report.stable = Verdict::No;
            report.reasons.push_back(std::string("curve is not ") + class_name);
            return;
        }
        report.semistable = balance.balanced ? Verdict::Yes : Verdict::No;
        report.polystable = balance.strictly_balanced ? Verdict::Yes : Verdict::No;
        report.stable = balance.stably_balanced ? Verdict::Yes : Verdict::No;
        if (!balance.balanced) {
            report.reasons.push_back("multidegree is not balanced");
            for (const auto& violation : balance.violations)
                report.witnesses.push_back(mask_ids(curve, violation.subcurve));
        } else if (!balance.stably_balanced) {
            for (VertexMask mask : balance.extremal_subcurves)
                report.witnesses.push_back(mask_ids(curve, mask));
        }
        if (report.semistable == Verdict::Yes)
            report.stabilizer_dimension = cls.non_exceptional_components;
    };

    switch (report.regime.kind) {
        case RegimeKind::TheoremA:
            decide(cls.quasi_stable, "quasi-stable");
            break;
        case RegimeKind::TheoremB:
            decide(cls.quasi_p_stable, "quasi-p-stable");
            break;
        case RegimeKind::NecessaryOnly:
            // Inside the B band with g = 2 the elliptic-tail obstruction still
            // applies; everything else stays open.
            if (!cls.elliptic_tails.empty()) {
                report.semistable = Verdict::No;
                report.polystable = Verdict::No;
                report.stable = Verdict::No;
                report.reasons.push_back("curve has an elliptic tail inside the band");
                for (VertexMask mask : cls.elliptic_tails)
                    report.witnesses.push_back(mask_ids(curve, mask));
            }
            break;
        case RegimeKind::OpenBand:
            report.reasons.push_back("degree lies in the open band; no characterization");
            break;
        case RegimeKind::OutOfRange:
            break;
    }
    return report;
}

bool is_geometric_quotient(long long g, long long d) {
    if (g < 3) throw GenusTooSmall("the geometric-quotient criterion needs genus >= 3");
    long long a = d + 1 - g;
    long long b = 2 * g - 2;
    return std::gcd(a, b) == 1;
}

int stabilizer_dim(const CurveGraph& curve, int vertex_cap) {
    CurveClass cls = classify_curve(curve, vertex_cap);
    bool admissible = (cls.quasi_stable && curve.genus() >= 2) ||
                      (cls.quasi_p_stable && curve.genus() >= 3);
    if (!admissible)
        throw WrongInputClass(
            "stabilizer dimension needs a quasi-stable (g>=2) or quasi-p-stable (g>=3) curve");
    return cls.non_exceptional_components;
}

long long SheafData::total_degree() const {
    return degree_on(base.full_mask());
}

long long SheafData::degree_on(VertexMask mask) const {
    long long sum = 0;
    VertexMask cursor = mask;
    while (cursor) {
        int i = std::countr_zero(cursor);
        cursor &= cursor - 1;
        sum += degrees[i];
    }
    // Non-free nodes joining two distinct components inside the subcurve add
    // one each (torsion bookkeeping for restrictions).
    for (int e : non_free_edges) {
        const auto& edge = base.edge(e);
        if (edge.u == edge.v) continue;
        if (((mask >> edge.u) & 1) && ((mask >> edge.v) & 1)) sum += 1;
    }
    return sum;
}

SheafData simpson_pushforward(const CurveGraph& curve, const Multidegree& dvec,
                              int vertex_cap) {
    CurveClass cls = classify_curve(curve, vertex_cap);
    if (!cls.quasi_p_stable)
        throw WrongInputClass("the pushforward is defined on quasi-p-stable curves");
    BalanceReport balance = classify_multidegree(curve, dvec, vertex_cap);
    if (!balance.properly_balanced)
        throw NotProperlyBalanced("the pushforward needs a properly balanced multidegree");

    ReductionResult reduced = wps_reduce(curve, vertex_cap);
    SheafData sheaf;
    sheaf.base = reduced.curve;
    sheaf.degrees.assign(sheaf.base.size(), 0);
    for (int i = 0; i < curve.size(); ++i) {
        if (curve.is_exceptional_vertex(i)) continue;
        int j = sheaf.base.index_of(curve.vertex(i).id);
        sheaf.degrees[j] = dvec[i];
    }
    for (const auto& contracted : reduced.contraction.contracted) {
        int src = curve.index_of(contracted.vertex);
        if (const auto* node = std::get_if<ContractedToNode>(&contracted.target)) {
            int ju = sheaf.base.index_of(node->u);
            int jw = sheaf.base.index_of(node->w);
            int found = -1;
            for (int e = 0; e < sheaf.base.edge_count(); ++e) {
                const auto& edge = sheaf.base.edge(e);
                if (edge.length == 1 && edge.u == std::min(ju, jw) &&
                    edge.v == std::max(ju, jw) && !sheaf.non_free_edges.count(e))
                    found = e;
            }
            if (found < 0)
                throw Error("pushforward lost track of a contracted node site");
            sheaf.non_free_edges.insert(found);
            if (ju == jw) {
                // Internal node: the site sits on a single component, whose
                // sheaf degree absorbs the exceptional unit.
                sheaf.degrees[ju] += dvec[src];
            }
        } else if (const auto* cusp = std::get_if<ContractedToCusp>(&contracted.target)) {
            int j = sheaf.base.index_of(cusp->vertex);
            sheaf.degrees[j] += dvec[src];
            sheaf.non_free_cusps[j] += 1;
        }
    }
    return sheaf;
}

bool simpson_semistable(const SheafData& sheaf, long long d, int vertex_cap) {
    const CurveGraph& base = sheaf.base;
    CurveClass cls = classify_curve(base, vertex_cap);
    if (!cls.p_stable)
        throw WrongInputClass("slope semistability is stated over a p-stable base");
    long long two_g_minus_2 = 2 * base.genus() - 2;
    bool ok = true;
    VertexMask full = base.full_mask();
    for_each_connected_subcurve(
        base,
        [&](VertexMask mask) {
            if (mask == full || !ok) return;
            SubcurveStats st = subcurve_stats(base, mask);
            // deg_Y(I) >= d deg_Y(omega)/(2g-2) - k_Y/2, scaled by 2(2g-2).
            long long lhs = 2 * two_g_minus_2 * sheaf.degree_on(mask);
            long long rhs = 2 * d * st.omega_degree - two_g_minus_2 * st.crossing_length;
            if (lhs < rhs) ok = false;
        },
        vertex_cap);
    return ok;
}

}  // namespace polcurve
