#include "polcurve/positivity.hpp"

#include <algorithm>
#include <bit>

namespace polcurve {

namespace {

struct ScanData {
    bool g_semistable = true;      // deg_Z omega >= 0 on connected Z
    bool g_quasistable = true;     // ... with irreducible exceptional subcurves
    bool g_stable = true;          // deg_Z omega > 0 on connected Z
    bool has_elliptic_tail = false;
    // Degrees of dvec on exceptional subcurves, with a representative.
    std::vector<std::pair<VertexMask, long long>> exceptional_degrees;
    // Direct subcurve criteria: deg_Z > 2g_Z - 2 / 2g_Z - 1 / 2g_Z everywhere.
    bool over_2g_minus_2 = true;
    bool over_2g_minus_1 = true;
    bool over_2g = true;
    VertexMask nonspecial_witness = 0;
    VertexMask gg_witness = 0;
    VertexMask va_witness = 0;
};

ScanData scan(const CurveGraph& curve, const Multidegree& dvec, int vertex_cap) {
    ScanData data;
    VertexMask full = curve.full_mask();
    for_each_connected_subcurve(
        curve,
        [&](VertexMask mask) {
            SubcurveStats st = subcurve_stats(curve, mask);
            long long deg = dvec.on_subcurve(mask);
            if (st.omega_degree < 0) data.g_semistable = false;
            if (st.omega_degree == 0) {
                data.exceptional_degrees.emplace_back(mask, deg);
                if (std::popcount(mask) != 1) data.g_quasistable = false;
            }
            if (mask != full && st.omega_degree <= 0) data.g_stable = false;
            if (mask != full && st.genus == 1 && st.crossing_length == 1)
                data.has_elliptic_tail = true;
            if (deg <= 2 * st.genus - 2) {
                data.over_2g_minus_2 = false;
                if (!data.nonspecial_witness) data.nonspecial_witness = mask;
            }
            if (deg <= 2 * st.genus - 1) {
                data.over_2g_minus_1 = false;
                if (!data.gg_witness) data.gg_witness = mask;
            }
            if (deg <= 2 * st.genus) {
                data.over_2g = false;
                if (!data.va_witness) data.va_witness = mask;
            }
        },
        vertex_cap);
    data.g_quasistable = data.g_quasistable && data.g_semistable;
    return data;
}

TriFlag make_true(std::string basis) {
    return TriFlag{TriFlag::State::True, std::move(basis), {}};
}
TriFlag make_false(std::string basis, std::vector<std::string> witness = {}) {
    return TriFlag{TriFlag::State::False, std::move(basis), std::move(witness)};
}
TriFlag make_open(std::string basis) {
    return TriFlag{TriFlag::State::Undetermined, std::move(basis), {}};
}

}  // namespace

PositivityReport positivity_report(const CurveGraph& curve, const Multidegree& dvec,
                                   long long d, int vertex_cap) {
    if (!curve.connected()) throw NotConnected("positivity needs a connected curve");
    long long g = curve.genus();
    if (g < 2) throw GenusTooSmall("positivity thresholds assume genus >= 2");
    if (dvec.total() != d) throw VertexMismatch("declared degree disagrees with the total");
    BalanceReport balance = classify_multidegree(curve, dvec, vertex_cap);
    if (!balance.balanced)
        throw NotBalanced("the positivity thresholds are stated for balanced multidegrees");

    ScanData data = scan(curve, dvec, vertex_cap);
    PositivityReport report;

    // nef: exact iff for d > g-1.
    if (d > g - 1) {
        bool ok = data.g_semistable;
        std::vector<std::string> witness;
        for (const auto& [mask, deg] : data.exceptional_degrees) {
            if (deg != 0 && deg != 1) {
                ok = false;
                witness = mask_ids(curve, mask);
            }
        }
        report.nef = ok ? make_true("nef iff G-semistable with exceptional degrees 0 or 1")
                        : make_false("exceptional degree outside {0,1} or omega not nef",
                                     std::move(witness));
    } else {
        bool negative = false;
        std::vector<std::string> witness;
        for (int i = 0; i < curve.size(); ++i) {
            if (dvec[i] < 0) {
                negative = true;
                witness = {curve.vertex(i).id};
            }
        }
        report.nef = negative ? make_false("negative component degree", std::move(witness))
                              : make_open("below the nef threshold d > g-1");
    }

    // ample: exact iff for d > 3(g-1).
    if (d > 3 * (g - 1)) {
        bool ok = data.g_quasistable;
        std::vector<std::string> witness;
        for (const auto& [mask, deg] : data.exceptional_degrees) {
            if (deg != 1) {
                ok = false;
                witness = mask_ids(curve, mask);
            }
        }
        report.ample = ok ? make_true("ample iff G-quasistable with exceptional degrees 1")
                          : make_false("exceptional degree != 1 or curve not G-quasistable",
                                       std::move(witness));
    } else {
        bool nonpositive = false;
        std::vector<std::string> witness;
        for (int i = 0; i < curve.size(); ++i) {
            if (dvec[i] <= 0) {
                nonpositive = true;
                witness = {curve.vertex(i).id};
            }
        }
        report.ample = nonpositive
                           ? make_false("non-positive component degree", std::move(witness))
                           : make_open("below the ample threshold d > 3(g-1)");
    }

    // non-special.
    if (data.g_semistable && d > 2 * g - 2)
        report.nonspecial = make_true("G-semistable and d > 2g-2");
    else if (data.over_2g_minus_2)
        report.nonspecial = make_true("deg_Z > 2g_Z-2 on every connected subcurve");
    else
        report.nonspecial = make_open("no threshold applies");

    // globally generated.
    if (report.nef.is_true() && d > 3 * (g - 1))
        report.globally_generated = make_true("nef and d > 3(g-1)");
    else if (data.over_2g_minus_1)
        report.globally_generated = make_true("deg_Z > 2g_Z-1 on every connected subcurve");
    else if (report.nef.is_false())
        report.globally_generated =
            make_false("not nef", report.nef.witness);
    else
        report.globally_generated = make_open("no threshold applies");

    // very ample + normally generated.
    bool high = d > 5 * (g - 1);
    bool tailless = d > std::max(3 * (g - 1), 2 * g) && !data.has_elliptic_tail;
    if (report.ample.is_true() && (high || tailless)) {
        const char* basis = high ? "ample and d > 5(g-1)"
                                 : "ample, d > max(3(g-1), 2g), no elliptic tails";
        report.very_ample = make_true(basis);
        report.normally_generated = make_true(basis);
    } else {
        if (data.over_2g)
            report.very_ample = make_true("deg_Z > 2g_Z on every connected subcurve");
        else if (report.ample.is_false())
            report.very_ample = make_false("not ample", report.ample.witness);
        else
            report.very_ample = make_open("no threshold applies");
        report.normally_generated =
            data.over_2g ? make_true("deg_Z > 2g_Z on every connected subcurve")
                         : make_open("no threshold applies");
    }

    // k-very ampleness is stated only for G-stable curves.
    if (data.g_stable) {
        long long best = 0;
        for (long long k = 2;; ++k) {
            bool plain = d > (2 * k + 3) * (g - 1);
            bool no_tail = !data.has_elliptic_tail && d > (2 * k + 1) * (g - 1);
            if (plain || no_tail) best = k;
            else break;
        }
        if (best >= 2) report.k_very_ample_up_to = best;
    }
    return report;
}

PositivityReport canonical_power_report(const CurveGraph& curve, long long power,
                                        int vertex_cap) {
    if (power < 2) throw Unsupported("canonical powers are reported for i >= 2");
    long long g = curve.genus();
    if (g < 2) throw GenusTooSmall("canonical powers assume genus >= 2");
    std::vector<long long> values(curve.size());
    for (int i = 0; i < curve.size(); ++i) {
        SubcurveStats st = subcurve_stats(curve, VertexMask(1) << i);
        values[i] = power * st.omega_degree;
    }
    Multidegree dvec{std::move(values)};
    long long d = power * (2 * g - 2);
    PositivityReport report = positivity_report(curve, dvec, d, vertex_cap);

    ScanData data = scan(curve, dvec, vertex_cap);
    if (data.g_semistable) {
        report.nonspecial = make_true("canonical power, G-semistable, i >= 2");
        report.globally_generated = make_true("canonical power, G-semistable, i >= 2");
    }
    if (data.g_stable && power >= 3)
        report.very_ample = make_true("canonical power, G-stable, i >= 3");
    if (data.g_quasistable && power >= 3)
        report.normally_generated = make_true("canonical power, G-quasistable, i >= 3");
    return report;
}

}  // namespace polcurve
