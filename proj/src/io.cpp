#include "polcurve/io.hpp"

namespace polcurve::io {

namespace {

long long require_int(const json& value, const char* what) {
    if (!value.is_number_integer())
        throw ParseError(std::string("expected an integer for ") + what);
    return value.get<long long>();
}

}  // namespace

CurveGraph parse_curve(const json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw ParseError("curve document needs 'vertices' and 'edges'");
    std::vector<VertexData> vertices;
    for (const auto& v : doc.at("vertices")) {
        if (!v.contains("id")) throw ParseError("vertex without an id");
        VertexData data;
        data.id = v.at("id").get<std::string>();
        data.genus = v.contains("genus") ? require_int(v.at("genus"), "genus") : 0;
        data.cusps = v.contains("cusps") ? require_int(v.at("cusps"), "cusps") : 0;
        vertices.push_back(std::move(data));
    }
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (const auto& e : doc.at("edges")) {
        if (!e.contains("ends") || e.at("ends").size() != 2)
            throw ParseError("edge without a two-element 'ends'");
        int length = e.contains("length")
                         ? static_cast<int>(require_int(e.at("length"), "length"))
                         : 1;
        edges.emplace_back(e.at("ends")[0].get<std::string>(),
                           e.at("ends")[1].get<std::string>(), length);
    }
    try {
        return CurveGraph(std::move(vertices), edges);
    } catch (const Error& err) {
        throw ParseError(std::string("invalid curve: ") + err.what());
    }
}

CurveGraph parse_curve_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("curve document is not valid JSON");
    return parse_curve(doc);
}

json curve_to_json(const CurveGraph& curve) {
    json vertices = json::array();
    for (const auto& v : curve.vertices())
        vertices.push_back({{"id", v.id}, {"genus", v.genus}, {"cusps", v.cusps}});
    json edges = json::array();
    for (const auto& e : curve.edges())
        edges.push_back({{"ends", {curve.vertex(e.u).id, curve.vertex(e.v).id}},
                         {"length", e.length}});
    return json{{"vertices", vertices}, {"edges", edges}};
}

Multidegree parse_multidegree(const json& doc, const CurveGraph& curve) {
    if (!doc.is_object() || !doc.contains("values"))
        throw ParseError("multidegree document needs 'values'");
    std::map<std::string, long long> values;
    for (const auto& [id, value] : doc.at("values").items())
        values[id] = require_int(value, "multidegree value");
    Multidegree dvec;
    try {
        dvec = Multidegree(curve, values);
    } catch (const Error& err) {
        throw ParseError(std::string("invalid multidegree: ") + err.what());
    }
    if (doc.contains("total") &&
        require_int(doc.at("total"), "total") != dvec.total())
        throw ParseError("multidegree 'total' disagrees with the values");
    return dvec;
}

Multidegree parse_multidegree_text(const std::string& text, const CurveGraph& curve) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("multidegree document is not valid JSON");
    return parse_multidegree(doc, curve);
}

json multidegree_to_json(const CurveGraph& curve, const Multidegree& dvec) {
    json values = json::object();
    for (int i = 0; i < curve.size(); ++i) values[curve.vertex(i).id] = dvec[i];
    return json{{"total", dvec.total()}, {"values", values}};
}

json curve_class_to_json(const CurveGraph& curve, const CurveClass& cls) {
    json tails = json::array();
    for (VertexMask mask : cls.elliptic_tails) tails.push_back(mask_ids(curve, mask));
    json exceptional = json::array();
    for (int i : cls.exceptional_vertices) exceptional.push_back(curve.vertex(i).id);
    return json{{"pre_stable", cls.pre_stable},
                {"pre_p_stable", cls.pre_p_stable},
                {"pre_wp_stable", cls.pre_wp_stable},
                {"quasi_stable", cls.quasi_stable},
                {"quasi_p_stable", cls.quasi_p_stable},
                {"quasi_wp_stable", cls.quasi_wp_stable},
                {"stable", cls.stable},
                {"p_stable", cls.p_stable},
                {"wp_stable", cls.wp_stable},
                {"g_semistable", cls.g_semistable},
                {"g_quasistable", cls.g_quasistable},
                {"g_stable", cls.g_stable},
                {"exceptional_vertices", exceptional},
                {"non_exceptional_components", cls.non_exceptional_components},
                {"elliptic_tails", tails}};
}

json balance_report_to_json(const CurveGraph& curve, const BalanceReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back(
            {{"subcurve", mask_ids(curve, v.subcurve)},
             {"side", v.side == BalanceViolation::Side::Upper ? "upper" : "lower"},
             {"excess", v.excess.to_string()}});
    }
    json extremal = json::array();
    for (VertexMask mask : report.extremal_subcurves)
        extremal.push_back(mask_ids(curve, mask));
    return json{{"balanced", report.balanced},
                {"properly_balanced", report.properly_balanced},
                {"strictly_balanced", report.strictly_balanced},
                {"stably_balanced", report.stably_balanced},
                {"violations", violations},
                {"extremal_subcurves", extremal}};
}

namespace {

const char* regime_name(RegimeKind kind) {
    switch (kind) {
        case RegimeKind::TheoremA: return "theoremA";
        case RegimeKind::TheoremB: return "theoremB";
        case RegimeKind::OpenBand: return "open_band";
        case RegimeKind::NecessaryOnly: return "necessary_only";
        case RegimeKind::OutOfRange: return "out_of_range";
    }
    return "out_of_range";
}

}  // namespace

json git_report_to_json(const GITReport& report) {
    json out{{"regime", regime_name(report.regime.kind)},
             {"g", report.regime.g},
             {"d", report.regime.d},
             {"slope", report.regime.slope.to_string()},
             {"semistable", verdict_name(report.semistable)},
             {"polystable", verdict_name(report.polystable)},
             {"stable", verdict_name(report.stable)},
             {"necessary_conditions_met", report.necessary_conditions_met},
             {"reasons", report.reasons},
             {"witnesses", report.witnesses}};
    if (report.stabilizer_dimension)
        out["stabilizer_dim"] = *report.stabilizer_dimension;
    return out;
}

namespace {

json tri_to_json(const TriFlag& flag) {
    const char* state = flag.state == TriFlag::State::True
                            ? "true"
                            : flag.state == TriFlag::State::False ? "false"
                                                                  : "undetermined";
    json out{{"state", state}, {"basis", flag.basis}};
    if (!flag.witness.empty()) out["witness"] = flag.witness;
    return out;
}

}  // namespace

json positivity_report_to_json(const PositivityReport& report) {
    json out{{"nef", tri_to_json(report.nef)},
             {"ample", tri_to_json(report.ample)},
             {"nonspecial", tri_to_json(report.nonspecial)},
             {"globally_generated", tri_to_json(report.globally_generated)},
             {"very_ample", tri_to_json(report.very_ample)},
             {"normally_generated", tri_to_json(report.normally_generated)}};
    if (report.k_very_ample_up_to) out["k_very_ample_up_to"] = *report.k_very_ample_up_to;
    return out;
}

json contraction_to_json(const ContractionMap& map) {
    json contracted = json::array();
    for (const auto& c : map.contracted) {
        json entry{{"vertex", c.vertex}};
        if (const auto* node = std::get_if<ContractedToNode>(&c.target))
            entry["target"] = json{{"node", {node->u, node->w}}};
        else if (const auto* cusp = std::get_if<ContractedToCusp>(&c.target))
            entry["target"] = json{{"cusp", cusp->vertex}};
        contracted.push_back(entry);
    }
    return json{{"contracted", contracted}};
}

json class_group_to_json(const DegreeClassGroup& group) {
    json factors = json::array();
    for (const BigInt& f : group.invariant_factors()) factors.push_back(f.to_string());
    return json{{"invariant_factors", factors}, {"order", group.order().to_string()}};
}

json equivalence_to_json(const CurveGraph& curve, const EquivalenceResult& result) {
    json out{{"equivalent", result.equivalent},
             {"chain_searched", result.chain_searched}};
    if (result.chain) {
        json chain = json::array();
        for (VertexMask mask : *result.chain) chain.push_back(mask_ids(curve, mask));
        out["chain"] = chain;
        out["chain_normalized"] = result.chain_normalized;
    }
    return out;
}

json destab_check_to_json(const DestabCheck& check) {
    const char* verdict = check.verdict == DestabCheck::Verdict::ChowUnstable
                              ? "chow_unstable"
                              : check.verdict == DestabCheck::Verdict::Boundary
                                    ? "boundary"
                                    : "inconclusive";
    json out{{"g", check.g},
             {"d", check.d},
             {"r", check.r},
             {"total_weight", check.total_weight},
             {"lhs", check.lhs.to_string()},
             {"rhs", check.rhs.to_string()},
             {"verdict", verdict}};
    if (!check.note.empty()) out["note"] = check.note;
    return out;
}

json destab_certificate_to_json(const DestabCertificate& cert) {
    return json{{"subcurve", cert.subcurve},
                {"subcurve_degree", cert.subcurve_degree},
                {"subcurve_genus", cert.subcurve_genus},
                {"crossing_length", cert.crossing_length},
                {"h0_subcurve", cert.h0_subcurve},
                {"h0_total", cert.h0_total},
                {"dim_vanishing", cert.dim_vanishing},
                {"weight_bound", {{"m2", cert.quad_m2.to_string()},
                                  {"m1", cert.quad_m1.to_string()}}},
                {"rhs_factor", cert.rhs_factor.to_string()},
                {"identity_holds", cert.identity_holds}};
}

json sheaf_to_json(const SheafData& sheaf) {
    json degrees = json::object();
    for (int i = 0; i < sheaf.base.size(); ++i)
        degrees[sheaf.base.vertex(i).id] = sheaf.degrees[i];
    json nodes = json::array();
    for (int e : sheaf.non_free_edges) {
        const auto& edge = sheaf.base.edge(e);
        nodes.push_back({sheaf.base.vertex(edge.u).id, sheaf.base.vertex(edge.v).id});
    }
    json cusps = json::object();
    for (const auto& [vertex, count] : sheaf.non_free_cusps)
        cusps[sheaf.base.vertex(vertex).id] = count;
    return json{{"base", curve_to_json(sheaf.base)},
                {"degrees", degrees},
                {"non_free_nodes", nodes},
                {"non_free_cusps", cusps},
                {"total_degree", sheaf.total_degree()}};
}

}  // namespace polcurve::io
