#ifndef POLCURVE_IO_HPP
#define POLCURVE_IO_HPP

#include <string>

#include <json.hpp>

#include "polcurve/class_group.hpp"
#include "polcurve/curve_graph.hpp"
#include "polcurve/git_classifier.hpp"
#include "polcurve/hm.hpp"
#include "polcurve/multidegree.hpp"
#include "polcurve/positivity.hpp"
#include "polcurve/reductions.hpp"
#include "polcurve/strata.hpp"

namespace polcurve::io {

using nlohmann::json;

// Curve document: {"vertices": [{"id", "genus", "cusps"}],
//                  "edges": [{"ends": [u, v], "length": 1|2}]}.
// Canonical output sorts vertices by id and edges lexicographically.
CurveGraph parse_curve(const json& doc);
CurveGraph parse_curve_text(const std::string& text);
json curve_to_json(const CurveGraph& curve);

// Multidegree fragment: {"total": d, "values": {id: int}}.
Multidegree parse_multidegree(const json& doc, const CurveGraph& curve);
Multidegree parse_multidegree_text(const std::string& text, const CurveGraph& curve);
json multidegree_to_json(const CurveGraph& curve, const Multidegree& dvec);

json curve_class_to_json(const CurveGraph& curve, const CurveClass& cls);
json balance_report_to_json(const CurveGraph& curve, const BalanceReport& report);
json git_report_to_json(const GITReport& report);
json positivity_report_to_json(const PositivityReport& report);
json contraction_to_json(const ContractionMap& map);
json class_group_to_json(const DegreeClassGroup& group);
// Chain certificates serialize as ordered lists of vertex-id sets.
json equivalence_to_json(const CurveGraph& curve, const EquivalenceResult& result);
json destab_check_to_json(const DestabCheck& check);
json destab_certificate_to_json(const DestabCertificate& cert);
json sheaf_to_json(const SheafData& sheaf);

}  // namespace polcurve::io

#endif
