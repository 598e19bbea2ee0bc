#ifndef POLCURVE_REDUCTIONS_HPP
#define POLCURVE_REDUCTIONS_HPP

#include <string>
#include <variant>
#include <vector>

#include "polcurve/curve_graph.hpp"

namespace polcurve {

struct BlowupSite {
    enum class Kind { ExternalNode, InternalNode, Cusp };
    Kind kind = Kind::ExternalNode;
    int edge_index = -1;      // for node kinds, index into the canonical edge list
    std::string vertex_id;    // for cusp sites

    static BlowupSite external_node(int edge_index);
    static BlowupSite internal_node(int edge_index);
    static BlowupSite cusp(std::string vertex_id);
};

struct ContractedToNode {
    std::string u, w;  // endpoints of the node in the target
};
struct ContractedToCusp {
    std::string vertex;
};
struct ContractedVertex {
    std::string vertex;  // exceptional vertex of the source
    std::variant<ContractedToNode, ContractedToCusp> target;
};

// Vertex-level record of a contraction; every contracted vertex was
// exceptional in the source and the total genus is preserved.
struct ContractionMap {
    std::vector<std::pair<std::string, std::string>> vertex_map;  // source -> target
    std::vector<ContractedVertex> contracted;
};

struct BlowupResult {
    CurveGraph curve;
    ContractionMap contraction;  // from the blown-up curve back onto the input
    std::string new_vertex;
};

// Insert an exceptional line at a node (external or internal) or a cusp.
// Genus is preserved in every case.
BlowupResult blow_up(const CurveGraph& curve, const BlowupSite& site);

struct ReductionResult {
    CurveGraph curve;
    ContractionMap contraction;
};

// Contract every exceptional vertex: a two-node line becomes a node, a
// tacnodal line becomes a cusp. Identity on wp-stable input.
ReductionResult wps_reduce(const CurveGraph& curve, int vertex_cap = kDefaultVertexCap);

// wps_reduce followed by contraction of elliptic tails to cusps. Defined
// for genus >= 3 only; genus 2 has no separated p-stable reduction.
ReductionResult ps_reduce(const CurveGraph& curve, int vertex_cap = kDefaultVertexCap);

enum class ModelKind { QuasiStable, QuasiPStable, QuasiWpStable };

// All blow-up models of Y of the requested kind, deduplicated up to labelled
// isomorphism, in deterministic order.
std::vector<CurveGraph> enumerate_models(const CurveGraph& base, ModelKind kind,
                                         int vertex_cap = kDefaultVertexCap);

}  // namespace polcurve

#endif
