#ifndef POLCURVE_STRATA_HPP
#define POLCURVE_STRATA_HPP

#include <string>
#include <vector>

#include "polcurve/curve_graph.hpp"
#include "polcurve/multidegree.hpp"
#include "polcurve/reductions.hpp"

namespace polcurve {

// A pair (X, d) indexing a stratum: quasi-wp-stable curve with a properly
// balanced multidegree.
struct StratumPair {
    CurveGraph curve;
    Multidegree deg;

    void validate(int vertex_cap = kDefaultVertexCap) const;
    std::string key() const;  // canonical label-decorated key
};

// True when `lower` is reachable from `upper` by blowing up nodes and cusps
// while rewriting the multidegree by the elementary rules:
//   external node  (d1, d2) -> (d1 - 1, 1, d2), the -1 on either branch;
//   internal node   d1      -> (d1 - 1, 1);
//   cusp            d       -> (d - 1, 1).
bool preceq(const StratumPair& lower, const StratumPair& upper,
            int vertex_cap = kDefaultVertexCap);

// Balanced multidegree on upper_curve dominating (lower_curve, d_lower):
// un-blowing adds the exceptional degree 1 back onto the chosen branch.
Multidegree lift_multidegree(const CurveGraph& lower_curve, const Multidegree& d_lower,
                             const CurveGraph& upper_curve,
                             int vertex_cap = kDefaultVertexCap);

struct SpecializationStep {
    std::vector<std::pair<std::string, std::string>> blown_up_nodes;
    std::vector<std::string> witness;  // the subcurve attaining its upper extreme
    StratumPair result;
};

struct SpecializationResult {
    StratumPair final;
    std::vector<SpecializationStep> steps;
};

// Iterates the elementary isotrivial specialization until the multidegree is
// strictly balanced. The trace is empty exactly when the input already is.
SpecializationResult specialize_strictly(const StratumPair& pair,
                                         int vertex_cap = kDefaultVertexCap,
                                         int iteration_cap = 64);

struct StrataPoset {
    std::vector<StratumPair> nodes;
    std::vector<std::pair<int, int>> covers;  // (upper index, lower index)

    std::string to_dot() const;
};

// All strata over the blow-up models of a wp-stable base, ordered by the
// covering relations of preceq.
StrataPoset strata_poset(const CurveGraph& base, long long d, ModelKind kind,
                         int vertex_cap = kDefaultVertexCap);

}  // namespace polcurve

#endif
