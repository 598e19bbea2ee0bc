#ifndef POLCURVE_POSITIVITY_HPP
#define POLCURVE_POSITIVITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "polcurve/curve_graph.hpp"
#include "polcurve/multidegree.hpp"

namespace polcurve {

// The appendix criteria are sufficient conditions (with nef/ample the two
// exact ones), so flags are tri-state with the certifying basis recorded.
struct TriFlag {
    enum class State { True, False, Undetermined };
    State state = State::Undetermined;
    std::string basis;  // which threshold or witness decided it
    std::vector<std::string> witness;

    bool is_true() const { return state == State::True; }
    bool is_false() const { return state == State::False; }
};

struct PositivityReport {
    TriFlag nef;
    TriFlag ample;
    TriFlag nonspecial;
    TriFlag globally_generated;
    TriFlag very_ample;
    TriFlag normally_generated;
    std::optional<long long> k_very_ample_up_to;
};

// Numerical positivity of a balanced multidegree of total degree d.
PositivityReport positivity_report(const CurveGraph& curve, const Multidegree& dvec,
                                   long long d, int vertex_cap = kDefaultVertexCap);

// Positivity of the i-th power of the dualizing sheaf, i >= 2.
PositivityReport canonical_power_report(const CurveGraph& curve, long long power,
                                        int vertex_cap = kDefaultVertexCap);

}  // namespace polcurve

#endif
