#ifndef POLCURVE_TESTS_FIXTURES_HPP
#define POLCURVE_TESTS_FIXTURES_HPP

#include "polcurve/curve_graph.hpp"
#include "polcurve/multidegree.hpp"

namespace polcurve::tests {

// Two genus-1 components joined at two nodes; genus 3.
inline CurveGraph two_edge_curve() {
    return CurveGraph({{"a", 1, 0}, {"b", 1, 0}},
                      {{"a", "b", 1}, {"a", "b", 1}});
}

// One node of the two-edge curve blown up; genus 3.
inline CurveGraph one_blowup_curve() {
    return CurveGraph({{"a", 1, 0}, {"b", 1, 0}, {"e1", 0, 0}},
                      {{"a", "b", 1}, {"a", "e1", 1}, {"e1", "b", 1}});
}

// Both nodes blown up: the square graph; genus 3.
inline CurveGraph square_curve() {
    return CurveGraph({{"a", 1, 0}, {"b", 1, 0}, {"e1", 0, 0}, {"e2", 0, 0}},
                      {{"a", "e1", 1}, {"e1", "b", 1}, {"b", "e2", 1}, {"e2", "a", 1}});
}

// Irreducible cuspidal curve of genus 3.
inline CurveGraph cuspidal_curve() {
    return CurveGraph({{"v", 3, 1}}, {});
}

// The cusp of the cuspidal curve blown up: v'(g=2) joined to a line by a
// tacnode; genus 3.
inline CurveGraph cusp_blowup_curve() {
    return CurveGraph({{"v", 2, 0}, {"e1", 0, 0}}, {{"v", "e1", 2}});
}

// Elliptic tail attached to a genus-2 component; genus 3.
inline CurveGraph tail_curve() {
    return CurveGraph({{"a", 1, 0}, {"b", 2, 0}}, {{"a", "b", 1}});
}

// Smooth irreducible curve of genus 3.
inline CurveGraph smooth_curve() {
    return CurveGraph({{"v", 3, 0}}, {});
}

inline Multidegree deg(std::vector<long long> values) {
    return Multidegree(std::move(values));
}

}  // namespace polcurve::tests

#endif
