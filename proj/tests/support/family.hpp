#ifndef POLCURVE_TESTS_FAMILY_HPP
#define POLCURVE_TESTS_FAMILY_HPP

#include <random>
#include <vector>

#include "polcurve/curve_graph.hpp"

namespace polcurve::tests {

// Every wp-stable curve of the given genus with at most max_vertices
// components, up to labelled isomorphism, in deterministic order.
std::vector<CurveGraph> wp_stable_curves(long long genus, int max_vertices);

// Every quasi-wp-stable curve of the given genus whose non-exceptional part
// has at most max_vertices components: all blow-up models of the wp-stable
// family.
std::vector<CurveGraph> quasi_wp_stable_family(long long genus, int max_vertices);

// Random connected curve with small genus labels, for property sweeps. Edge
// lengths are 1 or 2 (never a length-2 loop); cusp counts stay within genus.
CurveGraph random_connected_curve(std::mt19937& rng, int max_vertices, int max_edges,
                                  bool allow_length_two = true);

}  // namespace polcurve::tests

#endif
