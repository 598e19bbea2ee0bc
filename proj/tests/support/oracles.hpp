#ifndef POLCURVE_TESTS_ORACLES_HPP
#define POLCURVE_TESTS_ORACLES_HPP

#include "polcurve/bigint.hpp"
#include "polcurve/curve_graph.hpp"

namespace polcurve::tests {

// Weighted spanning-tree count by direct edge-subset enumeration: the sum of
// length products over all spanning trees. Independent of any determinant.
BigInt spanning_tree_count(const CurveGraph& curve);

}  // namespace polcurve::tests

#endif
