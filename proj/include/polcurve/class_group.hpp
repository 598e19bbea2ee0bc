#ifndef POLCURVE_CLASS_GROUP_HPP
#define POLCURVE_CLASS_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "polcurve/bigint.hpp"
#include "polcurve/curve_graph.hpp"
#include "polcurve/multidegree.hpp"

namespace polcurve {

// Row i is the twister multidegree C_i: off-diagonal entries are the total
// intersection lengths |C_i . C_j|, the diagonal entry makes the row sum to
// zero. Rows generate the lattice Lambda_X; the single relation among them is
// that they sum to zero.
struct TwisterLattice {
    std::vector<std::vector<long long>> rows;

    std::vector<long long> twist(VertexMask subset) const;  // underline-Z
};

TwisterLattice twister_lattice(const CurveGraph& curve);

// Smith normal form D = U * A * V of the twister matrix, with unimodular U, V
// kept so class-membership questions become single vector-matrix solves.
struct SmithData {
    std::vector<BigInt> diagonal;
    std::vector<std::vector<BigInt>> left;   // U
    std::vector<std::vector<BigInt>> right;  // V
};

class DegreeClassGroup {
public:
    DegreeClassGroup(const CurveGraph& curve);

    const std::vector<BigInt>& invariant_factors() const { return invariant_factors_; }
    const BigInt& order() const { return order_; }
    const SmithData& smith_data() const { return smith_; }

    // Is the degree-zero vector a member of Lambda_X?
    bool contains(const std::vector<long long>& diff) const;

    // Identifies the class of dvec inside Delta_X^{|dvec|}; equal keys on
    // equal-total multidegrees mean equivalent.
    std::string class_key(const Multidegree& dvec) const;

private:
    int size_;
    std::vector<BigInt> invariant_factors_;
    BigInt order_;
    SmithData smith_;
    // Plain-integer mirror of (V, D) when everything is small, so the hot
    // membership path avoids heap-allocating arithmetic.
    bool fast_ = false;
    std::vector<std::vector<long long>> right_ll_;
    std::vector<long long> diag_ll_;
};

DegreeClassGroup degree_class_group(const CurveGraph& curve);

struct EquivalenceResult {
    bool equivalent = false;
    // Chain certificate in the sense of the twister-chain decomposition: a
    // nested sequence Z_1 <= ... <= Z_m of subcurves (repeats allowed, not
    // necessarily connected), each attaining the upper extreme for the first
    // multidegree, with d2 = d1 + sum of twists. Searched only when both
    // inputs are balanced; absence of a found chain is not evidence of
    // non-equivalence.
    bool chain_searched = false;
    std::optional<std::vector<VertexMask>> chain;
    // Whether the found chain also satisfies Z_i^c inter Z_j empty for i > j.
    bool chain_normalized = false;
};

EquivalenceResult are_equivalent(const CurveGraph& curve, const Multidegree& d1,
                                 const Multidegree& d2, bool want_certificate = false,
                                 int vertex_cap = kDefaultVertexCap);

// A balanced multidegree equivalent to the input: greedy twister descent with
// an exhaustive box-intersect fallback. Throws SearchExhausted only if both
// fail, which contradicts the representative-existence fact and is treated as
// a defect by the test suite.
Multidegree balanced_representative(const CurveGraph& curve, const Multidegree& dvec,
                                    int vertex_cap = kDefaultVertexCap);

}  // namespace polcurve

#endif
