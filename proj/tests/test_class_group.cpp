#include <doctest.h>

#include <random>

#include "polcurve/class_group.hpp"
#include "support/family.hpp"
#include "support/oracles.hpp"
#include "support/fixtures.hpp"

using namespace polcurve;
using namespace polcurve::tests;



TEST_CASE("twister lattice of simple curves") {
    TwisterLattice lattice = twister_lattice(two_edge_curve());
    CHECK(lattice.rows == std::vector<std::vector<long long>>{{-2, 2}, {2, -2}});

    CurveGraph tacnodal({{"a", 1, 0}, {"b", 2, 0}}, {{"a", "b", 2}});
    CHECK(twister_lattice(tacnodal).rows ==
          std::vector<std::vector<long long>>{{-2, 2}, {2, -2}});

    CHECK(twister_lattice(smooth_curve()).rows ==
          std::vector<std::vector<long long>>{{0}});
}

TEST_CASE("twister rows always sum to zero") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        CurveGraph curve = random_connected_curve(rng, 5, 7);
        TwisterLattice lattice = twister_lattice(curve);
        std::vector<long long> sum(curve.size(), 0);
        for (const auto& row : lattice.rows) {
            long long row_sum = 0;
            for (int j = 0; j < curve.size(); ++j) {
                row_sum += row[j];
                sum[j] += row[j];
            }
            CHECK(row_sum == 0);
        }
        for (long long s : sum) CHECK(s == 0);
    }
}

TEST_CASE("degree class groups of small curves") {
    DegreeClassGroup two(two_edge_curve());
    REQUIRE(two.invariant_factors().size() == 1);
    CHECK(two.invariant_factors()[0].to_long_long() == 2);
    CHECK(two.order().to_long_long() == 2);

    CurveGraph triangle({{"a", 1, 0}, {"b", 1, 0}, {"c", 1, 0}},
                        {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}});
    DegreeClassGroup tri(triangle);
    REQUIRE(tri.invariant_factors().size() == 1);
    CHECK(tri.invariant_factors()[0].to_long_long() == 3);

    CurveGraph tree({{"a", 1, 0}, {"b", 1, 0}, {"c", 1, 0}},
                    {{"a", "b", 1}, {"b", "c", 1}});
    DegreeClassGroup trivial(tree);
    CHECK(trivial.invariant_factors().empty());
    CHECK(trivial.order().to_long_long() == 1);
}

TEST_CASE("class group order equals the weighted spanning-tree count") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        CurveGraph curve = random_connected_curve(rng, 5, 6);
        DegreeClassGroup group(curve);
        CHECK(group.order() == spanning_tree_count(curve));
    }
}

TEST_CASE("equivalence detects the twister lattice") {
    CurveGraph curve = two_edge_curve();
    CHECK(are_equivalent(curve, deg({4, 5}), deg({2, 7})).equivalent);
    CHECK(!are_equivalent(curve, deg({4, 5}), deg({5, 4})).equivalent);
    CHECK(!are_equivalent(curve, deg({4, 5}), deg({4, 6})).equivalent);

    EquivalenceResult same = are_equivalent(curve, deg({4, 5}), deg({4, 5}), true);
    CHECK(same.equivalent);
    REQUIRE(same.chain.has_value());
    CHECK(same.chain->empty());
}

TEST_CASE("chain certificates decompose balanced equivalences") {
    CurveGraph curve = two_edge_curve();
    // At total degree 10, (6,4) and (4,6) are balanced and equivalent; {a}
    // attains its upper extreme for (6,4) and one twist moves between them.
    EquivalenceResult result = are_equivalent(curve, deg({6, 4}), deg({4, 6}), true);
    CHECK(result.equivalent);
    CHECK(result.chain_searched);
    REQUIRE(result.chain.has_value());
    REQUIRE(result.chain->size() == 1);
    CHECK((*result.chain)[0] == VertexMask(0b01));
    CHECK(result.chain_normalized);
}

TEST_CASE("chains are found and verify for every equivalent balanced pair") {
    long long found = 0;
    for (const CurveGraph& curve : quasi_wp_stable_family(2, 3)) {
        if (curve.size() > 4) continue;
        DegreeClassGroup group(curve);
        TwisterLattice lattice = twister_lattice(curve);
        long long two_g_minus_2 = 2 * curve.genus() - 2;
        for (long long d = 3; d <= 6; ++d) {
            auto balanced = enumerate_balanced(curve, d, BalanceLevel::Balanced);
            std::vector<std::string> keys;
            for (const auto& b : balanced) keys.push_back(group.class_key(b));
            for (std::size_t i = 0; i < balanced.size(); ++i) {
                for (std::size_t j = 0; j < balanced.size(); ++j) {
                    if (i == j || keys[i] != keys[j]) continue;
                    EquivalenceResult res =
                        are_equivalent(curve, balanced[i], balanced[j], true);
                    REQUIRE(res.equivalent);
                    REQUIRE(res.chain.has_value());
                    ++found;
                    // Chain members are nested, attain the upper extreme for
                    // the first multidegree, and their twists telescope.
                    std::vector<long long> acc(curve.size(), 0);
                    VertexMask previous = 0;
                    for (VertexMask z : *res.chain) {
                        if (previous) CHECK((previous & z) == previous);
                        previous = z;
                        SubcurveStats st = subcurve_stats(curve, z);
                        CHECK(2 * two_g_minus_2 * balanced[i].on_subcurve(z) ==
                              2 * d * st.omega_degree +
                                  two_g_minus_2 * st.crossing_length);
                        std::vector<long long> twist = lattice.twist(z);
                        for (int k = 0; k < curve.size(); ++k) acc[k] += twist[k];
                    }
                    for (int k = 0; k < curve.size(); ++k)
                        CHECK(acc[k] == balanced[j][k] - balanced[i][k]);
                }
            }
        }
    }
    CHECK(found > 100);
}

TEST_CASE("equivalence is an equivalence relation") {
    std::mt19937 rng(37);
    int checked = 0;
    while (checked < 30) {
        CurveGraph curve = random_connected_curve(rng, 4, 5);
        if (curve.genus() < 2) continue;
        ++checked;
        TwisterLattice lattice = twister_lattice(curve);
        auto random_deg = [&](long long total) {
            std::vector<long long> values(curve.size(), 0);
            long long rest = total;
            for (int i = 0; i + 1 < curve.size(); ++i) {
                values[i] = static_cast<long long>(rng() % 9) - 2;
                rest -= values[i];
            }
            values[curve.size() - 1] = rest;
            return Multidegree{std::move(values)};
        };
        Multidegree a = random_deg(11);
        // b: a twisted by a random subcurve, hence equivalent.
        VertexMask mask = 1 + rng() % (curve.full_mask());
        std::vector<long long> twisted(a.values());
        std::vector<long long> twist = lattice.twist(mask);
        for (int i = 0; i < curve.size(); ++i) twisted[i] += twist[i];
        Multidegree b{std::move(twisted)};
        Multidegree c = random_deg(11);

        CHECK(are_equivalent(curve, a, a).equivalent);
        CHECK(are_equivalent(curve, a, b).equivalent);
        CHECK(are_equivalent(curve, b, a).equivalent);
        bool ac = are_equivalent(curve, a, c).equivalent;
        bool bc = are_equivalent(curve, b, c).equivalent;
        CHECK(ac == bc);
    }
}

TEST_CASE("balanced representative: greedy descent example") {
    CurveGraph curve = two_edge_curve();
    Multidegree rep = balanced_representative(curve, deg({9, 0}));
    CHECK(rep == deg({5, 4}));
    CHECK(are_equivalent(curve, rep, deg({9, 0})).equivalent);
}

TEST_CASE("balanced representative fixes balanced input") {
    CurveGraph curve = two_edge_curve();
    Multidegree rep = balanced_representative(curve, deg({4, 5}));
    CHECK(classify_multidegree(curve, rep).balanced);
    CHECK(are_equivalent(curve, rep, deg({4, 5})).equivalent);
}

TEST_CASE("balanced representative on a concentrated square input") {
    CurveGraph curve = square_curve();
    Multidegree input = deg({12, 0, 0, 0});
    Multidegree rep = balanced_representative(curve, input);
    CHECK(classify_multidegree(curve, rep).balanced);
    CHECK(are_equivalent(curve, rep, input).equivalent);

    // Exhaustive cross-check: the class meets the balanced box.
    DegreeClassGroup group(curve);
    std::string key = group.class_key(input);
    bool found = false;
    for (const Multidegree& b : enumerate_balanced(curve, 12, BalanceLevel::Balanced))
        if (group.class_key(b) == key) found = true;
    CHECK(found);
}

TEST_CASE("balanced representative accepts negative starting entries") {
    CurveGraph curve = two_edge_curve();
    Multidegree rep = balanced_representative(curve, deg({-5, 14}));
    CHECK(classify_multidegree(curve, rep).balanced);
    CHECK(are_equivalent(curve, rep, deg({-5, 14})).equivalent);
}
