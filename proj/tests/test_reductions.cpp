#include <doctest.h>

#include "polcurve/reductions.hpp"
#include "support/fixtures.hpp"

using namespace polcurve;
using namespace polcurve::tests;

TEST_CASE("blowing up a node of the two-edge curve") {
    CurveGraph curve = two_edge_curve();
    BlowupResult blown = blow_up(curve, BlowupSite::external_node(0));
    CHECK(blown.curve.genus() == 3);
    CHECK(isomorphic(blown.curve, one_blowup_curve()));
    REQUIRE(blown.contraction.contracted.size() == 1);
}

TEST_CASE("blowing up a cusp") {
    CurveGraph curve = cuspidal_curve();
    BlowupResult blown = blow_up(curve, BlowupSite::cusp("v"));
    CHECK(blown.curve.genus() == 3);
    CHECK(isomorphic(blown.curve, cusp_blowup_curve()));
    CHECK_THROWS_AS(blow_up(smooth_curve(), BlowupSite::cusp("v")), NoCusp);
}

TEST_CASE("blowing up a loop") {
    CurveGraph curve({{"v", 2, 0}}, {{"v", "v", 1}});
    REQUIRE(curve.genus() == 3);
    BlowupResult blown = blow_up(curve, BlowupSite::internal_node(0));
    CHECK(blown.curve.genus() == 3);
    CHECK(blown.curve.size() == 2);
    // Doubled edge onto the new line.
    int doubled = 0;
    for (const auto& e : blown.curve.edges())
        if (e.u != e.v && e.length == 1) ++doubled;
    CHECK(doubled == 2);
}

TEST_CASE("wp-stable reduction contracts both kinds of exceptional line") {
    ReductionResult from_square = wps_reduce(square_curve());
    CHECK(isomorphic(from_square.curve, two_edge_curve()));
    CHECK(from_square.curve.genus() == 3);
    CHECK(from_square.contraction.contracted.size() == 2);

    ReductionResult from_cusp = wps_reduce(cusp_blowup_curve());
    CHECK(isomorphic(from_cusp.curve, cuspidal_curve()));
    REQUIRE(from_cusp.contraction.contracted.size() == 1);
    CHECK(std::holds_alternative<ContractedToCusp>(
        from_cusp.contraction.contracted[0].target));
}

TEST_CASE("wp-stable reduction is the identity on wp-stable curves") {
    ReductionResult result = wps_reduce(two_edge_curve());
    CHECK(isomorphic(result.curve, two_edge_curve()));
    CHECK(result.contraction.contracted.empty());
}

TEST_CASE("wp-stable reduction rejects bad input") {
    // A tacnode between two non-rational components is not quasi-wp-stable.
    CurveGraph tacnodal({{"a", 1, 0}, {"b", 2, 0}}, {{"a", "b", 2}});
    CHECK_THROWS_AS(wps_reduce(tacnodal), NotQuasiWpStable);
}

TEST_CASE("p-stable reduction contracts elliptic tails") {
    ReductionResult result = ps_reduce(tail_curve());
    CHECK(isomorphic(result.curve, cuspidal_curve()));
    CHECK(result.curve.genus() == 3);

    ReductionResult fixed = ps_reduce(cuspidal_curve());
    CHECK(isomorphic(fixed.curve, cuspidal_curve()));

    ReductionResult square = ps_reduce(square_curve());
    CHECK(isomorphic(square.curve, two_edge_curve()));
}

TEST_CASE("p-stable reduction iterates until no tail is left") {
    // A chain a(1) - b(1) - c(2): contracting the tail {a} turns b into a
    // genus-2 cuspidal component and no further tail appears.
    CurveGraph chain({{"a", 1, 0}, {"b", 1, 0}, {"c", 2, 0}},
                     {{"a", "b", 1}, {"b", "c", 1}});
    REQUIRE(chain.genus() == 4);
    ReductionResult result = ps_reduce(chain);
    CHECK(result.curve.genus() == 4);
    CurveClass cls = classify_curve(result.curve);
    CHECK(cls.p_stable);
    CHECK(cls.elliptic_tails.empty());
}

TEST_CASE("p-stable reduction needs genus at least three") {
    CurveGraph small({{"a", 1, 0}, {"b", 1, 0}}, {{"a", "b", 1}});
    CHECK_THROWS_AS(ps_reduce(small), GenusTooSmall);
}

TEST_CASE("tail contraction order does not matter") {
    // Two tails hang off the middle component; relabeling reverses the pick
    // order of the lexicographic tie-break.
    CurveGraph forward({{"a", 1, 0}, {"m", 2, 0}, {"z", 1, 0}},
                       {{"a", "m", 1}, {"m", "z", 1}});
    CurveGraph backward({{"z", 1, 0}, {"m", 2, 0}, {"a", 1, 0}},
                        {{"z", "m", 1}, {"m", "a", 1}});
    ReductionResult one = ps_reduce(forward);
    ReductionResult two = ps_reduce(backward);
    CHECK(isomorphic(one.curve, two.curve));
    CHECK(one.curve.size() == 1);
    CHECK(one.curve.vertex(0).cusps == 2);
    CHECK(one.curve.genus() == 4);
}

TEST_CASE("models of the two-edge curve") {
    auto models = enumerate_models(two_edge_curve(), ModelKind::QuasiStable);
    CHECK(models.size() == 3);  // blow up zero, one, or two of the parallel nodes
    for (const CurveGraph& model : models) {
        CHECK(model.genus() == 3);
        CHECK(isomorphic(wps_reduce(model).curve, two_edge_curve()));
        CHECK(classify_curve(model).quasi_stable);
    }
}

TEST_CASE("models of the cuspidal curve") {
    auto models = enumerate_models(cuspidal_curve(), ModelKind::QuasiPStable);
    CHECK(models.size() == 2);  // cusp blown up or not
    auto none = enumerate_models(smooth_curve(), ModelKind::QuasiPStable);
    REQUIRE(none.size() == 1);
    CHECK(isomorphic(none[0], smooth_curve()));
}

TEST_CASE("model enumeration rejects the wrong base class") {
    CHECK_THROWS_AS(enumerate_models(cuspidal_curve(), ModelKind::QuasiStable),
                    WrongInputClass);
    CHECK_THROWS_AS(enumerate_models(tail_curve(), ModelKind::QuasiPStable),
                    WrongInputClass);
    CHECK_THROWS_AS(enumerate_models(square_curve(), ModelKind::QuasiWpStable),
                    WrongInputClass);
}

TEST_CASE("blow-up followed by reduction is the identity") {
    CurveGraph looped({{"v", 2, 0}, {"w", 1, 1}}, {{"v", "v", 1}, {"v", "w", 1}});
    std::vector<CurveGraph> seeds{two_edge_curve(), cuspidal_curve(), looped};
    for (const CurveGraph& seed : seeds) {
        for (int e = 0; e < seed.edge_count(); ++e) {
            const auto& edge = seed.edge(e);
            BlowupSite site = edge.u == edge.v ? BlowupSite::internal_node(e)
                                               : BlowupSite::external_node(e);
            BlowupResult blown = blow_up(seed, site);
            CHECK(blown.curve.genus() == seed.genus());
            CHECK(isomorphic(wps_reduce(blown.curve).curve, seed));
        }
        for (int v = 0; v < seed.size(); ++v) {
            if (seed.vertex(v).cusps == 0) continue;
            BlowupResult blown = blow_up(seed, BlowupSite::cusp(seed.vertex(v).id));
            CHECK(blown.curve.genus() == seed.genus());
            CHECK(isomorphic(wps_reduce(blown.curve).curve, seed));
        }
    }
}

TEST_CASE("model counts stay under the subset bound") {
    CurveGraph triangle({{"a", 1, 0}, {"b", 1, 0}, {"c", 1, 0}},
                        {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}});
    auto models = enumerate_models(triangle, ModelKind::QuasiStable);
    CHECK(models.size() <= 8u);
    CHECK(models.size() == 4u);  // 0, 1, 2, or 3 nodes up to rotation
}
