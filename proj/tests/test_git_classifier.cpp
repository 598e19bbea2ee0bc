#include <doctest.h>

#include "polcurve/git_classifier.hpp"
#include "support/fixtures.hpp"

using namespace polcurve;
using namespace polcurve::tests;

TEST_CASE("degree regimes at genus 3") {
    CHECK(classify_regime(3, 17).kind == RegimeKind::TheoremA);
    CHECK(classify_regime(3, 9).kind == RegimeKind::TheoremB);
    CHECK(classify_regime(3, 13).kind == RegimeKind::TheoremB);
    CHECK(classify_regime(3, 14).kind == RegimeKind::OpenBand);
    CHECK(classify_regime(3, 15).kind == RegimeKind::OpenBand);
    CHECK(classify_regime(3, 16).kind == RegimeKind::OpenBand);
    CHECK(classify_regime(3, 8).kind == RegimeKind::OutOfRange);
    CHECK(classify_regime(3, 9).slope == Rational(9, 4));
}

TEST_CASE("degree regimes at genus 2 fall back to necessary conditions") {
    CHECK(classify_regime(2, 5).kind == RegimeKind::NecessaryOnly);
    CHECK(classify_regime(2, 6).kind == RegimeKind::NecessaryOnly);
    CHECK(classify_regime(2, 7).kind == RegimeKind::OpenBand);
    CHECK(classify_regime(2, 9).kind == RegimeKind::TheoremA);
    CHECK_THROWS_AS(classify_regime(1, 9), GenusTooSmall);
}

TEST_CASE("square blow-up at degree 12: semistable, polystable, not stable") {
    GITReport report = git_classify(square_curve(), deg({5, 5, 1, 1}), 3, 12);
    CHECK(report.regime.kind == RegimeKind::TheoremB);
    CHECK(report.semistable == Verdict::Yes);
    CHECK(report.polystable == Verdict::Yes);
    CHECK(report.stable == Verdict::No);
    REQUIRE(report.stabilizer_dimension.has_value());
    CHECK(*report.stabilizer_dimension == 2);
}

TEST_CASE("elliptic tails are unstable in the B band") {
    GITReport report = git_classify(tail_curve(), deg({2, 7}), 3, 9);
    CHECK(report.regime.kind == RegimeKind::TheoremB);
    CHECK(report.semistable == Verdict::No);
}

TEST_CASE("the blown-up cusp at degree 9 is stable") {
    GITReport report = git_classify(cusp_blowup_curve(), deg({1, 8}), 3, 9);
    CHECK(report.semistable == Verdict::Yes);
    CHECK(report.polystable == Verdict::Yes);
    CHECK(report.stable == Verdict::Yes);
    CHECK(*report.stabilizer_dimension == 1);
}

TEST_CASE("open band verdicts stay undetermined") {
    GITReport report = git_classify(two_edge_curve(), deg({7, 8}), 3, 15);
    CHECK(report.regime.kind == RegimeKind::OpenBand);
    CHECK(report.semistable == Verdict::Undetermined);
    CHECK(report.polystable == Verdict::Undetermined);
    CHECK(report.stable == Verdict::Undetermined);
    CHECK(report.necessary_conditions_met);
}

TEST_CASE("genus-2 band reports necessary conditions only") {
    CurveGraph smooth2({{"v", 2, 0}}, {});
    GITReport open = git_classify(smooth2, deg({5}), 2, 5);
    CHECK(open.regime.kind == RegimeKind::NecessaryOnly);
    CHECK(open.semistable == Verdict::Undetermined);
    CHECK(open.necessary_conditions_met);

    // An elliptic tail is ruled out even at genus 2: the tail analysis only
    // needs the degree band.
    CurveGraph tailed({{"a", 1, 0}, {"b", 1, 0}}, {{"a", "b", 1}});
    REQUIRE(tailed.genus() == 2);
    GITReport ruled = git_classify(tailed, deg({2, 3}), 2, 5);
    CHECK(ruled.regime.kind == RegimeKind::NecessaryOnly);
    CHECK(ruled.semistable == Verdict::No);
}

TEST_CASE("out-of-range degrees are rejected") {
    CHECK_THROWS_AS(git_classify(two_edge_curve(), deg({4, 4}), 3, 8), Unsupported);
}

TEST_CASE("geometric quotient criterion at genus 3") {
    CHECK(is_geometric_quotient(3, 9));
    CHECK(!is_geometric_quotient(3, 10));
    CHECK(is_geometric_quotient(3, 11));
    CHECK(!is_geometric_quotient(3, 12));
    CHECK(is_geometric_quotient(3, 13));
    CHECK_THROWS_AS(is_geometric_quotient(2, 9), GenusTooSmall);
}

TEST_CASE("stabilizer dimensions") {
    CHECK(stabilizer_dim(square_curve()) == 2);
    CHECK(stabilizer_dim(two_edge_curve()) == 1);
    CHECK(stabilizer_dim(cusp_blowup_curve()) == 1);
    // Cusps and an elliptic tail together fit neither hypothesis.
    CurveGraph mixed({{"a", 1, 0}, {"b", 2, 1}}, {{"a", "b", 1}});
    CHECK_THROWS_AS(stabilizer_dim(mixed), WrongInputClass);
}

TEST_CASE("pushforward of the square blow-up") {
    SheafData sheaf = simpson_pushforward(square_curve(), deg({5, 5, 1, 1}));
    CHECK(isomorphic(sheaf.base, two_edge_curve()));
    CHECK(sheaf.non_free_edges.size() == 2);
    CHECK(sheaf.non_free_cusps.empty());
    CHECK(sheaf.degrees == std::vector<long long>{5, 5});
    CHECK(sheaf.total_degree() == 12);
}

TEST_CASE("pushforward of the blown-up cusp") {
    SheafData sheaf = simpson_pushforward(cusp_blowup_curve(), deg({1, 8}));
    CHECK(sheaf.base.size() == 1);
    CHECK(sheaf.base.vertex(0).cusps == 1);
    CHECK(sheaf.non_free_edges.empty());
    REQUIRE(sheaf.non_free_cusps.size() == 1);
    CHECK(sheaf.total_degree() == 9);
    CHECK(sheaf.degrees == std::vector<long long>{9});
}

TEST_CASE("pushforward without exceptional components is locally free") {
    SheafData sheaf = simpson_pushforward(two_edge_curve(), deg({5, 4}));
    CHECK(sheaf.non_free_edges.empty());
    CHECK(sheaf.non_free_cusps.empty());
    CHECK(sheaf.degrees == std::vector<long long>{5, 4});
}

TEST_CASE("pushforward validates its input") {
    CHECK_THROWS_AS(simpson_pushforward(tail_curve(), deg({3, 6})), WrongInputClass);
    CHECK_THROWS_AS(simpson_pushforward(square_curve(), deg({5, 5, 1, 0})),
                    NotProperlyBalanced);
}

TEST_CASE("slope semistability of pushforwards and artificial sheaves") {
    SheafData pushed = simpson_pushforward(square_curve(), deg({5, 5, 1, 1}));
    CHECK(simpson_semistable(pushed, 12));

    SheafData skew;
    skew.base = two_edge_curve();
    skew.degrees = {2, 8};
    CHECK(!simpson_semistable(skew, 10));

    SheafData point;
    point.base = cuspidal_curve();
    point.degrees = {9};
    CHECK(simpson_semistable(point, 9));
}

TEST_CASE("declared invariants must match the inputs") {
    CHECK_THROWS_AS(git_classify(square_curve(), deg({5, 5, 1, 1}), 4, 12),
                    VertexMismatch);
    CHECK_THROWS_AS(git_classify(square_curve(), deg({5, 5, 1, 1}), 3, 11),
                    VertexMismatch);
}
