#include <catch2/catch_amalgamated.hpp>

#include "aqb/gap.hpp"
#include "aqb/zoo.hpp"

using namespace aqb;

TEST_CASE("grover gap profile matches the two-level closed form") {
    auto p = zoo::grover(2, {1}, true);
    auto prof = gap::sweep(p, 101);
    REQUIRE(prof.lambdas.size() == 101);
    CHECK(prof.lambdas.front() == 0.0);
    CHECK(prof.lambdas.back() == 1.0);
    CHECK(prof.gaps.front() == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(prof.gaps.back() == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(num::close_abs(prof.gMin, 0.5, 1e-9));
    CHECK(num::close_abs(prof.lambdaAtMin, 0.5, 1e-5));

    double c = std::sqrt(0.25);
    for (std::size_t i = 0; i < prof.lambdas.size(); ++i)
        CHECK(num::close_abs(prof.gaps[i], gap::projector_gap_closed_form(c, prof.lambdas[i]),
                             1e-9));
}

TEST_CASE("closed form endpoints and minimum") {
    CHECK(gap::projector_gap_closed_form(0.3, 0.0) == 1.0);
    CHECK(gap::projector_gap_closed_form(0.3, 1.0) == 1.0);
    CHECK(gap::projector_gap_closed_form(0.3, 0.5) == Catch::Approx(0.3));
}

TEST_CASE("dense sweep agrees with the closed form for the flat family") {
    auto p = zoo::dj_wei(3, zoo::BooleanFunctionSpec::balanced(0));
    auto prof = gap::sweep(p, 51);
    CHECK(num::close_abs(prof.gMin, 1.0 / std::sqrt(2.0), 1e-9));
}

TEST_CASE("sweep validates its grid and parallelizes deterministically") {
    auto p = zoo::grover(2, {2});
    CHECK_THROWS_AS(gap::sweep(p, 10), invalid_argument);
    auto serial = gap::sweep(p, 41, 1);
    auto parallel = gap::sweep(p, 41, 4);
    REQUIRE(serial.gaps.size() == parallel.gaps.size());
    for (std::size_t i = 0; i < serial.gaps.size(); ++i)
        CHECK(serial.gaps[i] == parallel.gaps[i]);
    CHECK(serial.gMin == parallel.gMin);
}

TEST_CASE("refined minimum never exceeds the coarse samples") {
    auto p = zoo::grover(3, {1, 5});
    auto prof = gap::sweep(p, 31);
    for (double g : prof.gaps) CHECK(prof.gMin <= g + 1e-12);
}

TEST_CASE("projector case check passes the projector pairs") {
    auto p = zoo::dj_das(3, zoo::BooleanFunctionSpec::constant(1));
    auto prof = gap::sweep(p, 101);
    auto c = gap::projector_case_check(p, prof);
    REQUIRE(c.applicable);
    CHECK(num::close_abs(c.overlap, 1.0 / std::sqrt(8.0), 1e-12));
    CHECK(c.minSlack >= -1e-10);
    CHECK(c.gMinError <= 1e-6);

    for (int n : {2, 3, 4}) {
        auto g = zoo::grover(n, {0}, true);
        auto gp = gap::sweep(g, 101);
        auto gc = gap::projector_case_check(g, gp);
        REQUIRE(gc.applicable);
        CHECK(num::close_abs(gp.gMin, std::sqrt(1.0 / double(1 << n)), 1e-6));
    }
}

TEST_CASE("projector case check skips mixed representations") {
    auto p = zoo::kclique(graphs::random_graph(5, 0.7, 2), 3, true);
    auto prof = gap::sweep(p, 21);
    CHECK_FALSE(gap::projector_case_check(p, prof).applicable);
    // diagonal-form grover is gated out too
    auto g = zoo::grover(2, {1}, false);
    CHECK_FALSE(gap::projector_case_check(g, gap::sweep(g, 21)).applicable);
}

TEST_CASE("bound comparison carries the uncertainty identity") {
    auto p = zoo::grover(4, {0}, true);
    auto prof = gap::sweep(p, 101);
    auto rep = bounds::compute_bound(p, 0.1, 0.5);
    auto cmp = gap::compare_bounds(p, prof, rep);
    CHECK_FALSE(cmp.degenerate);
    CHECK(cmp.projectorPair);
    CHECK(num::close_abs(cmp.gMin, 0.25, 1e-6));
    CHECK(num::close_abs(rep.deltaV, cmp.gMin * std::sqrt(1.0 - cmp.gMin * cmp.gMin), 1e-10));
    CHECK(cmp.deltaVIdentityResidual <= 1e-10);
    CHECK(num::close_abs(cmp.invGMin, 4.0, 1e-5));
    CHECK(num::close_abs(cmp.invGMinSq, 16.0, 4e-4));
    CHECK(cmp.ratioTLowerGMin <= M_PI / 2.0 / (rep.lambdaBar * rep.deltaV) * cmp.gMin + 1e-9);
}

TEST_CASE("gap-independent family keeps a constant comparison row") {
    double prev = -1.0;
    for (int n : {2, 3, 4}) {
        auto p = zoo::dj_wei(n, zoo::BooleanFunctionSpec::balanced(0));
        auto prof = gap::sweep(p, 51);
        if (prev >= 0.0) CHECK(num::close_abs(prof.gMin, prev, 1e-8));
        prev = prof.gMin;
    }
}

TEST_CASE("degenerate instance flags the comparison") {
    // complete graph: every label is a clique, the cost vanishes identically
    auto p = zoo::kclique(graphs::random_graph(4, 1.0, 1), 3, true);
    auto prof = gap::sweep(p, 21);
    auto rep = bounds::compute_bound(p, 0.1, 0.5);
    auto cmp = gap::compare_bounds(p, prof, rep);
    CHECK(cmp.degenerate);
    CHECK(rep.asymptoticClass == bounds::AsymptoticClass::Degenerate);
}
