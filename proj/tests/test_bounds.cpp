#include <catch2/catch_amalgamated.hpp>

#include "aqb/bounds.hpp"
#include "aqb/zoo.hpp"

using namespace aqb;
using bounds::AsymptoticClass;

TEST_CASE("runtime bound hits the worked closed forms") {
    // arcsin(1 - 0.1 - 0.5) / (1 * 0.5), high-precision reference
    auto rep = bounds::compute_bound(zoo::dj_wei(3, zoo::BooleanFunctionSpec::balanced(0)),
                                     0.1, 1.0);
    CHECK(num::close_abs(rep.tLower, 0.823033692134976038769475795235, 1e-14));
    CHECK(num::close_abs(rep.tLower, std::asin(0.4) / 0.5, 1e-15));
    CHECK(num::close_abs(rep.deltaV, 0.5, 1e-14));
    REQUIRE(rep.overlapC1);
    CHECK(num::close_abs(*rep.overlapC1, 0.5, 1e-14));
    CHECK(rep.asymptoticClass == AsymptoticClass::Valid);

    // arcsin(1 - 0.2 - 0.25) / (0.5 * sqrt(3)/4)
    auto g = bounds::compute_bound(zoo::grover(2, {3}), 0.2, 0.5);
    CHECK(num::close_abs(g.tLower, 2.68982519599944221329893283699, 1e-13));
    CHECK(num::close_abs(g.deltaV, 0.433012701892219323381861585376, 1e-14));
}

TEST_CASE("bound clamps when the overlap already reaches the allowance") {
    auto p = zoo::dj_wei(3, zoo::BooleanFunctionSpec::balanced(0)); // C(1) = 0.5
    // Exactly on the boundary the computed overlap carries rounding noise.
    CHECK(bounds::compute_bound(p, 0.5, 1.0).tLower <= 1e-14);
    CHECK(bounds::compute_bound(p, 0.9, 1.0).tLower == 0.0);
}

TEST_CASE("bound validates its arguments") {
    auto p = zoo::grover(2, {1});
    CHECK_THROWS_AS(bounds::compute_bound(p, -0.1, 1.0), invalid_argument);
    CHECK_THROWS_AS(bounds::compute_bound(p, 1.1, 1.0), invalid_argument);
    CHECK_THROWS_AS(bounds::compute_bound(p, 0.1, 0.0), invalid_argument);
    CHECK_THROWS_AS(bounds::compute_bound(p, 0.1, 1.5), invalid_argument);
    // no named target and no override
    CHECK_THROWS_AS(bounds::compute_bound(zoo::ising_counterexample(3), 0.1, 1.0),
                    invalid_argument);
    // override fills the gap
    auto rep = bounds::compute_bound(zoo::ising_counterexample(3), 0.1, 1.0, 0.25);
    CHECK(rep.tLower > 0.0);
    REQUIRE(rep.overlapC1);
    CHECK(*rep.overlapC1 == 0.25);
}

TEST_CASE("degenerate final hamiltonian reports zero bound") {
    auto p = zoo::kclique(graphs::random_graph(4, 1.0, 1), 3, false);
    auto rep = bounds::compute_bound(p, 0.1, 1.0);
    CHECK(rep.asymptoticClass == AsymptoticClass::Degenerate);
    CHECK(rep.tLower == 0.0);
    CHECK(rep.deltaV < 1e-14);
}

TEST_CASE("bound is representation independent") {
    for (int m : {1, 2}) {
        std::vector<std::uint64_t> marked;
        for (int i = 0; i < m; ++i) marked.push_back(i);
        auto diag = bounds::compute_bound(zoo::grover(4, marked, false), 0.1, 0.5);
        auto proj = bounds::compute_bound(zoo::grover(4, marked, true), 0.1, 0.5);
        CHECK(num::close_abs(diag.tLower, proj.tLower, 1e-12));
        CHECK(num::close_abs(diag.deltaV, proj.deltaV, 1e-12));
        CHECK(num::close_abs(diag.mean1, proj.mean1, 1e-12));
        CHECK(num::close_abs(diag.mean2, proj.mean2, 1e-12));
    }
}

TEST_CASE("moments condition classifies the zoo correctly") {
    CHECK(bounds::moments_check(zoo::dj_das(3, zoo::BooleanFunctionSpec::constant(0))).holds);
    CHECK(bounds::moments_check(zoo::dj_wei(3, zoo::BooleanFunctionSpec::balanced(1))).holds);
    CHECK(bounds::moments_check(zoo::bernstein_vazirani(3, 5)).holds);
    CHECK(bounds::moments_check(zoo::grover(3, {2, 4})).holds);

    // raw cost fails once some label misses >= 2 edges
    graphs::Graph sparse = graphs::load_edge_list("n 5\n0 1\n");
    auto raw = bounds::moments_check(zoo::kclique(sparse, 3, false));
    CHECK_FALSE(raw.holds);
    CHECK(raw.residual > 1e-6);
    CHECK(bounds::moments_check(zoo::kclique(sparse, 3, true)).holds);
}

TEST_CASE("zero moments residual pins the uncertainty to the mean") {
    for (const auto& p :
         {zoo::dj_wei(4, zoo::BooleanFunctionSpec::constant(1)), zoo::grover(4, {0, 7}),
          zoo::kclique(graphs::random_graph(6, 0.5, 8), 3, true)}) {
        auto c = bounds::moments_check(p);
        REQUIRE(c.holds);
        double dv = uncertainty(p.h1, p.phi0);
        CHECK(num::close_abs(dv, std::sqrt(std::max(0.0, c.mean1 * (1.0 - c.mean1))), 1e-10));
    }
}

TEST_CASE("asymptotic scan flags the ising family and passes the rest") {
    auto ising = bounds::asymptotic_scan([](int n) { return zoo::ising_counterexample(n); },
                                         {4, 9, 16});
    REQUIRE(ising.rows.size() == 3);
    CHECK(num::close_abs(ising.rows[0].invDeltaV, 0.5, 1e-10));
    CHECK(num::close_abs(ising.rows[1].invDeltaV, 1.0 / 3.0, 1e-10));
    CHECK(num::close_abs(ising.rows[2].invDeltaV, 0.25, 1e-10));
    CHECK(ising.asymptoticClass == AsymptoticClass::AsymptoticallyInvalid);
    CHECK(ising.slope < -0.25);

    auto wei = bounds::asymptotic_scan(
        [](int n) { return zoo::dj_wei(n, zoo::BooleanFunctionSpec::balanced(0)); }, {3, 4, 5});
    for (const auto& row : wei.rows) CHECK(num::close_abs(row.invDeltaV, 2.0, 1e-12));
    CHECK(wei.asymptoticClass == AsymptoticClass::Valid);

    auto gro = bounds::asymptotic_scan([](int n) { return zoo::grover(n, {0}); }, {2, 4, 6});
    CHECK(gro.asymptoticClass == AsymptoticClass::Valid);
    CHECK(gro.rows[0].invDeltaV < gro.rows[1].invDeltaV);
    CHECK(gro.rows[1].invDeltaV < gro.rows[2].invDeltaV);

    CHECK_THROWS_AS(bounds::asymptotic_scan(
                        [](int n) { return zoo::ising_counterexample(n); }, {4, 9}),
                    invalid_argument);
    CHECK_THROWS_AS(bounds::asymptotic_scan(
                        [](int n) { return zoo::ising_counterexample(n); }, {4, 9, 9}),
                    invalid_argument);
}

TEST_CASE("mean-field clique moments match the closed forms") {
    auto r = bounds::kclique_meanfield(10, 5, 0.5);
    CHECK(r.Lk == 10.0);
    CHECK(num::close_abs(r.eH, 5.0, 1e-12));
    CHECK(num::close_abs(r.eH2, 27.5, 1e-12));
    CHECK(num::close_abs(r.deltaVRand, std::sqrt(2.5), 1e-12));
    CHECK(num::close_abs(r.tRandInf, 1.0 / std::sqrt(2.5), 1e-12));

    auto r5 = bounds::kclique_meanfield(8, 5, 0.5);
    auto r6 = bounds::kclique_meanfield(8, 6, 0.5);
    CHECK(num::close_abs(r5.tRandInf / r6.tRandInf, std::sqrt(1.5), 1e-12));

    auto r2 = bounds::kclique_meanfield(4, 2, 0.5);
    CHECK(num::close_abs(r2.deltaVRand, 0.5, 1e-12));

    CHECK_THROWS_AS(bounds::kclique_meanfield(6, 3, 0.0), invalid_argument);
    CHECK_THROWS_AS(bounds::kclique_meanfield(6, 3, 1.0), invalid_argument);
    CHECK_THROWS_AS(bounds::kclique_meanfield(6, 1, 0.5), invalid_argument);
    CHECK_THROWS_AS(bounds::kclique_meanfield(3, 4, 0.5), invalid_argument);
}

TEST_CASE("combinatorial multiplicities sum to the label count") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 3}, {8, 4}, {10, 5}}) {
        for (double p : {0.25, 0.5, 0.75}) {
            auto m = bounds::kclique_multiplicities(n, k, p);
            double sum = 0.0;
            for (double v : m) sum += v;
            CHECK(num::close_rel(sum, double(num::binom(n, k)), 1e-9));
        }
    }
    auto m = bounds::kclique_multiplicities(6, 3, 0.5);
    CHECK(num::close_abs(m[0], 2.5, 1e-12)); // C(6,3)/2^3
}

TEST_CASE("combinatorial estimator reproduces the mean-field one") {
    for (int n = 4; n <= 10; ++n) {
        for (int k = 2; k <= n; ++k) {
            for (double p : {0.25, 0.5, 0.75}) {
                auto mf = bounds::kclique_meanfield(n, k, p);
                auto cb = bounds::kclique_combinatorial(n, k, p);
                CHECK(num::close_abs(mf.eH, cb.eH, 1e-12));
                CHECK(num::close_abs(mf.eH2, cb.eH2, 1e-12));
                CHECK(num::close_abs(mf.deltaVRand, cb.deltaVRand, 1e-12));
            }
        }
    }
}

TEST_CASE("monte carlo sampling is deterministic and unbiased") {
    auto a = bounds::kclique_montecarlo(6, 3, 0.5, 1, 2000, 1);
    auto b = bounds::kclique_montecarlo(6, 3, 0.5, 1, 2000, 1);
    CHECK(a.eH == b.eH);
    CHECK(a.eH2 == b.eH2);

    // parallel execution must not change the reduction
    auto par = bounds::kclique_montecarlo(6, 3, 0.5, 1, 2000, 4);
    CHECK(a.eH == par.eH);
    CHECK(a.eH2 == par.eH2);

    auto mf = bounds::kclique_meanfield(6, 3, 0.5);
    CHECK(std::abs(a.eH - mf.eH) <= 3.0 * a.stderrH);
    CHECK(std::abs(a.eH2 - mf.eH2) <= 3.0 * a.stderrH2);

    // p -> 0 forces the empty graph: every label costs L_k
    auto empty = bounds::kclique_montecarlo(6, 3, 0.0, 1, 1, 1);
    CHECK(empty.eH == 3.0);
    CHECK(empty.eH2 == 9.0);
    CHECK(empty.stderrH == 0.0);

    CHECK_THROWS_AS(bounds::kclique_montecarlo(6, 3, 0.5, 1, 0, 1), invalid_argument);
}

TEST_CASE("instance bound agrees with the assembled problem") {
    for (std::uint64_t seed : {1u, 4u, 9u}) {
        auto g = graphs::random_graph(6, 0.5, seed);
        for (bool deformed : {false, true}) {
            auto direct = bounds::kclique_instance_bound(g, 3, deformed, 0.1, 0.5);
            auto p = zoo::kclique(g, 3, deformed);
            CHECK(num::close_abs(direct.mean1, expectation(p.h1, p.phi0), 1e-12));
            CHECK(num::close_abs(direct.deltaV, uncertainty(p.h1, p.phi0), 1e-12));
            REQUIRE(direct.overlapC1);
            if (p.phi1) {
                auto via_problem = bounds::compute_bound(p, 0.1, 0.5);
                REQUIRE(via_problem.overlapC1);
                CHECK(num::close_abs(*direct.overlapC1, *via_problem.overlapC1, 1e-12));
                CHECK(num::close_abs(direct.mean2, via_problem.mean2, 1e-12));
                CHECK(num::close_abs(direct.tLower, via_problem.tLower, 1e-12));
            } else {
                CHECK(*direct.overlapC1 == 0.0);
            }
        }
    }
}

TEST_CASE("report invariants hold across the zoo") {
    for (const auto& p : {zoo::dj_das(3, zoo::BooleanFunctionSpec::balanced(0)),
                          zoo::dj_wei(4, zoo::BooleanFunctionSpec::constant(0)),
                          zoo::bernstein_vazirani(3, 6), zoo::grover(3, {1}),
                          zoo::kclique(graphs::random_graph(5, 0.6, 2), 3, true)}) {
        auto rep = p.phi1 ? bounds::compute_bound(p, 0.1, 0.7)
                          : bounds::compute_bound(p, 0.1, 0.7, 0.0); // no target state
        CHECK(num::close_abs(rep.deltaV * rep.deltaV, rep.mean2 - rep.mean1 * rep.mean1, 1e-10));
        CHECK(rep.tLower >= 0.0);
        CHECK(num::close_abs(rep.momentsResidual, std::abs(rep.mean2 - rep.mean1), 1e-14));
    }
}
