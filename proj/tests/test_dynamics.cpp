#include <catch2/catch_amalgamated.hpp>

#include "aqb/dynamics.hpp"
#include "aqb/zoo.hpp"

using namespace aqb;
using dynamics::Schedule;
using dynamics::ScheduleShape;

TEST_CASE("trajectory bookkeeping invariants") {
    auto p = zoo::dj_wei(3, zoo::BooleanFunctionSpec::balanced(0));
    auto traj = dynamics::integrate(p, Schedule(ScheduleShape::linear(), 5.0), 0, 101);

    REQUIRE(traj.samples.size() == 101);
    CHECK(traj.samples.front().t == 0.0);
    CHECK(traj.samples.front().lambda == 0.0);
    CHECK(traj.samples.back().lambda == 1.0);
    CHECK(traj.normDrift < 1e-9);

    double prev_lambda = -1.0, prev_r = -1e-30;
    for (const auto& s : traj.samples) {
        CHECK(s.lambda > prev_lambda);
        CHECK(s.fidelity >= 0.0);
        CHECK(s.fidelity <= 1.0);
        CHECK(s.overlapC >= 0.0);
        CHECK(s.overlapC <= 1.0);
        CHECK(s.bures >= 0.0);
        CHECK(s.bures <= M_PI / 2.0 + 1e-12);
        CHECK(s.bigR >= prev_r);
        prev_lambda = s.lambda;
        prev_r = s.bigR;
    }
    // first sample: evolved state is phi0, so everything coincides
    CHECK(traj.samples.front().bures == Catch::Approx(0.0).margin(1e-7));
    CHECK(traj.samples.front().bigR == 0.0);
    CHECK(num::close_abs(std::abs(traj.samples.front().fidelity - traj.samples.front().overlapC),
                         0.0, 1e-12));
}

TEST_CASE("integration rejects bad step requests") {
    auto p = zoo::grover(2, {1});
    Schedule s(ScheduleShape::linear(), 1.0);
    CHECK_THROWS_AS(dynamics::integrate(p, s, 50), invalid_argument);
    CHECK_NOTHROW(dynamics::integrate(p, s, 100));
}

TEST_CASE("uncertainty integral matches its closed form") {
    // R(1) = T * lambdaBar * deltaV whenever phi0 is an h0 eigenstate
    struct Case {
        Problem p;
        ScheduleShape shape;
    };
    std::vector<Case> cases;
    cases.push_back({zoo::dj_wei(3, zoo::BooleanFunctionSpec::balanced(0)),
                     ScheduleShape::linear()});
    cases.push_back({zoo::grover(3, {2}), ScheduleShape::power(2.0)});
    cases.push_back({zoo::kclique(graphs::random_graph(5, 0.5, 1), 3, true),
                     ScheduleShape::linear()});
    cases.push_back({zoo::bernstein_vazirani(2, 0b10), ScheduleShape::power(2.0)});
    for (const auto& c : cases) {
        double T = 5.0;
        auto traj = dynamics::integrate(c.p, Schedule(c.shape, T), 0, 101);
        double want = T * traj.lambdaBar * traj.deltaV;
        CHECK(num::close_rel(traj.samples.back().bigR, want, 1e-6));
    }
}

TEST_CASE("commuting degenerate instance keeps unit fidelity") {
    auto basis = BasisDescriptor::full_register(1);
    Eigen::VectorXd d(2);
    d << 0.0, 1.0;
    auto h = Operator::diagonal(basis, d);
    Vector v(2);
    v << 1.0, 0.0;
    Problem p{"stationary", basis, h, h, StateVector(basis, v), StateVector(basis, v), {}, {}};
    p.validate();
    auto traj = dynamics::integrate(p, Schedule(ScheduleShape::linear(), 3.0), 0, 51);
    for (const auto& s : traj.samples) CHECK(s.fidelity == Catch::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("long runs become adiabatic") {
    auto p = zoo::grover(2, {3});
    auto traj = dynamics::integrate(p, Schedule(ScheduleShape::linear(), 100.0), 0, 51);
    CHECK(traj.final_sample().fidelity >= 0.99);
}

TEST_CASE("halving the step size leaves the final fidelity unchanged") {
    auto p = zoo::grover(2, {1});
    auto coarse = dynamics::integrate(p, Schedule(ScheduleShape::linear(), 5.0), 10000, 2);
    auto fine = dynamics::integrate(p, Schedule(ScheduleShape::linear(), 5.0), 20000, 2);
    CHECK(std::abs(coarse.final_sample().fidelity - fine.final_sample().fidelity) < 1e-7);
}

TEST_CASE("chain inequalities hold and the checker reports slacks") {
    auto p = zoo::dj_das(3, zoo::BooleanFunctionSpec::balanced(0));
    auto traj = dynamics::integrate(p, Schedule(ScheduleShape::power(2.0), 5.0), 0, 101);
    auto rep = dynamics::verify_chain(traj);
    CHECK(rep.sampleCount == 101);
    CHECK(rep.minSlackLeft >= -1e-8);
    CHECK(rep.minSlackRight >= -1e-8);
}

TEST_CASE("corrupting one fidelity sample trips the checker") {
    auto p = zoo::grover(3, {1});
    auto traj = dynamics::integrate(p, Schedule(ScheduleShape::linear(), 5.0), 0, 101);
    // early sample: theta is still tiny, so a 0.2 fidelity shift must violate
    // |F - C| <= sin(theta)
    auto bad = traj;
    bad.samples[1].fidelity = std::max(0.0, bad.samples[1].fidelity - 0.2);
    CHECK_THROWS_WITH(dynamics::verify_chain(bad),
                      Catch::Matchers::ContainsSubstring("sample 1"));
    CHECK_THROWS_AS(dynamics::verify_chain(bad), property_violation);
}

TEST_CASE("runtime bound check against the named target") {
    auto p = zoo::grover(2, {0});
    auto traj = dynamics::integrate(p, Schedule(ScheduleShape::linear(), 50.0), 0, 21);
    auto c = dynamics::check_runtime_bound(p, traj, 0.1);
    REQUIRE(c.applicable);
    CHECK(c.conditionMet);
    CHECK(c.holds);
    CHECK(traj.T >= c.tLower);

    // short run: condition unmet, check vacuous
    auto quick = dynamics::integrate(p, Schedule(ScheduleShape::linear(), 0.5), 0, 21);
    auto cq = dynamics::check_runtime_bound(p, quick, 0.1);
    CHECK_FALSE(cq.conditionMet);
    CHECK(cq.holds);

    // no named target: not applicable
    auto ising = zoo::ising_counterexample(3);
    auto ti = dynamics::integrate(ising, Schedule(ScheduleShape::linear(), 1.0), 0, 11);
    CHECK_FALSE(dynamics::check_runtime_bound(ising, ti, 0.1).applicable);
}

TEST_CASE("minimal adiabatic time brackets the bound") {
    auto p = zoo::grover(2, {3});
    auto mt = dynamics::min_adiabatic_time(p, ScheduleShape::linear(), 0.2);
    REQUIRE(mt.converged);
    // necessary condition with the linear schedule's average 1/2
    double t_lower = bounds::compute_bound(p, 0.2, 0.5).tLower;
    CHECK(mt.tMin >= t_lower);
    CHECK(mt.tMin >= 2.6898);
    CHECK(1.0 - mt.finalFidelity <= 0.2);

    // nearly vacuous allowance collapses the search
    auto loose = dynamics::min_adiabatic_time(p, ScheduleShape::linear(), 0.999);
    CHECK(loose.tMin < 1e-6);

    CHECK_THROWS_AS(dynamics::min_adiabatic_time(p, ScheduleShape::linear(), 0.0),
                    invalid_argument);
    CHECK_THROWS_AS(dynamics::min_adiabatic_time(p, ScheduleShape::linear(), 1.0),
                    invalid_argument);
}

TEST_CASE("comparable times across the flat family") {
    auto t4 = dynamics::min_adiabatic_time(zoo::dj_wei(4, zoo::BooleanFunctionSpec::balanced(0)),
                                           ScheduleShape::linear(), 0.1);
    auto t6 = dynamics::min_adiabatic_time(zoo::dj_wei(6, zoo::BooleanFunctionSpec::balanced(0)),
                                           ScheduleShape::linear(), 0.1);
    REQUIRE(t4.converged);
    REQUIRE(t6.converged);
    double hi = std::max(t4.tMin, t6.tMin), lo = std::min(t4.tMin, t6.tMin);
    CHECK((hi - lo) / hi < 0.2);
}

TEST_CASE("scaling experiment keeps necessity at every size") {
    auto res = dynamics::scaling_experiment([](int n) { return zoo::grover(n, {0}); },
                                            {2, 3, 4}, 0.1, ScheduleShape::linear());
    REQUIRE(res.rows.size() == 3);
    for (const auto& row : res.rows) {
        CHECK(row.converged);
        CHECK(row.tMin >= row.tLower);
    }
    CHECK(res.rows[0].tMin < res.rows[1].tMin);
    CHECK(res.rows[1].tMin < res.rows[2].tMin);
}

TEST_CASE("dimension guard on dense dynamics") {
    auto p = zoo::ising_counterexample(13); // dim 8192 exceeds the cap
    CHECK_THROWS_AS(dynamics::integrate(p, Schedule(ScheduleShape::linear(), 1.0), 0, 11),
                    invalid_argument);
}
