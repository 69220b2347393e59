#include <catch2/catch_amalgamated.hpp>

#include "aqb/schedule.hpp"

using namespace aqb;
using dynamics::Schedule;
using dynamics::ScheduleShape;

TEST_CASE("linear shape") {
    auto f = ScheduleShape::linear();
    CHECK(f.value(0.0) == 0.0);
    CHECK(f.value(1.0) == 1.0);
    CHECK(f.value(0.3) == Catch::Approx(0.3));
    CHECK(f.derivative(0.7) == Catch::Approx(1.0));
    CHECK(f.average() == Catch::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("power shape") {
    auto q2 = ScheduleShape::power(2.0);
    CHECK(q2.value(0.5) == Catch::Approx(0.25));
    CHECK(q2.derivative(0.5) == Catch::Approx(1.0));
    CHECK(q2.average() == Catch::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(q2.derivative(0.0) == 0.0);

    auto qhalf = ScheduleShape::power(0.5);
    CHECK(qhalf.average() == Catch::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(std::isinf(qhalf.derivative(0.0)));

    CHECK_THROWS_AS(ScheduleShape::power(0.0), invalid_argument);
    CHECK_THROWS_AS(ScheduleShape::power(-1.0), invalid_argument);
}

TEST_CASE("table shape interpolates and averages exactly") {
    auto t = ScheduleShape::table({{0.0, 0.0}, {0.5, 0.1}, {1.0, 1.0}});
    CHECK(t.value(0.25) == Catch::Approx(0.05));
    CHECK(t.value(0.75) == Catch::Approx(0.55));
    CHECK(t.derivative(0.2) == Catch::Approx(0.2));
    CHECK(t.derivative(0.9) == Catch::Approx(1.8));
    // trapezoid over the two segments: 0.5*(0+0.1)/2 + 0.5*(0.1+1)/2
    CHECK(t.average() == Catch::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("table shape rejects malformed node lists") {
    using nodes = std::vector<std::pair<double, double>>;
    CHECK_THROWS_AS(ScheduleShape::table(nodes{{0.0, 0.0}}), invalid_argument);
    CHECK_THROWS_AS(ScheduleShape::table(nodes{{0.0, 0.0}, {1.0, 0.5}}), invalid_argument);
    CHECK_THROWS_AS(ScheduleShape::table(nodes{{0.1, 0.0}, {1.0, 1.0}}), invalid_argument);
    CHECK_THROWS_AS(ScheduleShape::table(nodes{{0.0, 0.0}, {0.5, 0.6}, {0.7, 0.4}, {1.0, 1.0}}),
                    invalid_argument);
    CHECK_THROWS_AS(ScheduleShape::table(nodes{{0.0, 0.0}, {0.0, 0.5}, {1.0, 1.0}}),
                    invalid_argument);
}

TEST_CASE("values clamp outside the unit interval") {
    auto f = ScheduleShape::power(2.0);
    CHECK(f.value(-0.5) == 0.0);
    CHECK(f.value(1.5) == 1.0);
}

TEST_CASE("schedule maps physical time through the shape") {
    Schedule s(ScheduleShape::power(2.0), 4.0);
    CHECK(s.lambda(0.0) == 0.0);
    CHECK(s.lambda(4.0) == 1.0);
    CHECK(s.lambda(2.0) == Catch::Approx(0.25));
    // gamma = d lambda / dt = f'(t/T) / T
    CHECK(s.gamma(2.0) == Catch::Approx(0.25));
    CHECK(s.lambda_bar() == Catch::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK_THROWS_AS(Schedule(ScheduleShape::linear(), 0.0), invalid_argument);
    CHECK_THROWS_AS(Schedule(ScheduleShape::linear(), -1.0), invalid_argument);
}

TEST_CASE("shape descriptions are stable") {
    CHECK(ScheduleShape::linear().describe() == "linear");
    CHECK(ScheduleShape::power(2.0).describe().find("pow") != std::string::npos);
    CHECK(ScheduleShape::table({{0.0, 0.0}, {1.0, 1.0}}).describe().find("table") !=
          std::string::npos);
}
