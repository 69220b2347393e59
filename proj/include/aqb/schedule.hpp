#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "aqb/errors.hpp"
#include "aqb/numeric.hpp"

namespace aqb::dynamics {

// Dimensionless schedule profile f : [0,1] -> [0,1], strictly increasing with
// f(0) = 0 and f(1) = 1. A run at horizon T uses lambda(t) = f(t/T).
class ScheduleShape {
public:
    enum class Kind { Linear, Power, Table };

    static ScheduleShape linear() { return ScheduleShape(Kind::Linear, 1.0, {}); }

    static ScheduleShape power(double q) {
        if (!(q > 0.0) || !std::isfinite(q))
            throw invalid_argument("ScheduleShape::power: need q > 0");
        return ScheduleShape(Kind::Power, q, {});
    }

    // Piecewise-linear profile through (s, f) nodes. Nodes must start at
    // (0, 0), end at (1, 1) and be strictly increasing in both coordinates.
    static ScheduleShape table(std::vector<std::pair<double, double>> nodes) {
        if (nodes.size() < 2) throw invalid_argument("ScheduleShape::table: need >= 2 nodes");
        if (nodes.front() != std::pair{0.0, 0.0} || nodes.back() != std::pair{1.0, 1.0})
            throw invalid_argument("ScheduleShape::table: nodes must span (0,0) to (1,1)");
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            if (!(nodes[i].first > nodes[i - 1].first))
                throw invalid_argument("ScheduleShape::table: s-coordinates must be strictly increasing");
            if (!(nodes[i].second > nodes[i - 1].second))
                throw invalid_argument("ScheduleShape::table: profile must be strictly increasing");
        }
        return ScheduleShape(Kind::Table, 0.0, std::move(nodes));
    }

    Kind kind() const { return kind_; }
    double exponent() const { return q_; }
    const std::vector<std::pair<double, double>>& nodes() const { return nodes_; }

    double value(double s) const {
        s = std::min(1.0, std::max(0.0, s));
        switch (kind_) {
        case Kind::Linear: return s;
        case Kind::Power: return std::pow(s, q_);
        case Kind::Table: {
            auto seg = segment(s);
            auto [s0, f0] = nodes_[seg];
            auto [s1, f1] = nodes_[seg + 1];
            return f0 + (f1 - f0) * (s - s0) / (s1 - s0);
        }
        }
        return s;
    }

    // df/ds. For power profiles with q < 1 this is +inf at s = 0 (the R
    // integrand handles that limit); with q > 1 it is 0 there.
    double derivative(double s) const {
        s = std::min(1.0, std::max(0.0, s));
        switch (kind_) {
        case Kind::Linear: return 1.0;
        case Kind::Power:
            if (s == 0.0) {
                if (q_ > 1.0) return 0.0;
                if (q_ == 1.0) return 1.0;
                return std::numeric_limits<double>::infinity();
            }
            return q_ * std::pow(s, q_ - 1.0);
        case Kind::Table: {
            auto seg = segment(s);
            auto [s0, f0] = nodes_[seg];
            auto [s1, f1] = nodes_[seg + 1];
            return (f1 - f0) / (s1 - s0);
        }
        }
        return 1.0;
    }

    // Time average of the profile, integral_0^1 f(s) ds. Table profiles are
    // integrated exactly segment by segment; the smooth shapes go through
    // adaptive quadrature tightened to 1e-12.
    double average() const {
        if (kind_ == Kind::Table) {
            double acc = 0.0;
            for (std::size_t i = 1; i < nodes_.size(); ++i)
                acc += 0.5 * (nodes_[i].second + nodes_[i - 1].second) *
                       (nodes_[i].first - nodes_[i - 1].first);
            return acc;
        }
        return num::adaptive_simpson([this](double s) { return value(s); }, 0.0, 1.0, 1e-12);
    }

    std::string describe() const {
        switch (kind_) {
        case Kind::Linear: return "linear";
        case Kind::Power: return "power(" + num::fmt17(q_) + ")";
        case Kind::Table: return "table(" + std::to_string(nodes_.size()) + " nodes)";
        }
        return "?";
    }

private:
    ScheduleShape(Kind kind, double q, std::vector<std::pair<double, double>> nodes)
        : kind_(kind), q_(q), nodes_(std::move(nodes)) {}

    std::size_t segment(double s) const {
        std::size_t lo = 0, hi = nodes_.size() - 1;
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            if (nodes_[mid].first <= s) lo = mid;
            else hi = mid;
        }
        return lo;
    }

    Kind kind_;
    double q_;
    std::vector<std::pair<double, double>> nodes_;
};

// Shape plus total runtime: lambda(t) = f(t/T), gamma(t) = f'(t/T)/T.
struct Schedule {
    ScheduleShape shape;
    double T = 1.0;

    Schedule(ScheduleShape s, double t) : shape(std::move(s)), T(t) {
        if (!(T > 0.0) || !std::isfinite(T)) throw invalid_argument("Schedule: need T > 0");
    }

    double lambda(double t) const { return shape.value(t / T); }
    double gamma(double t) const { return shape.derivative(t / T) / T; }
    double lambda_bar() const { return shape.average(); }
    std::string describe() const { return shape.describe() + ",T=" + num::fmt17(T); }
};

} // namespace aqb::dynamics
