#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "aqb/bounds.hpp"
#include "aqb/problem.hpp"
#include "aqb/schedule.hpp"
#include "aqb/spectrum.hpp"

namespace aqb::dynamics {

struct TrajectorySample {
    double t = 0.0;
    double lambda = 0.0;
    Vector psi;          // evolved state at t (normalized)
    double fidelity = 0.0; // |<ground(H_lambda)|psi>|^2, continuity-tracked
    double overlapC = 0.0; // |<ground(H_lambda)|phi0>|^2
    double bures = 0.0;    // arccos |<psi|phi0>|
    double bigR = 0.0;     // accumulated speed-limit angle
};

struct Trajectory {
    std::string problem;
    std::string schedule;
    double T = 0.0;
    double lambdaBar = 0.0;
    double deltaV = 0.0;
    int steps = 0;
    double normDrift = 0.0;
    std::vector<TrajectorySample> samples;

    const TrajectorySample& final_sample() const { return samples.back(); }
};

// Step heuristic: 2000 steps per unit of T times the Hamiltonian norm scale,
// never fewer than 100.
inline int default_steps(const Problem& p, double T) {
    double scale = std::max({p.h0.norm_bound(), p.h1.norm_bound(), 1e-12});
    double s = std::ceil(2000.0 * T * scale);
    s = std::max(100.0, s);
    if (s > 5e7)
        throw invalid_argument("default_steps: " + num::fmt17(s) +
                               " steps needed; horizon too long for this Hamiltonian scale");
    return static_cast<int>(s);
}

// Fixed-step RK4 propagation of i dpsi/dt = H(lambda(t)) psi with midpoint
// Hamiltonian evaluations and per-step renormalization (cumulative drift
// recorded; above 1e-6 the run aborts and asks for more steps).
//
// Along the way the speed-limit angle
//   R(lambda) = integral_0^lambda dE0(l) / Gamma(l) dl,
// dE0(l) = uncertainty of H_l in phi0, is accumulated by trapezoid on the
// lambda grid of integration steps. At schedule endpoints where Gamma = 0 the
// integrand is taken at its exact limit 0 (phi0 is an h0 eigenstate, so dE0
// vanishes there too); an infinite Gamma (power profiles with q < 1 at s = 0)
// likewise contributes 0.
//
// `samples` evenly spaced states are recorded (first and last always). Each
// sample carries fidelity against the instantaneous ground state, computed
// with continuity tracking: the previous sample's ground state seeds the
// degenerate-subspace selection, starting from phi0 itself at lambda = 0.
inline Trajectory integrate(const Problem& p, const Schedule& sched, int steps = 0,
                            int samples = 201) {
    if (p.basis.dim > 4096)
        throw invalid_argument("integrate: dimension exceeds dense sampling cap 4096");
    if (steps == 0) steps = default_steps(p, sched.T);
    if (steps < 100) throw invalid_argument("integrate: need steps >= 100");
    if (steps > 50'000'000) throw invalid_argument("integrate: steps exceed 5e7 guard");
    samples = std::clamp(samples, 2, steps + 1);

    const double T = sched.T;
    const double dt = T / steps;
    const Eigen::Index dim = static_cast<Eigen::Index>(p.basis.dim);

    Trajectory traj;
    traj.problem = p.name;
    traj.schedule = sched.describe();
    traj.T = T;
    traj.lambdaBar = sched.lambda_bar();
    traj.deltaV = uncertainty(p.h1, p.phi0);
    traj.steps = steps;

    // lambda-independent pieces of H_lambda phi0, for the R integrand
    const Vector v0 = p.h0.apply(p.phi0.amps());
    const Vector v1 = p.h1.apply(p.phi0.amps());
    const double scale = std::max({p.h0.norm_bound(), p.h1.norm_bound(), 1.0});
    Vector wbuf(dim);
    auto delta_e0 = [&](double lambda) {
        wbuf = (1.0 - lambda) * v0 + lambda * v1;
        double e = p.phi0.amps().dot(wbuf).real();
        return std::sqrt(std::max(0.0, wbuf.squaredNorm() - e * e));
    };
    auto integrand = [&](double t, double lambda) {
        double gamma = sched.gamma(t);
        double de = delta_e0(lambda);
        if (std::isinf(gamma)) return 0.0;
        if (gamma <= 0.0) {
            if (de < 1e-10 * scale) return 0.0;
            throw numeric_error("integrate: schedule rate vanished at t = " + num::fmt17(t) +
                                " with nonzero uncertainty; profile is not usable here");
        }
        return de / gamma;
    };

    // sample step indices, evenly spread, endpoints included
    std::vector<int> sample_steps(samples);
    for (int j = 0; j < samples; ++j)
        sample_steps[j] = static_cast<int>(std::llround(double(j) * steps / (samples - 1)));
    sample_steps.front() = 0;
    sample_steps.back() = steps;

    Vector psi = p.phi0.amps();
    Vector k1(dim), k2(dim), k3(dim), k4(dim), ybuf(dim), hbuf(dim);
    auto deriv = [&](double t, const Vector& y, Vector& out) {
        double lam = sched.lambda(t);
        p.h0.apply_to(y, out);
        p.h1.apply_to(y, hbuf);
        out = Complex(0.0, -1.0) * ((1.0 - lam) * out + lam * hbuf);
    };

    double bigR = 0.0;
    double lambda_prev = sched.lambda(0.0);
    double g_prev = integrand(0.0, lambda_prev);
    double drift = 0.0;

    std::optional<StateVector> tracked = p.phi0;
    std::size_t next_sample = 0;
    auto capture = [&](int step_idx) {
        double t = step_idx * dt;
        double lam = step_idx == steps ? 1.0 : sched.lambda(t);
        Eigenpair gs = ground_state(p.hamiltonian(lam), &*tracked);
        TrajectorySample s;
        s.t = t;
        s.lambda = lam;
        s.psi = psi;
        double f = std::norm(gs.state.amps().dot(psi));
        s.fidelity = std::min(1.0, f);
        s.overlapC = overlap_sq(gs.state, p.phi0);
        // Orthogonal-component form: acos(overlap) would inflate one ulp of
        // rounding into ~1e-8 of angle at lambda = 0 where theta = 0 exactly.
        Complex zb = p.phi0.amps().dot(psi);
        s.bures = std::atan2((psi - zb * p.phi0.amps()).norm(), std::abs(zb));
        s.bigR = bigR;
        traj.samples.push_back(std::move(s));
        tracked = gs.state;
    };

    capture(0);
    next_sample = 1;

    for (int i = 0; i < steps; ++i) {
        double t = i * dt;
        double tm = t + 0.5 * dt;
        double tn = (i + 1) * dt;

        deriv(t, psi, k1);
        ybuf = psi + (0.5 * dt) * k1;
        deriv(tm, ybuf, k2);
        ybuf = psi + (0.5 * dt) * k2;
        deriv(tm, ybuf, k3);
        ybuf = psi + dt * k3;
        deriv(tn, ybuf, k4);
        psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        double nrm = psi.norm();
        drift += std::abs(nrm - 1.0);
        if (drift > 1e-6)
            throw numeric_error("integrate: cumulative norm drift " + num::fmt17(drift) +
                                " exceeds 1e-6 after step " + std::to_string(i + 1) +
                                "; increase the step count");
        psi /= nrm;

        double lambda_next = (i + 1 == steps) ? 1.0 : sched.lambda(tn);
        double g_next = integrand(tn, lambda_next);
        bigR += 0.5 * (lambda_next - lambda_prev) * (g_prev + g_next);
        lambda_prev = lambda_next;
        g_prev = g_next;

        while (next_sample < sample_steps.size() &&
               sample_steps[next_sample] == i + 1) {
            capture(i + 1);
            ++next_sample;
        }
    }

    traj.normDrift = drift;
    return traj;
}

// ---------------------------------------------------------------------------
// Fidelity-overlap chain: |F - C| <= sin(theta) <= sin(min(R, pi/2))

struct ChainReport {
    int sampleCount = 0;
    double minSlackLeft = 0.0;   // min over samples of sin(theta) - |F - C|
    double lambdaAtLeft = 0.0;
    double minSlackRight = 0.0;  // min over samples of sin(Rclamped) - sin(theta)
    double lambdaAtRight = 0.0;
};

inline std::pair<double, double> chain_slacks(const TrajectorySample& s) {
    double left = std::sin(s.bures) - std::abs(s.fidelity - s.overlapC);
    double right = std::sin(std::min(s.bigR, M_PI / 2.0)) - std::sin(s.bures);
    return {left, right};
}

// Checks the chain at every sample; tolerance covers integrator and
// quadrature error. Any violation raises property_violation naming the
// offending sample.
inline ChainReport verify_chain(const Trajectory& traj, double tol = 1e-8) {
    if (traj.samples.empty()) throw invalid_argument("verify_chain: empty trajectory");
    ChainReport rep;
    rep.sampleCount = static_cast<int>(traj.samples.size());
    rep.minSlackLeft = rep.minSlackRight = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        const auto& s = traj.samples[i];
        auto [left, right] = chain_slacks(s);
        if (left < rep.minSlackLeft) {
            rep.minSlackLeft = left;
            rep.lambdaAtLeft = s.lambda;
        }
        if (right < rep.minSlackRight) {
            rep.minSlackRight = right;
            rep.lambdaAtRight = s.lambda;
        }
        if (left < -tol)
            throw property_violation(
                "chain violation |F-C| > sin(theta) at sample " + std::to_string(i) + " (t = " +
                num::fmt17(s.t) + ", lambda = " + num::fmt17(s.lambda) + "): slack " +
                num::fmt17(left));
        if (right < -tol)
            throw property_violation(
                "chain violation sin(theta) > sin(R~) at sample " + std::to_string(i) +
                " (t = " + num::fmt17(s.t) + ", lambda = " + num::fmt17(s.lambda) + "): slack " +
                num::fmt17(right));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Runtime necessary condition as an executable check

struct RuntimeBoundCheck {
    bool applicable = false; // problem knows its target state
    double epsilon = 0.0;
    double finalFidelity = 0.0; // against the named target when present
    bool conditionMet = false;  // 1 - F <= epsilon
    double tLower = 0.0;
    bool holds = true; // vacuous when the condition is not met
};

// Measures the final fidelity against the problem's named target state (the
// tracked ground state can differ from it when the final ground space is
// degenerate) and, when the adiabatic condition 1 - F <= epsilon is met,
// requires T >= tLower - 1e-9 with the schedule's own lambdaBar.
inline RuntimeBoundCheck check_runtime_bound(const Problem& p, const Trajectory& traj,
                                             double epsilon) {
    RuntimeBoundCheck c;
    c.epsilon = epsilon;
    if (!p.phi1) return c;
    c.applicable = true;
    c.finalFidelity =
        std::min(1.0, std::norm(p.phi1->amps().dot(traj.final_sample().psi)));
    c.conditionMet = (1.0 - c.finalFidelity) <= epsilon;
    c.tLower = bounds::compute_bound(p, epsilon, traj.lambdaBar).tLower;
    c.holds = !c.conditionMet || traj.T >= c.tLower - 1e-9;
    return c;
}

// ---------------------------------------------------------------------------
// Minimal adiabatic time by exponential bracketing plus bisection

struct MinTimeResult {
    double tMin = 0.0;
    bool converged = false;
    double finalFidelity = 0.0;
    double epsilon = 0.0;
};

// Smallest T (within relative tolerance) whose run satisfies 1 - F <= epsilon,
// F measured against the named target state when present. The first success
// is bracketed by doubling from tInit, then bisected; monotonicity is assumed
// only inside the bracket, so the result is the first bracketed crossing, not
// a proof of global minimality. If no success occurs below tCap, the lower
// bracket edge is returned with converged = false.
inline MinTimeResult min_adiabatic_time(const Problem& p, const ScheduleShape& shape,
                                        double epsilon, double relTol = 0.02,
                                        double tCap = 1e5, double tInit = 1.0) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw invalid_argument("min_adiabatic_time: need 0 < epsilon < 1");
    if (!(relTol > 0.0 && relTol < 1.0))
        throw invalid_argument("min_adiabatic_time: need 0 < relTol < 1");

    auto attempt = [&](double T) {
        Trajectory traj = integrate(p, Schedule(shape, T), 0, 2);
        double f = p.phi1 ? std::min(1.0, std::norm(p.phi1->amps().dot(traj.final_sample().psi)))
                          : traj.final_sample().fidelity;
        return std::pair{(1.0 - f) <= epsilon, f};
    };

    double lo = 0.0, hi = tInit;
    auto [ok, fid] = attempt(hi);
    while (!ok) {
        lo = hi;
        hi *= 2.0;
        if (hi > tCap) {
            MinTimeResult r;
            r.tMin = lo;
            r.converged = false;
            r.finalFidelity = fid;
            r.epsilon = epsilon;
            return r;
        }
        std::tie(ok, fid) = attempt(hi);
    }
    while ((hi - lo) > relTol * hi && (hi - lo) > 1e-9) {
        double mid = 0.5 * (lo + hi);
        auto [mok, mfid] = attempt(mid);
        if (mok) {
            hi = mid;
            fid = mfid;
        } else {
            lo = mid;
        }
    }
    MinTimeResult r;
    r.tMin = hi;
    r.converged = true;
    r.finalFidelity = fid;
    r.epsilon = epsilon;
    return r;
}

// ---------------------------------------------------------------------------
// Runtime scaling across a family

struct ScalingRow {
    int n = 0;
    std::uint64_t dim = 0;
    double tMin = 0.0;
    double tLower = 0.0;
    bool converged = false;
};

struct ScalingResult {
    std::vector<ScalingRow> rows;
    double epsilon = 0.0;
    std::string schedule;
};

inline ScalingResult scaling_experiment(const std::function<Problem(int)>& family,
                                        const std::vector<int>& ns, double epsilon,
                                        const ScheduleShape& shape) {
    if (ns.empty()) throw invalid_argument("scaling_experiment: empty size list");
    ScalingResult res;
    res.epsilon = epsilon;
    res.schedule = shape.describe();
    double lbar = shape.average();
    for (int n : ns) {
        Problem p = family(n);
        auto mt = min_adiabatic_time(p, shape, epsilon);
        auto bound = bounds::compute_bound(p, epsilon, lbar);
        res.rows.push_back({n, p.basis.dim, mt.tMin, bound.tLower, mt.converged});
    }
    return res;
}

} // namespace aqb::dynamics
