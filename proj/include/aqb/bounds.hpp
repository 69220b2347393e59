#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "aqb/graph.hpp"
#include "aqb/problem.hpp"

namespace aqb::bounds {

enum class AsymptoticClass { Valid, Degenerate, AsymptoticallyInvalid };

inline const char* to_string(AsymptoticClass c) {
    switch (c) {
    case AsymptoticClass::Valid: return "Valid";
    case AsymptoticClass::Degenerate: return "Degenerate";
    case AsymptoticClass::AsymptoticallyInvalid: return "AsymptoticallyInvalid";
    }
    return "?";
}

// Everything the runtime lower bound is made of:
//   mean1 = <h1> and mean2 = <h1^2> in phi0, deltaV = sqrt(mean2 - mean1^2),
//   tLower = arcsin(max(1 - epsilon - C1, 0)) / (lambdaBar * deltaV)
// where C1 = |<phi1|phi0>|^2. A vanishing deltaV (< 1e-14) marks the report
// Degenerate with tLower = 0 rather than dividing by zero.
struct BoundReport {
    std::string problem;
    double mean1 = 0.0;
    double mean2 = 0.0;
    double deltaV = 0.0;
    double momentsResidual = 0.0;
    std::optional<double> overlapC1;
    double epsilon = 0.0;
    double lambdaBar = 1.0;
    double tLower = 0.0;
    AsymptoticClass asymptoticClass = AsymptoticClass::Valid;
};

namespace detail {

struct Moments {
    double mean1;
    double mean2;
    double deltaV;
};

inline Moments final_hamiltonian_moments(const Problem& p) {
    Vector v = p.h1.apply(p.phi0.amps());
    Complex e = p.phi0.amps().dot(v);
    if (std::abs(e.imag()) > 1e-10)
        throw numeric_error("final_hamiltonian_moments: <h1> has imaginary part " +
                            num::fmt17(e.imag()));
    double mean1 = e.real();
    double mean2 = v.squaredNorm();
    double var = mean2 - mean1 * mean1;
    if (var < -1e-10)
        throw numeric_error("final_hamiltonian_moments: variance below -1e-10");
    return {mean1, mean2, std::sqrt(std::max(0.0, var))};
}

} // namespace detail

// Runtime lower bound from the final-Hamiltonian uncertainty in the initial
// state. overlap_override substitutes C1 when the problem carries no target
// state (or when the caller wants a different reference).
inline BoundReport compute_bound(const Problem& p, double epsilon, double lambdaBar,
                                 std::optional<double> overlap_override = std::nullopt) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw invalid_argument("compute_bound: need 0 <= epsilon <= 1");
    if (!(lambdaBar > 0.0 && lambdaBar <= 1.0))
        throw invalid_argument("compute_bound: need 0 < lambdaBar <= 1");

    auto m = detail::final_hamiltonian_moments(p);
    BoundReport r;
    r.problem = p.name;
    r.mean1 = m.mean1;
    r.mean2 = m.mean2;
    r.deltaV = m.deltaV;
    r.momentsResidual = std::abs(m.mean2 - m.mean1);
    r.epsilon = epsilon;
    r.lambdaBar = lambdaBar;

    if (overlap_override) {
        if (!(*overlap_override >= 0.0 && *overlap_override <= 1.0))
            throw invalid_argument("compute_bound: overlap override outside [0, 1]");
        r.overlapC1 = *overlap_override;
    } else if (p.phi1) {
        r.overlapC1 = overlap_sq(*p.phi1, p.phi0);
    } else {
        throw invalid_argument("compute_bound: problem '" + p.name +
                               "' has no target state; pass an overlap override");
    }

    if (r.deltaV < 1e-14) {
        r.asymptoticClass = AsymptoticClass::Degenerate;
        r.tLower = 0.0;
        return r;
    }
    double x = std::max(1.0 - epsilon - *r.overlapC1, 0.0);
    r.tLower = std::asin(std::min(x, 1.0)) / (lambdaBar * r.deltaV);
    return r;
}

// ---------------------------------------------------------------------------
// Moments condition <h1^2> = <h1>, under which deltaV = sqrt(m (1 - m)).

struct MomentsCheck {
    double mean1 = 0.0;
    double mean2 = 0.0;
    double residual = 0.0;
    bool holds = false;
};

inline MomentsCheck moments_check(const Problem& p) {
    auto m = detail::final_hamiltonian_moments(p);
    MomentsCheck c;
    c.mean1 = m.mean1;
    c.mean2 = m.mean2;
    c.residual = std::abs(m.mean2 - m.mean1);
    c.holds = c.residual < 1e-10;
    return c;
}

// ---------------------------------------------------------------------------
// Asymptotic validity scan across a problem family

struct ScanRow {
    int n = 0;
    double deltaV = 0.0;
    double invDeltaV = 0.0;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    double slope = 0.0; // log(1/deltaV) against log(n)
    AsymptoticClass asymptoticClass = AsymptoticClass::Valid;
};

// The inverse uncertainty is only a usable asymptotic lower bound if it does
// not vanish with n. Fitted log-log slope below -0.25 classifies the family
// as asymptotically invalid.
inline ScanResult asymptotic_scan(const std::function<Problem(int)>& family,
                                  const std::vector<int>& ns) {
    if (ns.size() < 3) throw invalid_argument("asymptotic_scan: need >= 3 sizes");
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (ns[i] <= ns[i - 1])
            throw invalid_argument("asymptotic_scan: sizes must be strictly increasing");

    ScanResult res;
    std::vector<double> lx, ly;
    for (int n : ns) {
        Problem p = family(n);
        auto m = detail::final_hamiltonian_moments(p);
        if (m.deltaV < 1e-14)
            throw numeric_error("asymptotic_scan: deltaV vanished at n = " + std::to_string(n));
        res.rows.push_back({n, m.deltaV, 1.0 / m.deltaV});
        lx.push_back(std::log(double(n)));
        ly.push_back(std::log(1.0 / m.deltaV));
    }
    res.slope = num::fit_slope(lx, ly);
    res.asymptoticClass =
        res.slope < -0.25 ? AsymptoticClass::AsymptoticallyInvalid : AsymptoticClass::Valid;
    return res;
}

// ---------------------------------------------------------------------------
// Random-graph clique ensemble: closed-form, combinatorial and sampled moments
// of the average missing-edge cost over weight-k labels.

struct RandomCliqueMoments {
    int n = 0;
    int k = 0;
    double p = 0.0;
    double Lk = 0.0;
    double eH = 0.0;       // E[mean cost]
    double eH2 = 0.0;      // E[mean squared cost]
    double deltaVRand = 0.0;
    double tRandInf = 0.0; // 1 / deltaVRand
};

inline RandomCliqueMoments kclique_meanfield(int n, int k, double p) {
    if (k < 2 || k > n) throw invalid_argument("kclique_meanfield: need 2 <= k <= n");
    if (!(p > 0.0 && p < 1.0))
        throw invalid_argument("kclique_meanfield: need 0 < p < 1 (edge draws are degenerate otherwise)");
    RandomCliqueMoments r;
    r.n = n;
    r.k = k;
    r.p = p;
    r.Lk = double(num::binom(k, 2));
    r.eH = (1.0 - p) * r.Lk;
    r.eH2 = (1.0 - p) * (1.0 - p) * r.Lk * r.Lk + p * (1.0 - p) * r.Lk;
    r.deltaVRand = std::sqrt(p * (1.0 - p) * r.Lk);
    r.tRandInf = 1.0 / r.deltaVRand;
    return r;
}

// Expected number of weight-k labels with exactly alpha missing edges,
// alpha = 0 .. Lk. Sums to binom(n, k).
inline std::vector<double> kclique_multiplicities(int n, int k, double p) {
    if (k < 2 || k > n) throw invalid_argument("kclique_multiplicities: need 2 <= k <= n");
    if (!(p > 0.0 && p < 1.0)) throw invalid_argument("kclique_multiplicities: need 0 < p < 1");
    int Lk = static_cast<int>(num::binom(k, 2));
    double cnk = double(num::binom(n, k));
    std::vector<double> m(Lk + 1);
    for (int a = 0; a <= Lk; ++a)
        m[a] = std::pow(p, Lk - a) * std::pow(1.0 - p, a) * double(num::binom(Lk, a)) * cnk;
    return m;
}

// Same ensemble moments obtained by summing the multiplicity distribution
// instead of using the closed form; agrees with kclique_meanfield to
// floating-point accuracy.
inline RandomCliqueMoments kclique_combinatorial(int n, int k, double p) {
    auto m = kclique_multiplicities(n, k, p);
    double cnk = double(num::binom(n, k));
    double e1 = 0.0, e2 = 0.0;
    for (std::size_t a = 0; a < m.size(); ++a) {
        e1 += m[a] * double(a);
        e2 += m[a] * double(a) * double(a);
    }
    RandomCliqueMoments r;
    r.n = n;
    r.k = k;
    r.p = p;
    r.Lk = double(m.size() - 1);
    r.eH = e1 / cnk;
    r.eH2 = e2 / cnk;
    double var = std::max(0.0, r.eH2 - r.eH * r.eH);
    r.deltaVRand = std::sqrt(var);
    r.tRandInf = var > 0.0 ? 1.0 / r.deltaVRand : 0.0;
    return r;
}

struct MonteCarloMoments {
    int n = 0;
    int k = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    int trials = 0;
    double eH = 0.0;
    double eH2 = 0.0;
    double stderrH = 0.0;
    double stderrH2 = 0.0;
};

// Sampled ensemble moments. Trial t draws random_graph(n, p, seed + t), so
// the stream is independent of scheduling; per-trial values are stored and
// reduced in trial order, making the result identical for any job count.
inline MonteCarloMoments kclique_montecarlo(int n, int k, double p, std::uint64_t seed,
                                            int trials, int jobs = 1) {
    if (k < 2 || k > n) throw invalid_argument("kclique_montecarlo: need 2 <= k <= n");
    if (!(p >= 0.0 && p <= 1.0)) throw invalid_argument("kclique_montecarlo: need 0 <= p <= 1");
    if (trials < 1) throw invalid_argument("kclique_montecarlo: need trials >= 1");
    if (jobs < 1) jobs = 1;

    graphs::SubspaceIndex idx(n, k);
    if (idx.dim() > 10'000'000)
        throw invalid_argument("kclique_montecarlo: binom(n, k) exceeds 1e7 guard");

    std::vector<double> h1(trials), h2(trials);
    auto run_range = [&](int lo, int hi) {
        for (int t = lo; t < hi; ++t) {
            graphs::Graph g = graphs::random_graph(n, p, seed + std::uint64_t(t));
            std::uint64_t s1 = 0, s2 = 0;
            for (std::uint64_t r = 0; r < idx.dim(); ++r) {
                std::uint64_t c = graphs::missing_edge_count(g, idx.unrank(r));
                s1 += c;
                s2 += c * c;
            }
            h1[t] = double(s1) / double(idx.dim());
            h2[t] = double(s2) / double(idx.dim());
        }
    };
    if (jobs == 1 || trials < 2 * jobs) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        int chunk = (trials + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            int lo = j * chunk, hi = std::min(trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    auto mean_stderr = [&](const std::vector<double>& v) {
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= double(v.size());
        if (v.size() < 2) return std::pair{mean, 0.0};
        double ss = 0.0;
        for (double x : v) ss += (x - mean) * (x - mean);
        double sd = std::sqrt(ss / double(v.size() - 1));
        return std::pair{mean, sd / std::sqrt(double(v.size()))};
    };
    auto [m1, se1] = mean_stderr(h1);
    auto [m2, se2] = mean_stderr(h2);
    return {n, k, p, seed, trials, m1, m2, se1, se2};
}

// Exact per-instance report for a concrete graph, computed from integer sums
// over the label set (works beyond the dense-operator cap). C1 = M / binom(n,k)
// is the squared overlap of the uniform clique state with the Dicke state.
inline BoundReport kclique_instance_bound(const graphs::Graph& g, int k, bool deformed,
                                          double epsilon, double lambdaBar) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw invalid_argument("kclique_instance_bound: need 0 <= epsilon <= 1");
    if (!(lambdaBar > 0.0 && lambdaBar <= 1.0))
        throw invalid_argument("kclique_instance_bound: need 0 < lambdaBar <= 1");
    graphs::SubspaceIndex idx(g.n(), k);
    if (idx.dim() > 10'000'000)
        throw invalid_argument("kclique_instance_bound: binom(n, k) exceeds 1e7 guard");
    std::uint64_t s1 = 0, s2 = 0, cliques = 0;
    for (std::uint64_t r = 0; r < idx.dim(); ++r) {
        std::uint64_t c = graphs::missing_edge_count(g, idx.unrank(r));
        if (c == 0) ++cliques;
        if (deformed && c > 1) c = 1;
        s1 += c;
        s2 += c * c;
    }
    BoundReport r;
    r.problem = deformed ? "kclique_deformed" : "kclique";
    r.mean1 = double(s1) / double(idx.dim());
    r.mean2 = double(s2) / double(idx.dim());
    r.momentsResidual = std::abs(r.mean2 - r.mean1);
    r.deltaV = std::sqrt(std::max(0.0, r.mean2 - r.mean1 * r.mean1));
    r.overlapC1 = double(cliques) / double(idx.dim());
    r.epsilon = epsilon;
    r.lambdaBar = lambdaBar;
    if (r.deltaV < 1e-14) {
        r.asymptoticClass = AsymptoticClass::Degenerate;
        r.tLower = 0.0;
    } else {
        double x = std::max(1.0 - epsilon - *r.overlapC1, 0.0);
        r.tLower = std::asin(std::min(x, 1.0)) / (lambdaBar * r.deltaV);
    }
    return r;
}

} // namespace aqb::bounds
