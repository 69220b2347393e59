#pragma once

#include <cmath>
#include <thread>
#include <vector>

#include "aqb/bounds.hpp"
#include "aqb/problem.hpp"
#include "aqb/spectrum.hpp"

namespace aqb::gap {

struct GapProfile {
    std::vector<double> lambdas;
    std::vector<double> gaps;
    double gMin = 0.0;
    double lambdaAtMin = 0.0;
};

inline double gap_at(const Problem& p, double lambda) {
    auto [e0, e1] = two_lowest_eigenvalues(p.hamiltonian(lambda));
    return std::max(0.0, e1 - e0);
}

// Closed-form spectral gap of a pair of rank-1 projector complements whose
// targets overlap with |<phi1|phi0>| = c: the interpolation acts in the
// two-dimensional span (identity outside), giving
//   g(lambda) = sqrt(1 - 4 lambda (1 - lambda) (1 - c^2)),
// minimized at lambda = 1/2 with value c.
inline double projector_gap_closed_form(double c, double lambda) {
    return std::sqrt(std::max(0.0, 1.0 - 4.0 * lambda * (1.0 - lambda) * (1.0 - c * c)));
}

// Even sweep of the two lowest eigenvalues plus golden-section refinement of
// the minimum to 1e-6 in lambda inside the bracketing grid cell. The refined
// minimum never exceeds any coarse sample.
inline GapProfile sweep(const Problem& p, int grid_size = 101, int jobs = 1) {
    if (grid_size < 11) throw invalid_argument("sweep: need grid_size >= 11");
    if (p.basis.dim > 4096) throw invalid_argument("sweep: dimension exceeds dense cap 4096");
    if (jobs < 1) jobs = 1;

    GapProfile prof;
    prof.lambdas.resize(grid_size);
    prof.gaps.resize(grid_size);
    auto run_range = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            prof.lambdas[i] = double(i) / (grid_size - 1);
            prof.gaps[i] = gap_at(p, prof.lambdas[i]);
        }
    };
    if (jobs == 1 || grid_size < 2 * jobs) {
        run_range(0, grid_size);
    } else {
        std::vector<std::thread> pool;
        int chunk = (grid_size + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            int lo = j * chunk, hi = std::min(grid_size, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    int arg = 0;
    for (int i = 1; i < grid_size; ++i)
        if (prof.gaps[i] < prof.gaps[arg]) arg = i;

    double a = prof.lambdas[std::max(0, arg - 1)];
    double b = prof.lambdas[std::min(grid_size - 1, arg + 1)];
    double best_x = prof.lambdas[arg];
    double best_f = prof.gaps[arg];

    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = gap_at(p, x1);
    double f2 = gap_at(p, x2);
    auto note = [&](double x, double f) {
        if (f < best_f) {
            best_f = f;
            best_x = x;
        }
    };
    note(x1, f1);
    note(x2, f2);
    while (b - a > 1e-6) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = gap_at(p, x1);
            note(x1, f1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = gap_at(p, x2);
            note(x2, f2);
        }
    }
    prof.gMin = best_f;
    prof.lambdaAtMin = best_x;
    return prof;
}

// ---------------------------------------------------------------------------
// Projector-pair gap theorem check

struct ProjectorGapCheck {
    bool applicable = false;
    double overlap = 0.0;  // |<phi1|phi0>|
    double minSlack = 0.0; // min over grid of gap - overlap
    double gMinError = 0.0;
};

// For problems whose h0 and h1 are both rank-1 projector complements the gap
// never drops below the target overlap, and gMin equals it. Applicability is
// a precondition, not an error: non-projector instances report
// applicable = false untouched.
inline ProjectorGapCheck projector_case_check(const Problem& p, const GapProfile& prof) {
    ProjectorGapCheck c;
    if (p.h0.repr() != Operator::Repr::ProjectorComplement ||
        p.h1.repr() != Operator::Repr::ProjectorComplement)
        return c;
    c.applicable = true;
    c.overlap = std::abs(inner(p.h1.target(), p.h0.target()));
    c.minSlack = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < prof.gaps.size(); ++i) {
        double slack = prof.gaps[i] - c.overlap;
        c.minSlack = std::min(c.minSlack, slack);
        if (slack < -1e-10)
            throw property_violation("projector gap bound violated at lambda = " +
                                     num::fmt17(prof.lambdas[i]) + ": gap " +
                                     num::fmt17(prof.gaps[i]) + " < overlap " +
                                     num::fmt17(c.overlap));
    }
    c.gMinError = std::abs(prof.gMin - c.overlap);
    if (c.gMinError > 1e-6)
        throw property_violation("refined gMin " + num::fmt17(prof.gMin) +
                                 " deviates from target overlap " + num::fmt17(c.overlap) +
                                 " by " + num::fmt17(c.gMinError));
    return c;
}

// ---------------------------------------------------------------------------
// Gap-based versus uncertainty-based runtime estimates

struct BoundComparison {
    double gMin = 0.0;
    double invGMin = 0.0;      // one-over-gap estimate scale
    double invGMinSq = 0.0;    // standard adiabatic estimate scale
    double tLower = 0.0;       // uncertainty-based necessary bound
    double ratioTLowerGMin = 0.0;
    bool degenerate = false;   // gMin ~ 0, ratios omitted
    bool projectorPair = false;
    double deltaVIdentityResidual = 0.0; // |deltaV - gMin sqrt(1 - gMin^2)|
};

// Places the uncertainty bound next to the gap scales. Sanity assertions:
// tLower can never exceed (pi/2) / (lambdaBar deltaV), and for projector
// pairs deltaV = gMin sqrt(1 - gMin^2) (the first moment is 1 - gMin^2).
inline BoundComparison compare_bounds(const Problem& p, const GapProfile& prof,
                                      const bounds::BoundReport& rep) {
    BoundComparison c;
    c.gMin = prof.gMin;
    c.tLower = rep.tLower;
    if (prof.gMin < 1e-10) {
        c.degenerate = true;
    } else {
        c.invGMin = 1.0 / prof.gMin;
        c.invGMinSq = 1.0 / (prof.gMin * prof.gMin);
        c.ratioTLowerGMin = rep.tLower * prof.gMin;
    }
    if (rep.deltaV > 1e-14) {
        double cap = (M_PI / 2.0) / (rep.lambdaBar * rep.deltaV);
        if (rep.tLower > cap + 1e-12)
            throw property_violation("compare_bounds: tLower " + num::fmt17(rep.tLower) +
                                     " exceeds arcsin ceiling " + num::fmt17(cap));
    }
    c.projectorPair = p.h0.repr() == Operator::Repr::ProjectorComplement &&
                      p.h1.repr() == Operator::Repr::ProjectorComplement;
    if (c.projectorPair && !c.degenerate) {
        double expected = prof.gMin * std::sqrt(std::max(0.0, 1.0 - prof.gMin * prof.gMin));
        c.deltaVIdentityResidual = std::abs(rep.deltaV - expected);
        if (c.deltaVIdentityResidual > 1e-10)
            throw property_violation("compare_bounds: deltaV " + num::fmt17(rep.deltaV) +
                                     " does not match gMin sqrt(1 - gMin^2) = " +
                                     num::fmt17(expected));
    }
    return c;
}

} // namespace aqb::gap
