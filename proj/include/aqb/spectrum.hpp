#pragma once

#include <Eigen/Dense>
#include <optional>

#include "aqb/operator.hpp"

namespace aqb {

struct Eigenpair {
    double energy;
    StateVector state;
};

namespace detail {

// Deterministic global phase: the largest-magnitude amplitude (lowest index on
// ties) is made real and positive.
inline void fix_phase(Vector& v) {
    Eigen::Index best = 0;
    double best_mag = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double m = std::abs(v[i]);
        if (m > best_mag + 1e-15) {
            best_mag = m;
            best = i;
        }
    }
    if (best_mag <= 0.0) return;
    v *= std::conj(v[best]) / best_mag;
}

} // namespace detail

// Lowest eigenpair of a Hermitian operator via dense diagonalization.
//
// Degenerate ground spaces (eigenvalue spread < 1e-12): the returned vector is
// the normalized projection of `reference` onto the ground space when a
// reference is supplied, otherwise the projection of the lowest-index basis
// vector with non-negligible component. The global phase is fixed so the
// largest amplitude is real positive, and the residual ||op v - E v|| is
// checked against 1e-10 using the structured apply path.
inline Eigenpair ground_state(const Operator& op, const StateVector* reference = nullptr) {
    if (reference) require_same_basis(op.basis(), reference->basis(), "ground_state");
    Matrix m = op.to_dense();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw numeric_error("ground_state: eigensolver failed to converge");
    const auto& evals = solver.eigenvalues();
    double e0 = evals[0];

    Eigen::Index deg = 1;
    while (deg < evals.size() && evals[deg] - e0 < 1e-12) ++deg;

    Vector v;
    if (deg == 1) {
        v = solver.eigenvectors().col(0);
    } else {
        auto block = solver.eigenvectors().leftCols(deg);
        if (reference) {
            Vector coeff = block.adjoint() * reference->amps();
            if (coeff.norm() > 1e-8) {
                v = block * coeff;
                v /= v.norm();
            }
        }
        if (v.size() == 0) {
            for (Eigen::Index j = 0; j < m.rows(); ++j) {
                Vector coeff = block.adjoint() * Vector::Unit(m.rows(), j);
                if (coeff.norm() > 1e-8) {
                    v = block * coeff;
                    v /= v.norm();
                    break;
                }
            }
        }
        if (v.size() == 0) throw numeric_error("ground_state: empty degenerate projection");
    }

    detail::fix_phase(v);
    double residual = (op.apply(v) - e0 * v).norm();
    if (residual > 1e-10)
        throw numeric_error("ground_state: residual " + num::fmt17(residual) + " exceeds 1e-10");
    return {e0, StateVector(op.basis(), std::move(v))};
}

// Two lowest eigenvalues (for gap profiles); eigenvectors are not formed.
inline std::pair<double, double> two_lowest_eigenvalues(const Operator& op) {
    if (op.basis().dim < 2)
        throw dimension_error("two_lowest_eigenvalues: need dimension >= 2");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.to_dense(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw numeric_error("two_lowest_eigenvalues: eigensolver failed to converge");
    return {solver.eigenvalues()[0], solver.eigenvalues()[1]};
}

} // namespace aqb
