#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <memory>
#include <utility>

#include "aqb/state.hpp"

namespace aqb {

// Hermitian operator in one of four representations. Dense stores the full
// matrix; Diagonal stores real diagonal values indexed like the basis;
// ProjectorComplement is I - |t><t| for a unit target |t|; ConvexPair is the
// lazy combination (1-lambda) A + lambda B. Materialization to a dense matrix
// is available for all representations and is exact.
class Operator {
public:
    enum class Repr { Dense, Diagonal, ProjectorComplement, ConvexPair };

    static Operator dense(BasisDescriptor basis, Matrix m) {
        if (static_cast<std::uint64_t>(m.rows()) != basis.dim ||
            static_cast<std::uint64_t>(m.cols()) != basis.dim)
            throw dimension_error("Operator::dense: matrix shape != basis dimension");
        double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
        if (herm > 1e-12)
            throw numeric_error("Operator::dense: matrix is not Hermitian (max deviation " +
                                num::fmt17(herm) + ")");
        Operator op(basis, Repr::Dense);
        // Symmetrize so later arithmetic sees an exactly Hermitian matrix.
        op.dense_ = std::make_shared<const Matrix>(0.5 * (m + Matrix(m.adjoint())));
        return op;
    }

    static Operator diagonal(BasisDescriptor basis, Eigen::VectorXd values) {
        if (static_cast<std::uint64_t>(values.size()) != basis.dim)
            throw dimension_error("Operator::diagonal: value count != basis dimension");
        Operator op(basis, Repr::Diagonal);
        op.diag_ = std::make_shared<const Eigen::VectorXd>(std::move(values));
        return op;
    }

    static Operator projector_complement(StateVector target) {
        Operator op(target.basis(), Repr::ProjectorComplement);
        op.target_ = std::make_shared<const StateVector>(std::move(target));
        return op;
    }

    static Operator convex_pair(Operator a, Operator b, double lambda) {
        require_same_basis(a.basis(), b.basis(), "convex_pair");
        if (!(lambda >= 0.0 && lambda <= 1.0))
            throw invalid_argument("convex_pair: lambda must lie in [0, 1], got " +
                                   num::fmt17(lambda));
        Operator op(a.basis(), Repr::ConvexPair);
        op.pair_a_ = std::make_shared<const Operator>(std::move(a));
        op.pair_b_ = std::make_shared<const Operator>(std::move(b));
        op.lambda_ = lambda;
        return op;
    }

    const BasisDescriptor& basis() const { return basis_; }
    Repr repr() const { return repr_; }

    const Matrix& dense_matrix() const { return *dense_; }
    const Eigen::VectorXd& diagonal_values() const { return *diag_; }
    const StateVector& target() const { return *target_; }
    const Operator& pair_a() const { return *pair_a_; }
    const Operator& pair_b() const { return *pair_b_; }
    double lambda() const { return lambda_; }

    void apply_to(const Vector& in, Vector& out) const {
        switch (repr_) {
        case Repr::Dense:
            out.noalias() = (*dense_) * in;
            return;
        case Repr::Diagonal:
            out = diag_->array().cast<Complex>() * in.array();
            return;
        case Repr::ProjectorComplement: {
            Complex c = target_->amps().dot(in);
            out = in - c * target_->amps();
            return;
        }
        case Repr::ConvexPair: {
            Vector tmp;
            pair_a_->apply_to(in, out);
            pair_b_->apply_to(in, tmp);
            out = (1.0 - lambda_) * out + lambda_ * tmp;
            return;
        }
        }
    }

    Vector apply(const Vector& in) const {
        Vector out;
        apply_to(in, out);
        return out;
    }

    Matrix to_dense() const {
        switch (repr_) {
        case Repr::Dense: return *dense_;
        case Repr::Diagonal: return diag_->cast<Complex>().asDiagonal();
        case Repr::ProjectorComplement: {
            const Vector& t = target_->amps();
            Matrix m = Matrix::Identity(t.size(), t.size());
            m.noalias() -= t * t.adjoint();
            return m;
        }
        case Repr::ConvexPair:
            return (1.0 - lambda_) * pair_a_->to_dense() + lambda_ * pair_b_->to_dense();
        }
        throw error("unreachable");
    }

    // Cheap upper bound on the spectral norm, used for integrator step control.
    double norm_bound() const {
        switch (repr_) {
        case Repr::Dense: return dense_->cwiseAbs().rowwise().sum().maxCoeff();
        case Repr::Diagonal: return diag_->size() ? diag_->cwiseAbs().maxCoeff() : 0.0;
        case Repr::ProjectorComplement: return 1.0;
        case Repr::ConvexPair:
            return (1.0 - lambda_) * pair_a_->norm_bound() + lambda_ * pair_b_->norm_bound();
        }
        throw error("unreachable");
    }

private:
    Operator(BasisDescriptor basis, Repr repr) : basis_(basis), repr_(repr) {}

    BasisDescriptor basis_;
    Repr repr_;
    std::shared_ptr<const Matrix> dense_;
    std::shared_ptr<const Eigen::VectorXd> diag_;
    std::shared_ptr<const StateVector> target_;
    std::shared_ptr<const Operator> pair_a_, pair_b_;
    double lambda_ = 0.0;
};

// (1-lambda) h0 + lambda h1 as a lazy pair.
inline Operator build_interpolated(const Operator& h0, const Operator& h1, double lambda) {
    return Operator::convex_pair(h0, h1, lambda);
}

// <psi|op|psi>. The imaginary part must vanish (Hermitian operator); anything
// above 1e-10 raises a numeric integrity error.
inline double expectation(const Operator& op, const StateVector& psi) {
    require_same_basis(op.basis(), psi.basis(), "expectation");
    Vector v = op.apply(psi.amps());
    Complex e = psi.amps().dot(v);
    if (std::abs(e.imag()) > 1e-10)
        throw numeric_error("expectation: imaginary part " + num::fmt17(e.imag()) +
                            " exceeds 1e-10");
    return e.real();
}

// sqrt(<op^2> - <op>^2), clamping tiny negative variances to zero. A negative
// variance with magnitude above 1e-10 indicates corrupted input and raises.
inline double uncertainty(const Operator& op, const StateVector& psi) {
    require_same_basis(op.basis(), psi.basis(), "uncertainty");
    Vector v = op.apply(psi.amps());
    Complex e = psi.amps().dot(v);
    if (std::abs(e.imag()) > 1e-10)
        throw numeric_error("uncertainty: imaginary part of <op> exceeds 1e-10");
    double m2 = v.squaredNorm(); // <psi|op^2|psi> for Hermitian op
    double var = m2 - e.real() * e.real();
    if (var < 0.0) {
        if (var < -1e-10)
            throw numeric_error("uncertainty: variance " + num::fmt17(var) + " below -1e-10");
        var = 0.0;
    }
    return std::sqrt(var);
}

// op * op in the cheapest exact representation available.
inline Operator squared(const Operator& op) {
    switch (op.repr()) {
    case Operator::Repr::Diagonal:
        return Operator::diagonal(op.basis(), op.diagonal_values().cwiseProduct(op.diagonal_values()));
    case Operator::Repr::ProjectorComplement:
        return op; // projectors are idempotent
    default: {
        Matrix m = op.to_dense();
        return Operator::dense(op.basis(), m * m);
    }
    }
}

// Streaming form of expectation/uncertainty against (1-lambda) h0 + lambda h1
// without constructing a ConvexPair. Returns {mean, uncertainty}.
inline std::pair<double, double> interpolated_moments(const Operator& h0, const Operator& h1,
                                                      double lambda, const StateVector& psi,
                                                      Vector& scratch_a, Vector& scratch_b) {
    h0.apply_to(psi.amps(), scratch_a);
    h1.apply_to(psi.amps(), scratch_b);
    scratch_a = (1.0 - lambda) * scratch_a + lambda * scratch_b;
    Complex e = psi.amps().dot(scratch_a);
    double m2 = scratch_a.squaredNorm();
    double var = std::max(0.0, m2 - e.real() * e.real());
    return {e.real(), std::sqrt(var)};
}

} // namespace aqb
