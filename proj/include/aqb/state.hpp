#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "aqb/basis.hpp"
#include "aqb/errors.hpp"

namespace aqb {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Normalized pure state on a BasisDescriptor. Construction rejects vectors
// whose norm deviates from 1 by more than 1e-12; use make_normalized to
// rescale arbitrary data.
class StateVector {
public:
    StateVector(BasisDescriptor basis, Vector amps) : basis_(basis), amps_(std::move(amps)) {
        if (static_cast<std::uint64_t>(amps_.size()) != basis_.dim)
            throw dimension_error("StateVector: amplitude count != basis dimension");
        double nrm2 = amps_.squaredNorm();
        if (std::abs(nrm2 - 1.0) > 1e-12)
            throw numeric_error("StateVector: norm^2 deviates from 1 by " +
                                num::fmt17(std::abs(nrm2 - 1.0)));
    }

    static StateVector make_normalized(BasisDescriptor basis, Vector amps) {
        double nrm = amps.norm();
        if (nrm < 1e-300) throw numeric_error("make_normalized: zero vector");
        amps /= nrm;
        return StateVector(basis, std::move(amps));
    }

    const BasisDescriptor& basis() const { return basis_; }
    const Vector& amps() const { return amps_; }
    std::uint64_t dim() const { return basis_.dim; }

private:
    BasisDescriptor basis_;
    Vector amps_;
};

inline Complex inner(const StateVector& a, const StateVector& b) {
    require_same_basis(a.basis(), b.basis(), "inner");
    return a.amps().dot(b.amps()); // Eigen dot conjugates the left argument
}

// |<a|b>|^2, clamped into [0, 1] against roundoff.
inline double overlap_sq(const StateVector& a, const StateVector& b) {
    double v = std::norm(inner(a, b));
    return std::min(1.0, std::max(0.0, v));
}

// Bures angle arccos |<a|b>| in [0, pi/2]. Computed from the orthogonal
// component rather than acos(overlap): near theta = 0 the overlap is 1 minus
// an ulp and acos would turn that rounding into ~1e-8 of spurious angle.
inline double bures_angle(const StateVector& a, const StateVector& b) {
    Complex z = inner(b, a);
    double s = (a.amps() - z * b.amps()).norm(); // sin(theta), stable near 0
    double c = std::abs(z);                      // cos(theta), stable near pi/2
    return std::atan2(s, c);
}

} // namespace aqb
