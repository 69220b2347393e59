#pragma once

#include <map>
#include <optional>
#include <string>

#include "aqb/operator.hpp"

namespace aqb {

// An interpolating-Hamiltonian instance: H(lambda) = (1-lambda) h0 + lambda h1
// with the initial state phi0 (a ground state of h0) and, when the instance
// knows its answer, the target state phi1 (a ground state of h1).
//
// params carries numeric metadata (n, k, marked count, p, seed, ...); info
// carries textual metadata (secret strings, serialized graphs, flags).
struct Problem {
    std::string name;
    BasisDescriptor basis;
    Operator h0;
    Operator h1;
    StateVector phi0;
    std::optional<StateVector> phi1;
    std::map<std::string, double> params;
    std::map<std::string, std::string> info;

    Operator hamiltonian(double lambda) const { return build_interpolated(h0, h1, lambda); }

    // Eigenstate residual checks: ||h phi - <h> phi|| < 1e-10 for phi0 against
    // h0 and phi1 (when present) against h1. Ground-ness (that the eigenvalue
    // is actually the minimum) is verified in the test suite per constructor.
    void validate() const {
        require_same_basis(basis, h0.basis(), "Problem h0");
        require_same_basis(basis, h1.basis(), "Problem h1");
        require_same_basis(basis, phi0.basis(), "Problem phi0");
        auto residual = [](const Operator& h, const StateVector& phi) {
            Vector v = h.apply(phi.amps());
            Complex e = phi.amps().dot(v);
            return (v - e * phi.amps()).norm();
        };
        double r0 = residual(h0, phi0);
        if (r0 > 1e-10)
            throw numeric_error("Problem '" + name + "': phi0 eigenstate residual " +
                                num::fmt17(r0) + " exceeds 1e-10");
        if (phi1) {
            require_same_basis(basis, phi1->basis(), "Problem phi1");
            double r1 = residual(h1, *phi1);
            if (r1 > 1e-10)
                throw numeric_error("Problem '" + name + "': phi1 eigenstate residual " +
                                    num::fmt17(r1) + " exceeds 1e-10");
        }
    }
};

} // namespace aqb
