#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "aqb/graph.hpp"
#include "aqb/problem.hpp"
#include "aqb/spectrum.hpp"

namespace aqb::zoo {

// ---------------------------------------------------------------------------
// Boolean oracle functions f : {0,1}^n -> {0,1}

struct BooleanFunctionSpec {
    enum class Kind { Constant, Balanced, InnerProduct };

    Kind kind = Kind::Constant;
    int constant_bit = 0;        // Constant
    int variant = 0;             // Balanced family id
    std::uint64_t secret = 0;    // InnerProduct mask

    static BooleanFunctionSpec constant(int bit) {
        if (bit != 0 && bit != 1) throw invalid_argument("constant: bit must be 0 or 1");
        BooleanFunctionSpec f;
        f.kind = Kind::Constant;
        f.constant_bit = bit;
        return f;
    }

    // Deterministic exactly-balanced family: variant v selects
    // f(z) = z_{v mod n} XOR ((v / n) & 1), giving 2n distinct functions.
    static BooleanFunctionSpec balanced(int variant) {
        if (variant < 0) throw invalid_argument("balanced: variant must be >= 0");
        BooleanFunctionSpec f;
        f.kind = Kind::Balanced;
        f.variant = variant;
        return f;
    }

    // f(z) = sum_i z_i s_i mod 2.
    static BooleanFunctionSpec inner_product(std::uint64_t secret) {
        BooleanFunctionSpec f;
        f.kind = Kind::InnerProduct;
        f.secret = secret;
        return f;
    }

    int evaluate(std::uint64_t z, int n) const {
        switch (kind) {
        case Kind::Constant: return constant_bit;
        case Kind::Balanced: {
            int bit_index = variant % n;
            int flip = (variant / n) & 1;
            return static_cast<int>((z >> bit_index) & 1) ^ flip;
        }
        case Kind::InnerProduct:
            return std::popcount(z & secret) & 1;
        }
        return 0;
    }

    std::string describe() const {
        switch (kind) {
        case Kind::Constant: return "constant(" + std::to_string(constant_bit) + ")";
        case Kind::Balanced: return "balanced(" + std::to_string(variant) + ")";
        case Kind::InnerProduct: return "inner_product(" + std::to_string(secret) + ")";
        }
        return "?";
    }
};

// |N^-1 sum_z (-1)^{f(z)}|, which is 1 for constant f and 0 for balanced f.
// Computed by direct summation; anything else rejects f.
inline int promise_indicator(const BooleanFunctionSpec& f, int n) {
    if (n < 1 || n > 20) throw invalid_argument("promise_indicator: need 1 <= n <= 20");
    std::int64_t sum = 0;
    std::uint64_t N = std::uint64_t{1} << n;
    for (std::uint64_t z = 0; z < N; ++z) sum += f.evaluate(z, n) ? -1 : 1;
    if (sum == 0) return 0;
    if (sum == static_cast<std::int64_t>(N) || sum == -static_cast<std::int64_t>(N)) return 1;
    throw invalid_argument("promise_indicator: f is neither constant nor balanced");
}

// ---------------------------------------------------------------------------
// Reference states

// 2^(-n/2) sum_z |z> on a full register. Ground state of I - |phi><phi| and
// the standard starting point of every full-register instance here.
inline StateVector uniform_superposition(int n) {
    if (n < 1 || n > 20) throw invalid_argument("uniform_superposition: need 1 <= n <= 20");
    auto basis = BasisDescriptor::full_register(n);
    Vector amps = Vector::Constant(basis.dim, Complex(1.0 / std::sqrt(double(basis.dim)), 0.0));
    return StateVector(basis, std::move(amps));
}

// Equal superposition of all weight-k labels, amplitude binom(n,k)^(-1/2),
// represented in the HammingSubspace basis.
inline StateVector dicke_state(int n, int k) {
    auto basis = BasisDescriptor::hamming_subspace(n, k);
    Vector amps = Vector::Constant(basis.dim, Complex(1.0 / std::sqrt(double(basis.dim)), 0.0));
    return StateVector(basis, std::move(amps));
}

// ---------------------------------------------------------------------------
// Deutsch-Jozsa, target-projector flavour

// Target state: |0> when f is constant; uniform over the N-1 nonzero labels
// when f is balanced. Both Hamiltonians are rank-1 projector complements.
inline Problem dj_das(int n, const BooleanFunctionSpec& f) {
    int mu = promise_indicator(f, n);
    auto basis = BasisDescriptor::full_register(n);
    StateVector phi0 = uniform_superposition(n);
    Vector amps = Vector::Zero(basis.dim);
    if (mu == 1) {
        amps[0] = 1.0;
    } else {
        double a = 1.0 / std::sqrt(double(basis.dim - 1));
        for (std::uint64_t i = 1; i < basis.dim; ++i) amps[i] = a;
    }
    StateVector phi1(basis, std::move(amps));
    Problem p{"dj_das",
              basis,
              Operator::projector_complement(phi0),
              Operator::projector_complement(phi1),
              phi0,
              phi1,
              {{"n", double(n)}, {"mu", double(mu)}},
              {{"f", f.describe()}}};
    p.validate();
    return p;
}

// Deutsch-Jozsa, parity-register flavour: target is uniform over even labels
// (constant f) or odd labels (balanced f); |<phi1|phi0>|^2 = 1/2 for every n.
inline Problem dj_wei(int n, const BooleanFunctionSpec& f) {
    int mu = promise_indicator(f, n);
    auto basis = BasisDescriptor::full_register(n);
    StateVector phi0 = uniform_superposition(n);
    Vector amps = Vector::Zero(basis.dim);
    double a = 1.0 / std::sqrt(double(basis.dim / 2));
    for (std::uint64_t i = 0; i < basis.dim; i += 2) amps[i + (mu == 1 ? 0 : 1)] = a;
    StateVector phi1(basis, std::move(amps));
    Problem p{"dj_wei",
              basis,
              Operator::projector_complement(phi0),
              Operator::projector_complement(phi1),
              phi0,
              phi1,
              {{"n", double(n)}, {"mu", double(mu)}},
              {{"f", f.describe()}}};
    p.validate();
    return p;
}

// ---------------------------------------------------------------------------
// Bernstein-Vazirani on an (n+1)-qubit split register

// h1 = I - P where P projects onto span{ |z>|f(z)> }: diagonal with entry 0
// at index 2z + f(z) and 1 at 2z + (1-f(z)). h0 = I_A (x) |-><-| so that the
// uniform (n+1)-qubit superposition is a zero-energy ground state. The target
// phi1 is the uniform superposition over the 2^n labels (z, f(z)).
inline Problem bernstein_vazirani(int n, std::uint64_t secret) {
    if (n < 1 || n > 10) throw invalid_argument("bernstein_vazirani: need 1 <= n <= 10");
    if (secret >> n) throw invalid_argument("bernstein_vazirani: secret has bits >= n");
    auto f = BooleanFunctionSpec::inner_product(secret);
    auto basis = BasisDescriptor::tensor_ab(n, 1);
    std::uint64_t NA = std::uint64_t{1} << n;

    Eigen::VectorXd h1_values(basis.dim);
    Vector phi1_amps = Vector::Zero(basis.dim);
    double a1 = 1.0 / std::sqrt(double(NA));
    for (std::uint64_t z = 0; z < NA; ++z) {
        int fz = f.evaluate(z, n);
        h1_values[2 * z + fz] = 0.0;
        h1_values[2 * z + (1 - fz)] = 1.0;
        phi1_amps[2 * z + fz] = a1;
    }

    Matrix h0_m = Matrix::Zero(basis.dim, basis.dim);
    for (std::uint64_t z = 0; z < NA; ++z) {
        h0_m(2 * z, 2 * z) = 0.5;
        h0_m(2 * z + 1, 2 * z + 1) = 0.5;
        h0_m(2 * z, 2 * z + 1) = -0.5;
        h0_m(2 * z + 1, 2 * z) = -0.5;
    }

    Vector phi0_amps = Vector::Constant(basis.dim, Complex(1.0 / std::sqrt(double(basis.dim)), 0.0));
    Problem p{"bernstein_vazirani",
              basis,
              Operator::dense(basis, std::move(h0_m)),
              Operator::diagonal(basis, std::move(h1_values)),
              StateVector(basis, std::move(phi0_amps)),
              StateVector(basis, std::move(phi1_amps)),
              {{"n", double(n)}, {"secret", double(secret)}},
              {{"f", f.describe()}}};
    p.validate();
    return p;
}

// ---------------------------------------------------------------------------
// Unstructured search

// h1 assigns cost 0 to each marked label and 1 otherwise. The projector form
// replaces it with I - |phi1><phi1| (phi1 = uniform over marked labels); the
// two coincide as operators only for a single marked label, but every bound
// quantity (means, uncertainty, target overlap) agrees for any marked count.
inline Problem grover(int n, const std::vector<std::uint64_t>& marked,
                      bool projector_form = false) {
    auto basis = BasisDescriptor::full_register(n);
    std::set<std::uint64_t> ms(marked.begin(), marked.end());
    if (ms.empty()) throw invalid_argument("grover: marked set is empty");
    if (ms.size() >= basis.dim) throw invalid_argument("grover: marked set covers every label");
    for (auto z : ms)
        if (z >= basis.dim) throw invalid_argument("grover: marked label out of range");

    StateVector phi0 = uniform_superposition(n);
    Vector amps = Vector::Zero(basis.dim);
    double a = 1.0 / std::sqrt(double(ms.size()));
    for (auto z : ms) amps[z] = a;
    StateVector phi1(basis, std::move(amps));

    Operator h1 = [&] {
        if (projector_form) return Operator::projector_complement(phi1);
        Eigen::VectorXd values = Eigen::VectorXd::Ones(basis.dim);
        for (auto z : ms) values[z] = 0.0;
        return Operator::diagonal(basis, std::move(values));
    }();

    Problem p{"grover",
              basis,
              Operator::projector_complement(phi0),
              std::move(h1),
              phi0,
              phi1,
              {{"n", double(n)}, {"m", double(ms.size())}},
              {{"form", projector_form ? "projector" : "diagonal"}}};
    p.validate();
    return p;
}

// ---------------------------------------------------------------------------
// Periodic ZZ ring: the uncertainty grows as sqrt(n), so the inverse
// uncertainty cannot lower-bound anything asymptotically. Returned with a
// rank-1 driver so gap/dynamics tooling still accepts it, but phi1 is absent
// and info["fragment"] marks it as excluded from runtime claims.
inline Problem ising_counterexample(int n) {
    if (n < 3 || n > 20) throw invalid_argument("ising_counterexample: need 3 <= n <= 20");
    auto basis = BasisDescriptor::full_register(n);
    Eigen::VectorXd values(basis.dim);
    for (std::uint64_t z = 0; z < basis.dim; ++z) {
        int sum = 0;
        for (int i = 0; i < n; ++i) {
            int si = ((z >> i) & 1) ? -1 : 1;
            int sj = ((z >> ((i + 1) % n)) & 1) ? -1 : 1;
            sum += si * sj;
        }
        values[z] = -double(sum);
    }
    StateVector phi0 = uniform_superposition(n);
    Problem p{"ising_ring",
              basis,
              Operator::projector_complement(phi0),
              Operator::diagonal(basis, std::move(values)),
              phi0,
              std::nullopt,
              {{"n", double(n)}},
              {{"fragment", "1"}}};
    p.validate();
    return p;
}

// ---------------------------------------------------------------------------
// k-clique search on the weight-k subspace

// Pair-exchange hopping: matrix element -1 between weight-k labels that
// differ by moving a single 1 to an empty position. The Dicke state is its
// unique ground state (eigenvalue -k(n-k)).
inline Operator hopping_hamiltonian(int n, int k) {
    auto basis = BasisDescriptor::hamming_subspace(n, k);
    if (basis.dim > 4096)
        throw invalid_argument("hopping_hamiltonian: subspace dimension exceeds dense cap 4096");
    graphs::SubspaceIndex idx(n, k);
    Matrix m = Matrix::Zero(basis.dim, basis.dim);
    for (std::uint64_t r = 0; r < basis.dim; ++r) {
        std::uint64_t z = idx.unrank(r);
        for (int a = 0; a < n; ++a) {
            if (!((z >> a) & 1)) continue;
            for (int b = 0; b < n; ++b) {
                if ((z >> b) & 1) continue;
                std::uint64_t z2 = (z & ~(std::uint64_t{1} << a)) | (std::uint64_t{1} << b);
                m(idx.rank(z2), r) = -1.0;
            }
        }
    }
    return Operator::dense(basis, std::move(m));
}

// Cost Hamiltonian: missing-edge count per weight-k label (deformed: capped
// at 1). phi1 is the uniform superposition over k-clique labels when the
// graph has any; with the deformed cost that makes h1 a projector onto the
// non-clique labels.
inline Problem kclique(const graphs::Graph& g, int k, bool deformed) {
    int n = g.n();
    auto basis = BasisDescriptor::hamming_subspace(n, k);
    if (basis.dim > 4096)
        throw invalid_argument("kclique: subspace dimension exceeds dense cap 4096");
    auto values = graphs::cost_values(g, k, deformed);
    graphs::SubspaceIndex idx(n, k);

    std::vector<std::uint64_t> clique_ranks;
    for (std::uint64_t r = 0; r < basis.dim; ++r)
        if (graphs::missing_edge_count(g, idx.unrank(r)) == 0) clique_ranks.push_back(r);

    std::optional<StateVector> phi1;
    if (!clique_ranks.empty()) {
        Vector amps = Vector::Zero(basis.dim);
        double a = 1.0 / std::sqrt(double(clique_ranks.size()));
        for (auto r : clique_ranks) amps[r] = a;
        phi1 = StateVector(basis, std::move(amps));
    }

    Eigen::Map<const Eigen::VectorXd> vmap(values.data(), values.size());
    Problem p{deformed ? "kclique_deformed" : "kclique",
              basis,
              hopping_hamiltonian(n, k),
              Operator::diagonal(basis, vmap),
              dicke_state(n, k),
              std::move(phi1),
              {{"n", double(n)},
               {"k", double(k)},
               {"m", double(clique_ranks.size())},
               {"lk", double(num::binom(k, 2))},
               {"deformed", deformed ? 1.0 : 0.0}},
              {{"graph", graphs::to_edge_list(g)}}};
    p.validate();
    return p;
}

} // namespace aqb::zoo
