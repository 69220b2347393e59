#pragma once

#include <cstdint>
#include <string>

#include "aqb/errors.hpp"
#include "aqb/numeric.hpp"
#include "aqb/subspace.hpp"

namespace aqb {

// Index space a state vector or operator lives on. Three kinds:
//
//  FullRegister(n)     all 2^n computational labels; bit i of the label is
//                      the value of qubit i (LSB = qubit 0)
//  HammingSubspace(n,k) the binom(n,k) weight-k labels, indexed in
//                      colexicographic order via SubspaceIndex
//  TensorAB(nA,nB)     an (nA+nB)-qubit register split into two parts;
//                      combined index = a * 2^nB + b
struct BasisDescriptor {
    enum class Kind { FullRegister, HammingSubspace, TensorAB };

    Kind kind = Kind::FullRegister;
    int n = 0;  // FullRegister/HammingSubspace qubit count
    int k = 0;  // HammingSubspace weight
    int nA = 0; // TensorAB part sizes
    int nB = 0;
    std::uint64_t dim = 0;

    static BasisDescriptor full_register(int n) {
        if (n < 1 || n > 24) throw invalid_argument("full_register: need 1 <= n <= 24");
        BasisDescriptor b;
        b.kind = Kind::FullRegister;
        b.n = n;
        b.dim = std::uint64_t{1} << n;
        return b;
    }

    static BasisDescriptor hamming_subspace(int n, int k) {
        graphs::SubspaceIndex idx(n, k); // validates
        BasisDescriptor b;
        b.kind = Kind::HammingSubspace;
        b.n = n;
        b.k = k;
        b.dim = idx.dim();
        return b;
    }

    static BasisDescriptor tensor_ab(int nA, int nB) {
        if (nA < 1 || nB < 1 || nA + nB > 24)
            throw invalid_argument("tensor_ab: need nA, nB >= 1 and nA + nB <= 24");
        BasisDescriptor b;
        b.kind = Kind::TensorAB;
        b.nA = nA;
        b.nB = nB;
        b.dim = std::uint64_t{1} << (nA + nB);
        return b;
    }

    bool operator==(const BasisDescriptor&) const = default;

    // Bitstring label carried by dense index i (identity except for the
    // Hamming subspace, where it unranks).
    std::uint64_t label_of(std::uint64_t index) const {
        if (index >= dim) throw invalid_argument("label_of: index out of range");
        if (kind == Kind::HammingSubspace) return graphs::SubspaceIndex(n, k).unrank(index);
        return index;
    }

    std::uint64_t index_of(std::uint64_t label) const {
        if (kind == Kind::HammingSubspace) return graphs::SubspaceIndex(n, k).rank(label);
        if (label >= dim) throw invalid_argument("index_of: label out of range");
        return label;
    }

    std::string describe() const {
        switch (kind) {
        case Kind::FullRegister: return "full_register(n=" + std::to_string(n) + ")";
        case Kind::HammingSubspace:
            return "hamming_subspace(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
        case Kind::TensorAB:
            return "tensor_ab(nA=" + std::to_string(nA) + ",nB=" + std::to_string(nB) + ")";
        }
        return "?";
    }
};

inline void require_same_basis(const BasisDescriptor& a, const BasisDescriptor& b,
                               const char* where) {
    if (!(a == b))
        throw dimension_error(std::string(where) + ": basis mismatch (" + a.describe() + " vs " +
                              b.describe() + ")");
}

} // namespace aqb
