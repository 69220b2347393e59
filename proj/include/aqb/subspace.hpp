#pragma once

#include <cstdint>

#include "aqb/errors.hpp"
#include "aqb/numeric.hpp"

namespace aqb::graphs {

// Bijection between fixed-weight bitstrings and dense indices via the
// combinatorial number system. Order is colexicographic: a k-set with bit
// positions c1 < c2 < ... < ck gets rank sum_i binom(c_i, i), so sets are
// sorted by their largest element first. rank(unrank(r)) == r for all
// r < binom(n, k), and unrank(0) is the lowest-k-bits mask.
class SubspaceIndex {
public:
    SubspaceIndex(int n, int k) : n_(n), k_(k) {
        if (n < 1 || n > 62) throw invalid_argument("SubspaceIndex: need 1 <= n <= 62");
        if (k < 0 || k > n) throw invalid_argument("SubspaceIndex: need 0 <= k <= n");
        dim_ = num::binom(n, k);
    }

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t dim() const { return dim_; }

    std::uint64_t rank(std::uint64_t label) const {
        if (label >> n_) throw invalid_argument("SubspaceIndex::rank: label has bits >= n");
        std::uint64_t r = 0;
        int seen = 0;
        for (int c = 0; c < n_; ++c) {
            if (label & (std::uint64_t{1} << c)) {
                ++seen;
                r += num::binom(c, seen);
            }
        }
        if (seen != k_) throw invalid_argument("SubspaceIndex::rank: label weight != k");
        return r;
    }

    std::uint64_t unrank(std::uint64_t index) const {
        if (index >= dim_) throw invalid_argument("SubspaceIndex::unrank: index out of range");
        std::uint64_t label = 0;
        std::uint64_t rem = index;
        int c = n_ - 1;
        for (int i = k_; i >= 1; --i) {
            while (num::binom(c, i) > rem) --c;
            label |= std::uint64_t{1} << c;
            rem -= num::binom(c, i);
            --c;
        }
        return label;
    }

private:
    int n_, k_;
    std::uint64_t dim_;
};

} // namespace aqb::graphs
