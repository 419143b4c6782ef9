#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qcinv/modp.hpp"

namespace qcinv {

// Multiset of values in Z/pZ with arbitrary-precision multiplicities.
// Entries with zero count are never stored, so equal multisets compare
// equal structurally.
class InvariantMultiset {
public:
    explicit InvariantMultiset(Prime p) : p_(p) {}

    Prime modulus() const { return p_; }
    const std::map<Residue, mpz_class>& counts() const { return counts_; }

    void add(Residue value, std::uint64_t count = 1) {
        if (count == 0) return;
        counts_[value] += mpz_class(static_cast<unsigned long>(count));
    }

    void add(Residue value, const mpz_class& count) {
        if (count == 0) return;
        counts_[value] += count;
    }

    // Absorb a histogram indexed by residue, scaled by `scale`.
    void add_histogram(const std::vector<std::uint64_t>& hist, std::uint64_t scale = 1);

    mpz_class total() const;

    // Multiplicity of 0.
    mpz_class zero_count() const;

    // Value-wise negation: v -> -v mod p.
    InvariantMultiset negated() const;

    bool operator==(const InvariantMultiset& o) const {
        return p_ == o.p_ && counts_ == o.counts_;
    }

    // "{v1: c1, v2: c2, ...}" with values ascending; counts in decimal.
    std::string str() const;

private:
    Prime p_;
    std::map<Residue, mpz_class> counts_;
};

inline mpz_class a0(const InvariantMultiset& ms) { return ms.zero_count(); }

// Least k >= 0 with n < p^k (so k = 0 exactly when n = 0).
std::uint32_t least_power_exceeding(const mpz_class& n, Prime p);

}  // namespace qcinv
