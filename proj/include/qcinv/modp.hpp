#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcinv/errors.hpp"

namespace qcinv {

using Residue = std::uint32_t;

// An odd prime p with 3 <= p < 2^15, so that arithmetic mod p^2 fits in
// 64-bit intermediates. Primality is certified by trial division at
// construction time.
class Prime {
public:
    explicit Prime(std::uint32_t p);

    std::uint32_t value() const { return p_; }
    std::uint64_t squared() const { return std::uint64_t(p_) * p_; }

    Residue reduce(std::int64_t x) const {
        std::int64_t r = x % std::int64_t(p_);
        return Residue(r < 0 ? r + p_ : r);
    }

    bool operator==(const Prime& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

inline Residue add_mod(Residue a, Residue b, Prime p) {
    Residue s = a + b;
    return s >= p.value() ? s - p.value() : s;
}

inline Residue sub_mod(Residue a, Residue b, Prime p) {
    return a >= b ? a - b : a + p.value() - b;
}

inline Residue mul_mod(Residue a, Residue b, Prime p) {
    return Residue(std::uint64_t(a) * b % p.value());
}

inline Residue neg_mod(Residue a, Prime p) {
    return a == 0 ? 0 : p.value() - a;
}

// base^exp mod modulus by square-and-multiply. modulus >= 2 and must fit
// products in 64 bits (modulus < 2^32); used with modulus p and p^2.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

// a^-1 mod p for a != 0.
Residue inv_mod(Residue a, Prime p);

// Classification of a residue under squaring, with 0 kept apart from the
// residue/nonresidue dichotomy.
enum class QuadraticClass { Zero, Residue, NonResidue };

// Euler's criterion: a^((p-1)/2) mod p.
QuadraticClass quadratic_class(Residue a, Prime p);

// true iff a is a nonzero square mod p.
inline bool is_quadratic_residue(Residue a, Prime p) {
    return quadratic_class(a, p) == QuadraticClass::Residue;
}

// Dense matrix over Z/pZ, entries kept reduced into [0, p).
class MatrixModP {
public:
    MatrixModP(std::uint32_t rows, std::uint32_t cols, Prime p);

    static MatrixModP identity(std::uint32_t n, Prime p);

    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }
    Prime modulus() const { return p_; }

    Residue& at(std::uint32_t r, std::uint32_t c) { return a_[std::size_t(r) * cols_ + c]; }
    Residue at(std::uint32_t r, std::uint32_t c) const { return a_[std::size_t(r) * cols_ + c]; }

    MatrixModP operator*(const MatrixModP& rhs) const;
    std::vector<Residue> apply(std::span<const Residue> v) const;

    MatrixModP pow(std::uint64_t e) const;

    // this - rhs, entrywise.
    MatrixModP operator-(const MatrixModP& rhs) const;

    bool operator==(const MatrixModP& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
    }

    bool is_identity() const;

    std::uint32_t rank() const;
    Residue det() const;

private:
    std::uint32_t rows_, cols_;
    Prime p_;
    std::vector<Residue> a_;
};

// Reduced row echelon form (pivots 1, zeros above and below each pivot).
MatrixModP rref(const MatrixModP& m);

// Canonical basis of {v : Mv = 0}. The kernel is computed from the RREF of
// M and the spanning set is itself put in RREF, so equal kernels always
// yield identical bases. Basis size = cols - rank. The zero matrix returns
// the standard basis; a full-rank square matrix returns an empty list.
std::vector<std::vector<Residue>> kernel_basis(const MatrixModP& m);

// p^k if it is <= cap, otherwise throws BudgetError.
std::uint64_t checked_pow(Prime p, std::uint32_t k, std::uint64_t cap);

}  // namespace qcinv
