#include "qcinv/modp.hpp"

#include <string>

namespace qcinv {

namespace {

bool is_odd_prime(std::uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint32_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Prime::Prime(std::uint32_t p) : p_(p) {
    if (p >= (1u << 15))
        throw std::invalid_argument("prime too large: " + std::to_string(p) +
                                    " (need p < 2^15 so p^2 fits comfortably)");
    if (!is_odd_prime(p))
        throw std::invalid_argument("not an odd prime: " + std::to_string(p));
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
    std::uint64_t result = 1 % modulus;
    base %= modulus;
    while (exp > 0) {
        if (exp & 1) result = result * base % modulus;
        base = base * base % modulus;
        exp >>= 1;
    }
    return result;
}

Residue inv_mod(Residue a, Prime p) {
    if (a == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
    return Residue(pow_mod(a, p.value() - 2, p.value()));
}

QuadraticClass quadratic_class(Residue a, Prime p) {
    if (a == 0) return QuadraticClass::Zero;
    std::uint64_t e = pow_mod(a, (p.value() - 1) / 2, p.value());
    return e == 1 ? QuadraticClass::Residue : QuadraticClass::NonResidue;
}

MatrixModP::MatrixModP(std::uint32_t rows, std::uint32_t cols, Prime p)
    : rows_(rows), cols_(cols), p_(p), a_(std::size_t(rows) * cols, 0) {}

MatrixModP MatrixModP::identity(std::uint32_t n, Prime p) {
    MatrixModP m(n, n, p);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatrixModP MatrixModP::operator*(const MatrixModP& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    MatrixModP out(rows_, rhs.cols_, p_);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t k = 0; k < cols_; ++k) {
            Residue aik = at(i, k);
            if (aik == 0) continue;
            for (std::uint32_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = add_mod(out.at(i, j), mul_mod(aik, rhs.at(k, j), p_), p_);
        }
    return out;
}

std::vector<Residue> MatrixModP::apply(std::span<const Residue> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply: length mismatch");
    std::vector<Residue> out(rows_, 0);
    for (std::uint32_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::uint32_t j = 0; j < cols_; ++j) acc += std::uint64_t(at(i, j)) * v[j];
        out[i] = Residue(acc % p_.value());
    }
    return out;
}

MatrixModP MatrixModP::pow(std::uint64_t e) const {
    if (rows_ != cols_) throw std::invalid_argument("matrix pow: square matrix required");
    MatrixModP result = identity(rows_, p_);
    MatrixModP base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

MatrixModP MatrixModP::operator-(const MatrixModP& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference: shape mismatch");
    MatrixModP out(rows_, cols_, p_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = sub_mod(a_[i], rhs.a_[i], p_);
    return out;
}

bool MatrixModP::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

MatrixModP rref(const MatrixModP& m) {
    MatrixModP r = m;
    Prime p = m.modulus();
    std::uint32_t pivot_row = 0;
    for (std::uint32_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        std::uint32_t sel = pivot_row;
        while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pivot_row)
            for (std::uint32_t j = 0; j < r.cols(); ++j)
                std::swap(r.at(sel, j), r.at(pivot_row, j));
        Residue inv = inv_mod(r.at(pivot_row, col), p);
        for (std::uint32_t j = 0; j < r.cols(); ++j)
            r.at(pivot_row, j) = mul_mod(r.at(pivot_row, j), inv, p);
        for (std::uint32_t i = 0; i < r.rows(); ++i) {
            if (i == pivot_row || r.at(i, col) == 0) continue;
            Residue f = r.at(i, col);
            for (std::uint32_t j = 0; j < r.cols(); ++j)
                r.at(i, j) = sub_mod(r.at(i, j), mul_mod(f, r.at(pivot_row, j), p), p);
        }
        ++pivot_row;
    }
    return r;
}

std::uint32_t MatrixModP::rank() const {
    MatrixModP r = rref(*this);
    std::uint32_t rank = 0;
    for (std::uint32_t i = 0; i < r.rows(); ++i) {
        bool nonzero = false;
        for (std::uint32_t j = 0; j < r.cols(); ++j)
            if (r.at(i, j) != 0) { nonzero = true; break; }
        if (nonzero) ++rank;
    }
    return rank;
}

Residue MatrixModP::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: square matrix required");
    MatrixModP r = *this;
    Residue d = 1;
    for (std::uint32_t col = 0; col < cols_; ++col) {
        std::uint32_t sel = col;
        while (sel < rows_ && r.at(sel, col) == 0) ++sel;
        if (sel == rows_) return 0;
        if (sel != col) {
            for (std::uint32_t j = 0; j < cols_; ++j) std::swap(r.at(sel, j), r.at(col, j));
            d = neg_mod(d, p_);
        }
        d = mul_mod(d, r.at(col, col), p_);
        Residue inv = inv_mod(r.at(col, col), p_);
        for (std::uint32_t i = col + 1; i < rows_; ++i) {
            if (r.at(i, col) == 0) continue;
            Residue f = mul_mod(r.at(i, col), inv, p_);
            for (std::uint32_t j = col; j < cols_; ++j)
                r.at(i, j) = sub_mod(r.at(i, j), mul_mod(f, r.at(col, j), p_), p_);
        }
    }
    return d;
}

std::vector<std::vector<Residue>> kernel_basis(const MatrixModP& m) {
    Prime p = m.modulus();
    MatrixModP r = rref(m);

    // Locate pivot columns.
    std::vector<std::int32_t> pivot_row_of_col(m.cols(), -1);
    std::uint32_t row = 0;
    for (std::uint32_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        if (r.at(row, col) == 1) {
            pivot_row_of_col[col] = std::int32_t(row);
            ++row;
        }
    }

    // One kernel vector per free column.
    std::vector<std::vector<Residue>> vectors;
    for (std::uint32_t col = 0; col < m.cols(); ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        std::vector<Residue> v(m.cols(), 0);
        v[col] = 1;
        for (std::uint32_t c = 0; c < m.cols(); ++c)
            if (pivot_row_of_col[c] >= 0)
                v[c] = neg_mod(r.at(std::uint32_t(pivot_row_of_col[c]), col), p);
        vectors.push_back(std::move(v));
    }
    if (vectors.empty()) return vectors;

    // Canonicalize: RREF of the spanning set.
    MatrixModP span(std::uint32_t(vectors.size()), m.cols(), p);
    for (std::uint32_t i = 0; i < vectors.size(); ++i)
        for (std::uint32_t j = 0; j < m.cols(); ++j)
            span.at(i, j) = vectors[i][j];
    MatrixModP canon = rref(span);
    for (std::uint32_t i = 0; i < vectors.size(); ++i)
        for (std::uint32_t j = 0; j < m.cols(); ++j)
            vectors[i][j] = canon.at(i, j);
    return vectors;
}

std::uint64_t checked_pow(Prime p, std::uint32_t k, std::uint64_t cap) {
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (result > cap / p.value())
            throw BudgetError("enumeration budget exceeded: " + std::to_string(p.value()) +
                              "^" + std::to_string(k) + " > " + std::to_string(cap));
        result *= p.value();
    }
    if (result > cap)
        throw BudgetError("enumeration budget exceeded: " + std::to_string(result) + " > " +
                          std::to_string(cap));
    return result;
}

}  // namespace qcinv
