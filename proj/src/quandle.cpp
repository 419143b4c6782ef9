#include "qcinv/quandle.hpp"

#include <string>

namespace qcinv {

std::vector<Residue> apply_word(const BraidWord& b, std::vector<Residue> colors, Prime p) {
    if (colors.size() != b.degree())
        throw std::invalid_argument("color tuple length must equal the braid degree");
    for (const Letter& l : b.letters()) apply_letter(colors, l, p);
    return colors;
}

MatrixModP action_matrix(const BraidWord& b, Prime p) {
    std::uint32_t m = b.degree();
    MatrixModP acc = MatrixModP::identity(m, p);
    for (const Letter& l : b.letters()) {
        MatrixModP step = MatrixModP::identity(m, p);
        std::uint32_t i = l.index - 1;
        if (l.sign > 0) {
            // row i: x_{i+1}; row i+1: 2x_{i+1} - x_i
            step.at(i, i) = 0;
            step.at(i, i + 1) = 1;
            step.at(i + 1, i) = neg_mod(1, p);
            step.at(i + 1, i + 1) = 2 % p.value();
        } else {
            // row i: 2x_i - x_{i+1}; row i+1: x_i
            step.at(i, i) = 2 % p.value();
            step.at(i, i + 1) = neg_mod(1, p);
            step.at(i + 1, i) = 1;
            step.at(i + 1, i + 1) = 0;
        }
        acc = step * acc;
    }
    return acc;
}

std::uint64_t ColoringSpace::count_checked(std::uint64_t cap) const {
    return checked_pow(p, dim(), cap);
}

std::vector<Residue> ColoringSpace::coloring_at(std::uint64_t index) const {
    std::vector<Residue> colors(degree, 0);
    for (const auto& vec : basis) {
        Residue digit = Residue(index % p.value());
        index /= p.value();
        if (digit == 0) continue;
        for (std::uint32_t j = 0; j < degree; ++j)
            colors[j] = add_mod(colors[j], mul_mod(digit, vec[j], p), p);
    }
    return colors;
}

ColoringSpace coloring_space(const BraidWord& b, Prime p) {
    MatrixModP a = action_matrix(b, p);
    MatrixModP shifted = a - MatrixModP::identity(b.degree(), p);
    return ColoringSpace{p, b.degree(), kernel_basis(shifted)};
}

std::uint32_t delta_order(std::uint32_t m, Prime p) {
    std::uint32_t l = (m % 2 == 1) ? 2 : p.value();
    MatrixModP a = action_matrix(full_twist(m, 1), p);
    if (!a.pow(l).is_identity())
        throw std::logic_error("full-twist action power A_Delta^" + std::to_string(l) +
                               " is not the identity for m=" + std::to_string(m) +
                               ", p=" + std::to_string(p.value()));
    return l;
}

}  // namespace qcinv
