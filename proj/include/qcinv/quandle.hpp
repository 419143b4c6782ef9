#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcinv/braid.hpp"
#include "qcinv/modp.hpp"

namespace qcinv {

// Dihedral quandle operation on Z/pZ: x*y = 2y - x. Self-inverse, so the
// dual operation coincides with it.
inline Residue quandle_op(Residue x, Residue y, Prime p) {
    return sub_mod(add_mod(y, y, p), x, p);
}

// R_{(y_1,...,y_k)}(x): fold x through the ys, y_1 applied first.
// The empty vector is the identity.
inline Residue fold(Residue x, std::span<const Residue> ys, Prime p) {
    for (Residue y : ys) x = quandle_op(x, y, p);
    return x;
}

// In-place color update for one letter. A positive letter sends
// (.., a, c, ..) at positions (i, i+1) to (.., c, a*c, ..); a negative
// letter sends it to (.., c*a, a, ..).
inline void apply_letter(std::vector<Residue>& colors, const Letter& l, Prime p) {
    Residue a = colors[l.index - 1];
    Residue c = colors[l.index];
    if (l.sign > 0) {
        colors[l.index - 1] = c;
        colors[l.index] = quandle_op(a, c, p);
    } else {
        colors[l.index - 1] = quandle_op(c, a, p);
        colors[l.index] = a;
    }
}

std::vector<Residue> apply_word(const BraidWord& b, std::vector<Residue> colors, Prime p);

// Matrix of the strand-color action of b on (Z/pZ)^m. The first letter
// acts first, so each letter's matrix multiplies from the left.
MatrixModP action_matrix(const BraidWord& b, Prime p);

// Fixed points of the action: the p-colorings of the closure of b.
// basis is the canonical kernel basis of (A_b - I); |colorings| = p^dim.
struct ColoringSpace {
    Prime p;
    std::uint32_t degree;
    std::vector<std::vector<Residue>> basis;

    std::uint32_t dim() const { return std::uint32_t(basis.size()); }

    // p^dim if within cap, else throws BudgetError.
    std::uint64_t count_checked(std::uint64_t cap) const;

    // The index-th coloring under base-p digit expansion of the basis
    // coefficients; index in [0, p^dim).
    std::vector<Residue> coloring_at(std::uint64_t index) const;
};

ColoringSpace coloring_space(const BraidWord& b, Prime p);

// Order of the full-twist action: 2 when m is odd, p when m is even.
// Verifies A_Δ^l = I by matrix power and throws std::logic_error if the
// verification fails (which would indicate a defect in the action).
std::uint32_t delta_order(std::uint32_t m, Prime p);

}  // namespace qcinv
