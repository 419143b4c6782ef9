#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcinv/errors.hpp"
#include "qcinv/modp.hpp"

namespace qcinv {

// One Artin generator occurrence: index i in [1, m-1], sign +1 or -1.
struct Letter {
    std::uint32_t index;
    int sign;

    bool operator==(const Letter&) const = default;
};

// A braid word on m strands, stored fully expanded (one entry per letter).
// The empty word is the identity braid.
class BraidWord {
public:
    explicit BraidWord(std::uint32_t degree, std::vector<Letter> letters = {});

    // Grammar: `m=<int>: <term>*` with
    //   term := s<idx> | s<idx>^<int> | ( <term>* )^<int>
    // Exponents may be negative or zero; idx must lie in [1, m-1].
    static BraidWord parse(std::string_view text);

    std::uint32_t degree() const { return degree_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }

    BraidWord inverse() const;
    BraidWord concat(const BraidWord& tail) const;

    // Canonical form: runs of a generator are printed with an exponent,
    // e.g. "m=3: s1^2 s2^-1". parse(str()) reproduces the word.
    std::string str() const;

    bool operator==(const BraidWord&) const = default;

private:
    std::uint32_t degree_;
    std::vector<Letter> letters_;
};

// Word for the n-th power of the full twist (s1 s2 ... s_{m-1})^m.
// Negative n yields the inverse word (reversed, signs flipped).
BraidWord full_twist(std::uint32_t m, std::int64_t n);

// Bijection of {0, .., m-1}; images[s] is where strand s ends up.
struct Permutation {
    std::vector<std::uint32_t> images;

    static Permutation identity(std::uint32_t m);
    Permutation compose_after(const Permutation& first) const;  // this ∘ first
    std::uint32_t cycle_count() const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;
};

// Image in the symmetric group: each letter acts as the transposition
// (i, i+1) on strand positions, applied left to right. Satisfies
// permutation(a.concat(b)) == permutation(b) ∘ permutation(a).
Permutation permutation(const BraidWord& b);

// Cycles of permutation(b); the closure is a knot iff this is 1.
std::uint32_t closure_components(const BraidWord& b);

// Signed letter count per generator, length m-1.
std::vector<std::int64_t> exponent_sums(const BraidWord& b);

// σ_i^(c*p) block: generator index i, nonzero signed multiple c.
struct Block {
    std::uint32_t index;
    std::int64_t multiple;

    bool operator==(const Block&) const = default;
};

// A braid given as a product of p-th powers of generators. Membership in
// the subgroup generated by the σ_i^p is a property of this presentation,
// so the block form is kept distinct from the expanded word.
class PowerBlockWord {
public:
    PowerBlockWord(std::uint32_t degree, Prime p, std::vector<Block> blocks);

    // Grammar: `m=<int>: <idx>:<mult> <idx>:<mult> ...`; each pair denotes
    // σ_idx^(mult*p) with mult != 0.
    static PowerBlockWord parse(std::string_view text, Prime p);

    std::uint32_t degree() const { return degree_; }
    Prime prime() const { return p_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    BraidWord expand() const;
    std::string str() const;

    bool operator==(const PowerBlockWord&) const = default;

private:
    std::uint32_t degree_;
    Prime p_;
    std::vector<Block> blocks_;
};

}  // namespace qcinv
