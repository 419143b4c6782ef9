#include "qcinv/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace qcinv {

namespace {

void check_letters(std::uint32_t degree, const std::vector<Letter>& letters) {
    if (degree < 2) throw std::invalid_argument("braid degree must be >= 2");
    for (const Letter& l : letters) {
        if (l.index < 1 || l.index >= degree)
            throw std::invalid_argument("generator index " + std::to_string(l.index) +
                                        " out of range [1, " + std::to_string(degree - 1) + "]");
        if (l.sign != 1 && l.sign != -1)
            throw std::invalid_argument("letter sign must be +1 or -1");
    }
}

// Cursor over the input text; all parse routines share it.
struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    void expect(char c, const char* what) {
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected ") + what, pos);
        ++pos;
    }

    std::int64_t integer() {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
        if (ec != std::errc() || ptr != text.data() + pos || start == pos)
            throw ParseError("expected an integer", start);
        return value;
    }

    std::uint32_t header_degree() {
        skip_ws();
        expect('m', "'m'");
        expect('=', "'='");
        std::int64_t m = integer();
        if (m < 2) throw ParseError("degree must be >= 2", pos);
        skip_ws();
        expect(':', "':'");
        return std::uint32_t(m);
    }
};

void append_power(std::vector<Letter>& out, const std::vector<Letter>& unit, std::int64_t exp) {
    if (exp >= 0) {
        for (std::int64_t k = 0; k < exp; ++k)
            out.insert(out.end(), unit.begin(), unit.end());
    } else {
        std::vector<Letter> inv(unit.rbegin(), unit.rend());
        for (Letter& l : inv) l.sign = -l.sign;
        for (std::int64_t k = 0; k < -exp; ++k)
            out.insert(out.end(), inv.begin(), inv.end());
    }
}

// term* until end of input or a closing paren.
std::vector<Letter> parse_terms(Scanner& sc, std::uint32_t degree) {
    std::vector<Letter> out;
    while (!sc.done() && sc.peek() != ')') {
        if (sc.peek() == '(') {
            std::size_t open = sc.pos;
            ++sc.pos;
            std::vector<Letter> inner = parse_terms(sc, degree);
            if (sc.done() || sc.peek() != ')')
                throw ParseError("unclosed '('", open);
            ++sc.pos;
            sc.skip_ws();
            sc.expect('^', "'^' after ')'");
            append_power(out, inner, sc.integer());
        } else if (sc.peek() == 's') {
            std::size_t at = sc.pos;
            ++sc.pos;
            std::int64_t idx = sc.integer();
            if (idx < 1 || std::uint64_t(idx) >= degree)
                throw ParseError("generator index " + std::to_string(idx) +
                                     " out of range [1, " + std::to_string(degree - 1) + "]",
                                 at);
            std::int64_t exp = 1;
            if (sc.peek() == '^') {
                ++sc.pos;
                exp = sc.integer();
            }
            append_power(out, {Letter{std::uint32_t(idx), +1}}, exp);
        } else {
            throw ParseError("expected 's<idx>' or '('", sc.pos);
        }
    }
    return out;
}

}  // namespace

BraidWord::BraidWord(std::uint32_t degree, std::vector<Letter> letters)
    : degree_(degree), letters_(std::move(letters)) {
    check_letters(degree_, letters_);
}

BraidWord BraidWord::parse(std::string_view text) {
    Scanner sc{text};
    std::uint32_t m = sc.header_degree();
    std::vector<Letter> letters = parse_terms(sc, m);
    if (!sc.done()) throw ParseError("unexpected ')'", sc.pos);
    return BraidWord(m, std::move(letters));
}

BraidWord BraidWord::inverse() const {
    std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
    for (Letter& l : inv) l.sign = -l.sign;
    return BraidWord(degree_, std::move(inv));
}

BraidWord BraidWord::concat(const BraidWord& tail) const {
    if (degree_ != tail.degree_)
        throw std::invalid_argument("cannot concatenate words of different degree");
    std::vector<Letter> out = letters_;
    out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
    return BraidWord(degree_, std::move(out));
}

std::string BraidWord::str() const {
    std::ostringstream os;
    os << "m=" << degree_ << ":";
    std::size_t i = 0;
    while (i < letters_.size()) {
        std::size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        std::int64_t exp = std::int64_t(j - i) * letters_[i].sign;
        os << " s" << letters_[i].index;
        if (exp != 1) os << "^" << exp;
        i = j;
    }
    return os.str();
}

BraidWord full_twist(std::uint32_t m, std::int64_t n) {
    if (m < 2) throw std::invalid_argument("full twist needs degree >= 2");
    std::vector<Letter> delta;
    delta.reserve(std::size_t(m) * (m - 1));
    for (std::uint32_t rep = 0; rep < m; ++rep)
        for (std::uint32_t i = 1; i < m; ++i) delta.push_back(Letter{i, +1});
    std::vector<Letter> out;
    append_power(out, delta, n);
    return BraidWord(m, std::move(out));
}

Permutation Permutation::identity(std::uint32_t m) {
    Permutation p;
    p.images.resize(m);
    std::iota(p.images.begin(), p.images.end(), 0u);
    return p;
}

Permutation Permutation::compose_after(const Permutation& first) const {
    Permutation out;
    out.images.resize(images.size());
    for (std::uint32_t s = 0; s < images.size(); ++s)
        out.images[s] = images[first.images[s]];
    return out;
}

std::uint32_t Permutation::cycle_count() const {
    std::vector<bool> seen(images.size(), false);
    std::uint32_t cycles = 0;
    for (std::uint32_t s = 0; s < images.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::uint32_t t = s; !seen[t]; t = images[t]) seen[t] = true;
    }
    return cycles;
}

bool Permutation::is_identity() const {
    for (std::uint32_t s = 0; s < images.size(); ++s)
        if (images[s] != s) return false;
    return true;
}

Permutation permutation(const BraidWord& b) {
    // images[s] = position where strand s currently sits.
    Permutation p = Permutation::identity(b.degree());
    for (const Letter& l : b.letters()) {
        std::uint32_t a = l.index - 1, c = l.index;
        for (std::uint32_t s = 0; s < p.images.size(); ++s) {
            if (p.images[s] == a)
                p.images[s] = c;
            else if (p.images[s] == c)
                p.images[s] = a;
        }
    }
    return p;
}

std::uint32_t closure_components(const BraidWord& b) {
    return permutation(b).cycle_count();
}

std::vector<std::int64_t> exponent_sums(const BraidWord& b) {
    std::vector<std::int64_t> sums(b.degree() - 1, 0);
    for (const Letter& l : b.letters()) sums[l.index - 1] += l.sign;
    return sums;
}

PowerBlockWord::PowerBlockWord(std::uint32_t degree, Prime p, std::vector<Block> blocks)
    : degree_(degree), p_(p), blocks_(std::move(blocks)) {
    if (degree < 2) throw std::invalid_argument("braid degree must be >= 2");
    for (const Block& blk : blocks_) {
        if (blk.index < 1 || blk.index >= degree)
            throw std::invalid_argument("block generator index " + std::to_string(blk.index) +
                                        " out of range [1, " + std::to_string(degree - 1) + "]");
        if (blk.multiple == 0)
            throw std::invalid_argument("block multiple must be nonzero");
    }
}

PowerBlockWord PowerBlockWord::parse(std::string_view text, Prime p) {
    Scanner sc{text};
    std::uint32_t m = sc.header_degree();
    std::vector<Block> blocks;
    while (!sc.done()) {
        std::size_t at = sc.pos;
        std::int64_t idx = sc.integer();
        if (idx < 1 || std::uint64_t(idx) >= m)
            throw ParseError("block generator index " + std::to_string(idx) +
                                 " out of range [1, " + std::to_string(m - 1) + "]",
                             at);
        sc.expect(':', "':' in block <idx>:<mult>");
        std::int64_t mult = sc.integer();
        if (mult == 0) throw ParseError("block multiple must be nonzero", at);
        blocks.push_back(Block{std::uint32_t(idx), mult});
    }
    return PowerBlockWord(m, p, std::move(blocks));
}

BraidWord PowerBlockWord::expand() const {
    std::vector<Letter> letters;
    for (const Block& blk : blocks_) {
        int sign = blk.multiple > 0 ? +1 : -1;
        std::uint64_t count = std::uint64_t(blk.multiple > 0 ? blk.multiple : -blk.multiple) *
                              p_.value();
        for (std::uint64_t k = 0; k < count; ++k) letters.push_back(Letter{blk.index, sign});
    }
    return BraidWord(degree_, std::move(letters));
}

std::string PowerBlockWord::str() const {
    std::ostringstream os;
    os << "m=" << degree_ << ":";
    for (const Block& blk : blocks_) os << " " << blk.index << ":" << blk.multiple;
    return os.str();
}

}  // namespace qcinv
