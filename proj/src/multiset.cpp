#include "qcinv/multiset.hpp"

#include <sstream>

namespace qcinv {

void InvariantMultiset::add_histogram(const std::vector<std::uint64_t>& hist,
                                      std::uint64_t scale) {
    for (Residue v = 0; v < hist.size(); ++v) {
        if (hist[v] == 0) continue;
        mpz_class c(static_cast<unsigned long>(hist[v]));
        c *= static_cast<unsigned long>(scale);
        counts_[v] += c;
    }
}

mpz_class InvariantMultiset::total() const {
    mpz_class t = 0;
    for (const auto& [v, c] : counts_) t += c;
    return t;
}

mpz_class InvariantMultiset::zero_count() const {
    auto it = counts_.find(0);
    return it == counts_.end() ? mpz_class(0) : it->second;
}

InvariantMultiset InvariantMultiset::negated() const {
    InvariantMultiset out(p_);
    for (const auto& [v, c] : counts_) out.add(neg_mod(v, p_), c);
    return out;
}

std::string InvariantMultiset::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [v, c] : counts_) {
        if (!first) os << ", ";
        first = false;
        os << v << ": " << c.get_str();
    }
    os << "}";
    return os.str();
}

std::uint32_t least_power_exceeding(const mpz_class& n, Prime p) {
    std::uint32_t k = 0;
    mpz_class power = 1;
    while (power <= n) {
        power *= p.value();
        ++k;
    }
    return k;
}

}  // namespace qcinv
