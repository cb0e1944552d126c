#include "coverhfk/abelian.hpp"

#include <numeric>
#include <stdexcept>

namespace coverhfk {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> f) : factors(std::move(f)) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) throw std::logic_error("invariant factor < 2");
        if (i > 0 && factors[i] % factors[i - 1] != 0)
            throw std::logic_error("invariant factors do not form a divisibility chain");
    }
}

Int FiniteAbelianGroup::order() const {
    Int n = 1;
    for (auto d : factors) n *= d;
    return n;
}

Residue FiniteAbelianGroup::reduce(const Residue& r) const {
    if (r.size() != factors.size()) throw std::logic_error("residue length mismatch");
    Residue out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t m = r[i] % factors[i];
        out[i] = m < 0 ? m + factors[i] : m;
    }
    return out;
}

Residue FiniteAbelianGroup::add(const Residue& a, const Residue& b) const {
    Residue out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % factors[i];
    return out;
}

Residue FiniteAbelianGroup::neg(const Residue& a) const {
    Residue out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] == 0 ? 0 : factors[i] - a[i];
    return out;
}

Residue FiniteAbelianGroup::scale(std::int64_t k, const Residue& a) const {
    Residue out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t m = (k % factors[i]) * (a[i] % factors[i]) % factors[i];
        out[i] = m < 0 ? m + factors[i] : m;
    }
    return out;
}

bool FiniteAbelianGroup::is_zero(const Residue& a) const {
    for (auto x : a)
        if (x != 0) return false;
    return true;
}

std::vector<Residue> FiniteAbelianGroup::elements() const {
    std::vector<Residue> out;
    Int n = order();
    if (!n.fits_slong_p()) throw std::logic_error("group too large to enumerate");
    out.reserve(static_cast<std::size_t>(n.get_si()));
    Residue cur = zero();
    while (true) {
        out.push_back(cur);
        std::size_t i = factors.size();
        while (i > 0) {
            --i;
            if (++cur[i] < factors[i]) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (factors.empty()) return out;
    }
}

std::vector<std::int64_t> FiniteAbelianGroup::cyclic_units() const {
    if (factors.size() != 1) throw std::logic_error("cyclic_units on non-cyclic group");
    std::vector<std::int64_t> out;
    for (std::int64_t u = 1; u < factors[0]; ++u)
        if (std::gcd(u, factors[0]) == 1) out.push_back(u);
    return out;
}

std::string FiniteAbelianGroup::str() const {
    if (trivial()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " + ";
        s += "Z" + std::to_string(factors[i]);
    }
    return s;
}

std::string residue_str(const Residue& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r[i]);
    }
    return s + ")";
}

}  // namespace coverhfk
