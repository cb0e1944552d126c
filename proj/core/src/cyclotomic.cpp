#include "coverhfk/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>

#include "coverhfk/matrix.hpp"

namespace coverhfk {

namespace {

// Quotient of exact polynomial division (low-to-high coefficients).
std::vector<Int> poly_divexact(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> r = num;
    std::size_t dn = den.size() - 1;
    if (den.back() == 0) throw std::logic_error("division by non-monic tail");
    std::vector<Int> q(r.size() - dn, Int(0));
    for (std::size_t i = r.size(); i-- > dn;) {
        Int c = r[i];
        if (c == 0) continue;
        if (c % den.back() != 0) throw std::logic_error("inexact polynomial division");
        c = int_divexact(c, den.back());
        q[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) r[i - dn + j] -= c * den[j];
    }
    for (const Int& c : r)
        if (c != 0) throw std::logic_error("inexact polynomial division (remainder)");
    return q;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw std::logic_error("cyclotomic_polynomial: n < 1");
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    std::vector<Int> num(static_cast<std::size_t>(n) + 1, Int(0));
    num[0] = -1;
    num.back() = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_divexact(num, cyclotomic_polynomial(d));
    }
    return num;
}

CycloRing::CycloRing(std::int64_t n) : n_(n), phi_(cyclotomic_polynomial(n)) {
    std::size_t deg = phi_.size() - 1;
    powers_.resize(static_cast<std::size_t>(n));
    std::vector<Int> cur(deg, Int(0));
    // x^0 = 1; multiply by x stepwise, reducing with the monic modulus.
    if (deg == 0) throw std::logic_error("degenerate cyclotomic ring");
    cur[0] = 1;
    for (std::int64_t e = 0; e < n; ++e) {
        powers_[static_cast<std::size_t>(e)] = cur;
        std::vector<Int> next(deg, Int(0));
        for (std::size_t i = 0; i + 1 < deg; ++i) next[i + 1] = cur[i];
        const Int& top = cur[deg - 1];
        if (top != 0)
            for (std::size_t i = 0; i < deg; ++i) next[i] -= top * phi_[i];
        cur = std::move(next);
    }
}

const std::vector<Int>& CycloRing::power(std::int64_t e) const {
    std::int64_t m = e % n_;
    if (m < 0) m += n_;
    return powers_[static_cast<std::size_t>(m)];
}

std::vector<Int> CycloRing::reduce(const std::vector<Int>& p) const {
    std::vector<Int> out(degree(), Int(0));
    for (std::size_t e = 0; e < p.size(); ++e) {
        if (p[e] == 0) continue;
        const std::vector<Int>& pe = power(static_cast<std::int64_t>(e));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += p[e] * pe[i];
    }
    return out;
}

std::vector<Int> CycloRing::mul(const std::vector<Int>& a, const std::vector<Int>& b) const {
    std::vector<Int> conv(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) conv[i + j] += a[i] * b[j];
    }
    return reduce(conv);
}

std::vector<Int> CycloRing::conjugate(const std::vector<Int>& a) const {
    std::vector<Int> out(degree(), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const std::vector<Int>& p = power(n_ - static_cast<std::int64_t>(i));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += a[i] * p[k];
    }
    return out;
}

Int CycloRing::norm(const std::vector<Int>& a) const {
    // Determinant of multiplication by a on the power basis of Z[x]/Phi_n.
    std::size_t d = degree();
    IntMatrix M(d, d);
    std::vector<Int> col = reduce(a);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) M.at(i, j) = col[i];
        // Multiply by x for the next basis column.
        std::vector<Int> next(d, Int(0));
        for (std::size_t i = 0; i + 1 < d; ++i) next[i + 1] = col[i];
        const Int& top = col[d - 1];
        if (top != 0)
            for (std::size_t i = 0; i < d; ++i) next[i] -= top * phi_[i];
        col = std::move(next);
    }
    return M.det();
}

void CycloPoly::set(std::int64_t degree, std::vector<Int> rep) {
    bool zero = true;
    for (const Int& c : rep)
        if (c != 0) {
            zero = false;
            break;
        }
    if (zero)
        coeffs_.erase(degree);
    else
        coeffs_[degree] = std::move(rep);
}

void CycloPoly::add_monomial(const Int& coeff, std::int64_t zeta_exp, std::int64_t degree) {
    if (coeff == 0) return;
    const std::vector<Int>& p = ring_->power(zeta_exp);
    auto it = coeffs_.find(degree);
    std::vector<Int> rep =
        it == coeffs_.end() ? std::vector<Int>(ring_->degree(), Int(0)) : it->second;
    for (std::size_t i = 0; i < rep.size(); ++i) rep[i] += coeff * p[i];
    set(degree, std::move(rep));
}

void CycloPoly::add_reduced(const std::vector<Int>& r, std::int64_t degree) {
    auto it = coeffs_.find(degree);
    std::vector<Int> rep =
        it == coeffs_.end() ? std::vector<Int>(ring_->degree(), Int(0)) : it->second;
    for (std::size_t i = 0; i < rep.size(); ++i) rep[i] += r[i];
    set(degree, std::move(rep));
}

CycloPoly CycloPoly::operator+(const CycloPoly& o) const {
    CycloPoly r = *this;
    for (const auto& [d, rep] : o.coeffs_) r.add_reduced(rep, d);
    return r;
}

CycloPoly CycloPoly::operator-(const CycloPoly& o) const {
    CycloPoly r = *this;
    for (const auto& [d, rep] : o.coeffs_) {
        std::vector<Int> m = rep;
        for (Int& c : m) c = -c;
        r.add_reduced(m, d);
    }
    return r;
}

CycloPoly CycloPoly::operator*(const CycloPoly& o) const {
    CycloPoly r(ring_);
    for (const auto& [d1, r1] : coeffs_)
        for (const auto& [d2, r2] : o.coeffs_) r.add_reduced(ring_->mul(r1, r2), d1 + d2);
    return r;
}

bool CycloPoly::operator==(const CycloPoly& o) const {
    return ring_->conductor() == o.ring_->conductor() && coeffs_ == o.coeffs_;
}

CycloPoly CycloPoly::conjugated() const {
    CycloPoly r(ring_);
    for (const auto& [d, rep] : coeffs_) r.add_reduced(ring_->conjugate(rep), d);
    return r;
}

CycloPoly CycloPoly::divided_by_T_minus_1() const {
    CycloPoly q(ring_);
    if (coeffs_.empty()) return q;
    // f = (T - 1) sum_d (-s_d) T^d with s_d the partial sums of coefficients;
    // the total sum must vanish for the division to be exact.
    std::int64_t lo = coeffs_.begin()->first;
    std::int64_t hi = coeffs_.rbegin()->first;
    std::vector<Int> s(ring_->degree(), Int(0));
    for (std::int64_t d = lo; d < hi; ++d) {
        auto it = coeffs_.find(d);
        if (it != coeffs_.end())
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += it->second[i];
        std::vector<Int> m = s;
        for (Int& c : m) c = -c;
        q.add_reduced(m, d);
    }
    auto it = coeffs_.find(hi);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += it->second[i];
    for (const Int& c : s)
        if (c != 0) throw std::logic_error("polynomial is not divisible by T - 1");
    return q;
}

std::vector<Int> CycloPoly::eval_at_one() const {
    std::vector<Int> s(ring_->degree(), Int(0));
    for (const auto& [d, rep] : coeffs_)
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += rep[i];
    return s;
}

bool CycloPoly::is_integral() const {
    for (const auto& [d, rep] : coeffs_)
        for (std::size_t i = 1; i < rep.size(); ++i)
            if (rep[i] != 0) return false;
    return true;
}

LaurentPoly CycloPoly::integer_part() const {
    LaurentPoly p;
    for (const auto& [d, rep] : coeffs_) p.add_term(d, rep[0]);
    return p;
}

std::string CycloPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [d, rep] : coeffs_) {
        std::string inner;
        for (std::size_t i = 0; i < rep.size(); ++i) {
            if (rep[i] == 0) continue;
            if (!inner.empty()) inner += rep[i] > 0 ? " + " : " - ";
            else if (rep[i] < 0) inner += "-";
            Int a = int_abs(rep[i]);
            if (i == 0) {
                inner += a.get_str();
            } else {
                if (a != 1) inner += a.get_str() + "*";
                inner += "z";
                if (i != 1) inner += "^" + std::to_string(i);
            }
        }
        if (!out.empty()) out += " + ";
        out += "(" + inner + ")*T^" + std::to_string(d);
    }
    return out;
}

CycloPoly cyclotomic_eval(const GroupAlgebraElem& x, const std::vector<std::int64_t>& chars) {
    const FiniteAbelianGroup& g = x.group();
    if (chars.size() != g.factors.size())
        throw std::logic_error("one character residue per invariant factor required");
    std::int64_t n = 1;
    for (auto d : g.factors) n = std::lcm(n, d);
    auto ring = std::make_shared<CycloRing>(n);
    CycloPoly out(ring);
    for (const auto& [key, coeff] : x.coeffs()) {
        const Residue& c = key.first;
        std::int64_t e = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            e = (e + chars[i] % n * (c[i] % n) % n * ((n / g.factors[i]) % n)) % n;
        out.add_monomial(coeff, e, key.second);
    }
    return out;
}

}  // namespace coverhfk
