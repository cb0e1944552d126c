#include "coverhfk/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "coverhfk/errors.hpp"

namespace coverhfk {

LaurentPoly::LaurentPoly(Int constant) {
    if (constant != 0) coeffs_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(const Int& coeff, std::int64_t degree) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[degree] = coeff;
    return p;
}

std::int64_t LaurentPoly::min_degree() const {
    if (is_zero()) throw std::logic_error("min_degree of zero polynomial");
    return coeffs_.begin()->first;
}

std::int64_t LaurentPoly::max_degree() const {
    if (is_zero()) throw std::logic_error("max_degree of zero polynomial");
    return coeffs_.rbegin()->first;
}

Int LaurentPoly::coeff(std::int64_t degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(std::int64_t degree, const Int& coeff) {
    if (coeff == 0) return;
    auto it = coeffs_.find(degree);
    if (it == coeffs_.end()) {
        coeffs_.emplace(degree, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [d, c] : o.coeffs_) r.add_term(d, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [d, c] : o.coeffs_) r.add_term(d, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [d1, c1] : coeffs_)
        for (const auto& [d2, c2] : o.coeffs_) r.add_term(d1 + d2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [d, c] : coeffs_) r.coeffs_[d] = -c;
    return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
    LaurentPoly r;
    for (const auto& [d, c] : coeffs_) r.coeffs_[d + k] = c;
    return r;
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly r;
    for (const auto& [d, c] : coeffs_) r.coeffs_[-d] = c;
    return r;
}

Int LaurentPoly::eval(const Int& x) const {
    if (is_zero()) return 0;
    std::int64_t lo = min_degree();
    if (lo < 0 && x == 0) throw std::domain_error("evaluating negative powers at 0");
    // Evaluate T^{-lo} f as an ordinary polynomial, then divide by x^{-lo}.
    std::vector<Int> d = dense();
    Int acc = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) acc = acc * x + *it;
    if (lo > 0) {
        Int xe;
        mpz_pow_ui(xe.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(lo));
        acc *= xe;
    } else if (lo < 0) {
        Int xe;
        mpz_pow_ui(xe.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-lo));
        if (acc % xe != 0)
            throw std::domain_error("Laurent evaluation is not integral at this point");
        acc = int_divexact(acc, xe);
    }
    return acc;
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [d, c] : coeffs_) s += c;
    return s;
}

std::vector<Int> LaurentPoly::dense() const {
    if (is_zero()) return {};
    std::vector<Int> v(static_cast<std::size_t>(max_degree() - min_degree() + 1), Int(0));
    for (const auto& [d, c] : coeffs_) v[static_cast<std::size_t>(d - min_degree())] = c;
    return v;
}

Int LaurentPoly::coeff_abs_sum() const {
    Int s = 0;
    for (const auto& [d, c] : coeffs_) s += int_abs(c);
    return s;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [d, c] : coeffs_) {
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Int a = int_abs(c);
        if (d == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += var;
            if (d != 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

bool is_symmetrizable(const LaurentPoly& f) {
    if (f.is_zero()) return false;
    std::vector<Int> d = f.dense();
    std::vector<Int> r(d.rbegin(), d.rend());
    return d == r && (f.min_degree() + f.max_degree()) % 2 == 0;
}

LaurentPoly normalize_alexander(const LaurentPoly& f) {
    if (f.is_zero()) throw NotSymmetrizable("zero polynomial");
    std::vector<Int> d = f.dense();
    std::vector<Int> r(d.rbegin(), d.rend());
    if (d != r) throw NotSymmetrizable("coefficient sequence is not palindromic: " + f.str());
    std::int64_t span = f.min_degree() + f.max_degree();
    if (span % 2 != 0)
        throw NotSymmetrizable("palindromic center is not an integer degree: " + f.str());
    LaurentPoly g = f.shifted(-span / 2);
    Int one = g.eval_at_one();
    if (one == 1) return g;
    if (one == -1) return -g;
    throw NotUnit("f(1) = " + one.get_str() + ", expected a unit");
}

std::vector<Int> canonical_sequence(const LaurentPoly& f) {
    if (f.is_zero()) return {};
    std::vector<Int> d = f.dense();
    std::vector<Int> r(d.rbegin(), d.rend());
    return std::min(d, r);
}

}  // namespace coverhfk
