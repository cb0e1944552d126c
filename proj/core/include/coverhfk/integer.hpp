#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coverhfk {

// All ring arithmetic in the project is exact; Int is the only integer type
// that ever holds a computed coefficient or determinant.
using Int = mpz_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int int_sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }

// Exact quotient; the caller guarantees divisibility.
inline Int int_divexact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::int64_t to_i64(const Int& a) {
    if (!a.fits_slong_p())
        throw std::overflow_error("integer does not fit in 64 bits: " + a.get_str());
    return static_cast<std::int64_t>(a.get_si());
}

inline std::string int_str(const Int& a) { return a.get_str(); }

}  // namespace coverhfk
