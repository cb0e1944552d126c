#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coverhfk/integer.hpp"

namespace coverhfk {

/// Exact Laurent polynomial over Z in one variable T, stored sparsely as
/// degree -> nonzero coefficient. The empty map is the zero polynomial.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Int constant);
    static LaurentPoly monomial(const Int& coeff, std::int64_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t min_degree() const;  // requires nonzero
    std::int64_t max_degree() const;  // requires nonzero
    Int coeff(std::int64_t degree) const;
    const std::map<std::int64_t, Int>& coeffs() const { return coeffs_; }

    void add_term(std::int64_t degree, const Int& coeff);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }

    LaurentPoly shifted(std::int64_t k) const;  // T^k * this
    LaurentPoly mirrored() const;               // T -> 1/T

    Int eval(const Int& x) const;  // requires x != 0 or min_degree >= 0
    Int eval_at_one() const;

    /// Coefficients from min_degree to max_degree inclusive (empty if zero).
    std::vector<Int> dense() const;
    /// Sum of |coefficients|.
    Int coeff_abs_sum() const;

    std::string str(const std::string& var = "T") const;

private:
    std::map<std::int64_t, Int> coeffs_;
};

/// Symmetrization convention for Alexander polynomials: returns the unit
/// multiple +-T^k f with f(1/T) = f(T) and f(1) = +1.
/// Throws NotSymmetrizable / NotUnit.
LaurentPoly normalize_alexander(const LaurentPoly& f);

/// True if some unit multiple of f is symmetric under T -> 1/T.
bool is_symmetrizable(const LaurentPoly& f);

/// Shift to min degree 0, then take the lexicographically smaller of the
/// dense coefficient sequence and its reverse. Canonical under the ambiguity
/// "up to T-shift and T -> 1/T"; used by fingerprints.
std::vector<Int> canonical_sequence(const LaurentPoly& f);

}  // namespace coverhfk
