#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coverhfk/group_algebra.hpp"
#include "coverhfk/integer.hpp"

namespace coverhfk {

/// Coefficients of the n-th cyclotomic polynomial, x^0..x^phi(n), monic.
std::vector<Int> cyclotomic_polynomial(std::int64_t n);

/// Shared reduction data for Z[x]/Phi_n(x): Phi_n and the table of
/// x^e mod Phi_n for e in [0, n).
class CycloRing {
public:
    explicit CycloRing(std::int64_t n);

    std::int64_t conductor() const { return n_; }
    std::size_t degree() const { return phi_.size() - 1; }
    const std::vector<Int>& modulus() const { return phi_; }
    const std::vector<Int>& power(std::int64_t e) const;  // e taken mod n

    /// Reduce an arbitrary-degree polynomial in zeta modulo Phi_n.
    std::vector<Int> reduce(const std::vector<Int>& p) const;
    std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b) const;
    /// zeta -> zeta^{-1} on a reduced representative.
    std::vector<Int> conjugate(const std::vector<Int>& a) const;
    /// Field norm of a reduced representative (product of Galois conjugates).
    Int norm(const std::vector<Int>& a) const;

    bool operator==(const CycloRing& o) const { return n_ == o.n_; }

private:
    std::int64_t n_;
    std::vector<Int> phi_;
    std::vector<std::vector<Int>> powers_;
};

/// Laurent polynomial in T over Z[zeta_n] = Z[x]/Phi_n(x). The value map
/// sends T-degree to a reduced representative of length deg Phi_n.
class CycloPoly {
public:
    explicit CycloPoly(std::shared_ptr<const CycloRing> ring) : ring_(std::move(ring)) {}

    const CycloRing& ring() const { return *ring_; }
    std::shared_ptr<const CycloRing> ring_ptr() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<std::int64_t, std::vector<Int>>& coeffs() const { return coeffs_; }

    /// Add coeff * zeta^e * T^d.
    void add_monomial(const Int& coeff, std::int64_t zeta_exp, std::int64_t degree);
    void add_reduced(const std::vector<Int>& rep, std::int64_t degree);

    CycloPoly operator+(const CycloPoly& o) const;
    CycloPoly operator-(const CycloPoly& o) const;
    CycloPoly operator*(const CycloPoly& o) const;
    bool operator==(const CycloPoly& o) const;

    /// zeta -> zeta^{-1} applied to every coefficient.
    CycloPoly conjugated() const;
    /// Exact quotient by (T - 1); requires eval_at_one() == 0.
    CycloPoly divided_by_T_minus_1() const;
    /// Evaluate T = 1 (sum of the coefficient representatives).
    std::vector<Int> eval_at_one() const;
    /// True if all coefficients are rational integers (zeta-degree 0).
    bool is_integral() const;
    /// The integer Laurent polynomial, valid only if is_integral().
    LaurentPoly integer_part() const;

    std::string str() const;

private:
    void set(std::int64_t degree, std::vector<Int> rep);
    std::shared_ptr<const CycloRing> ring_;
    std::map<std::int64_t, std::vector<Int>> coeffs_;
};

/// Character evaluation: the group element (c_1,...,c_k) of
/// Z_{d_1} x ... x Z_{d_k} maps to zeta_n^{sum_i chars_i c_i (n/d_i)},
/// n = lcm(d_i); T is kept. One residue per invariant factor.
CycloPoly cyclotomic_eval(const GroupAlgebraElem& x, const std::vector<std::int64_t>& chars);

}  // namespace coverhfk
