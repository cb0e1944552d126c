#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "coverhfk/abelian.hpp"
#include "coverhfk/laurent.hpp"

namespace coverhfk {

/// Exact element of Z[G][T,T^-1] for G a finite abelian group in
/// invariant-factor form. Keys are (group residue tuple, T-degree).
class GroupAlgebraElem {
public:
    using Key = std::pair<Residue, std::int64_t>;

    explicit GroupAlgebraElem(FiniteAbelianGroup g) : group_(std::move(g)) {}

    static GroupAlgebraElem monomial(const FiniteAbelianGroup& g, const Int& coeff,
                                     const Residue& label, std::int64_t degree);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::map<Key, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(const Residue& label, std::int64_t degree, const Int& coeff);

    GroupAlgebraElem operator+(const GroupAlgebraElem& o) const;
    GroupAlgebraElem operator-(const GroupAlgebraElem& o) const;
    GroupAlgebraElem operator*(const GroupAlgebraElem& o) const;
    GroupAlgebraElem operator-() const;
    bool operator==(const GroupAlgebraElem& o) const;

    /// Image under the augmentation G -> 1, T -> 1 (sum of all coefficients).
    Int augmentation() const;

    /// The Laurent polynomial of one group label: sum over degrees d of
    /// coeff(label, d) T^d.
    LaurentPoly component(const Residue& label) const;

    std::string str() const;

private:
    FiniteAbelianGroup group_;
    std::map<Key, Int> coeffs_;
};

}  // namespace coverhfk
