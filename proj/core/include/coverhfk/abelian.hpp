#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coverhfk/integer.hpp"

namespace coverhfk {

/// Residue tuple against the invariant-factor basis of a finite abelian group.
using Residue = std::vector<std::int64_t>;

/// Z_{d_1} x ... x Z_{d_k} with d_1 | d_2 | ... | d_k, all d_i >= 2.
/// The empty list is the trivial group.
struct FiniteAbelianGroup {
    std::vector<std::int64_t> factors;

    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<std::int64_t> f);

    std::size_t rank() const { return factors.size(); }
    bool trivial() const { return factors.empty(); }
    Int order() const;

    Residue zero() const { return Residue(factors.size(), 0); }
    Residue reduce(const Residue& r) const;
    Residue add(const Residue& a, const Residue& b) const;
    Residue neg(const Residue& a) const;
    Residue scale(std::int64_t k, const Residue& a) const;
    bool is_zero(const Residue& a) const;

    /// All group elements in lexicographic residue order.
    std::vector<Residue> elements() const;

    /// Units of the group acting coordinatewise are not generally
    /// automorphisms; for the cyclic case (rank 1) they are, and that is the
    /// only case where table matching up to unit is required.
    std::vector<std::int64_t> cyclic_units() const;

    bool operator==(const FiniteAbelianGroup& o) const { return factors == o.factors; }
    std::string str() const;
};

std::string residue_str(const Residue& r);

}  // namespace coverhfk
