#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "coverhfk/laurent.hpp"
#include "coverhfk/twobridge.hpp"

namespace coverhfk {

/// One intersection-point generator of the base knot complex: position along
/// the beta curve, Alexander level, local sign, Maslov grading.
struct BaseGenerator {
    int position;
    std::int64_t alexander;
    int sign;
    std::int64_t maslov;
};

/// The p generators of the Schubert-diagram complex. A(k) is the centered
/// epsilon walk, sign(k) = (-1)^k normalized so the signs sum to +1,
/// M(k) = A(k) - sigma/2.
std::vector<BaseGenerator> base_generators(const TwoBridgeKnot& k);

/// Symmetrized Alexander polynomial from the epsilon walk.
LaurentPoly alexander_polynomial(const TwoBridgeKnot& k);

/// Independent route: (trivial rho x epsilon) image of the Fox derivative
/// of the base relator, then symmetrized. Must agree with the walk.
LaurentPoly alexander_polynomial_fox(const TwoBridgeKnot& k);

/// Ranks of the associated graded object, keyed by (alexander, maslov).
struct GradedRanks {
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> ranks;
    std::int64_t total() const;
};

GradedRanks hfk_hat_base(const TwoBridgeKnot& k);

/// Returns |Delta(-1)| and asserts it equals p.
std::int64_t determinant_check(const TwoBridgeKnot& k);

}  // namespace coverhfk
