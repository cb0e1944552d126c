#pragma once

#include <cstdint>
#include <vector>

#include "coverhfk/cover.hpp"
#include "coverhfk/cyclotomic.hpp"
#include "coverhfk/group_algebra.hpp"

namespace coverhfk {

/// Turaev torsion of the cover complement, kept as the paper's object:
/// numerator (rho x epsilon)[d2^g] in Z[H_1][T,T^-1] over the fixed
/// denominator (T - 1). Never reduced.
struct TorsionElement {
    FiniteAbelianGroup group;
    GroupAlgebraElem numerator;
    Int h1_order;

    /// p_s(T) for one Spin^c label: the label's Laurent component.
    LaurentPoly p_s(const Residue& label) const { return numerator.component(label); }
};

/// Numerator computed by ring arithmetic: map each Fox matrix entry through
/// (rho x epsilon) into Z[H_1][T,T^-1] and take the determinant there.
/// Sign normalized so the augmentation is +|H_1|. Throws InfiniteH1.
TorsionElement turaev_torsion(const TwoBridgeKnot& k, int m = 2);

/// Lemma check: (T-1) != 0 and the numerator evaluated at T = 1 with all
/// characters trivial is +-|H_1(closed cover)|.
bool acyclicity_check(const TwoBridgeKnot& k, int m);

/// Wada's twisted Alexander polynomial for a rank-1 cyclotomic character:
/// the (phi x epsilon) image of the torsion numerator, over the implicit
/// denominator (T - 1). chars holds one residue per invariant factor.
CycloPoly twisted_alexander_wada(const TwoBridgeKnot& k, int m,
                                 const std::vector<std::int64_t>& chars);

}  // namespace coverhfk
