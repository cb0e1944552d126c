#pragma once

#include <cstdint>
#include <vector>

#include "coverhfk/abelian.hpp"
#include "coverhfk/presentation.hpp"
#include "coverhfk/twobridge.hpp"

namespace coverhfk {

/// One summand of a Fox free derivative: sign = exponent sign of the
/// differentiated occurrence, prefix = the group element in front of it.
struct FoxSummand {
    int sign;
    Word prefix;
};

/// Fox free derivative d(rel)/d(gen): d(uv)/dx = du/dx + u dv/dx,
/// dx/dx = 1, d(x^-1)/dx = -x^-1, dy/dx = 0. One summand per occurrence.
std::vector<FoxSummand> fox_derivative(const Word& rel, int gen);

/// <a, b | w a w^-1 b^-1> with w = a^e1 b^e2 a^e3 ... b^e(p-1); meridian b.
/// p = 1 degenerates to <a, b | a b^-1>.
Presentation two_bridge_presentation(const TwoBridgeKnot& k);

/// Smith data of the abelianization. torsion/free coordinates are per
/// generator, in the invariant-factor basis produced by the Smith form.
struct AbelianizeResult {
    FiniteAbelianGroup torsion;
    std::int64_t free_rank = 0;
    std::vector<Residue> torsion_coords;                    // per generator
    std::vector<std::vector<std::int64_t>> free_coords;     // per generator
};

AbelianizeResult abelianize(const Presentation& p, bool kill_meridian);

/// Reidemeister-Schreier rewriting of the kernel of the exponent-sum map
/// onto Z_m, transversal {1, mu, ..., mu^{m-1}}. Tree generators are
/// eliminated; the result has m+1 generators (m lifts of the non-meridian
/// generator plus the surviving meridian power) and m relators.
Presentation lift_presentation(const Presentation& p, int m);

/// The splitting H_1(Y - K) = H_1(Y) x Z of a cover presentation:
/// epsilon is the epimorphism to Z with epsilon(meridian) = +1, rho the
/// projection to H_1(Y) (computed in the Smith basis of the closed
/// manifold, so rho(meridian) = 0 by construction).
struct SplittingMaps {
    std::vector<std::int64_t> epsilon;  // per generator
    std::vector<Residue> rho;           // per generator
    FiniteAbelianGroup h1_torsion;      // = H_1 of the closed cover
    Int h1_order;

    std::int64_t eps_of(const Word& w) const;
    Residue rho_of(const Word& w) const;
};

/// Throws InfiniteH1 when the closed manifold has b_1 > 0.
SplittingMaps splitting_maps(const Presentation& cover);

}  // namespace coverhfk
