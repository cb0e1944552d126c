#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "coverhfk/matrix.hpp"

namespace coverhfk {

/// Normalized two-bridge knot parameters. p odd >= 1, gcd(p,q) = 1;
/// q_star is the unique odd residue of q in (0, 2p). For p = 1 (unknot)
/// the epsilon sequence is empty.
struct TwoBridgeKnot {
    std::int64_t p = 1;
    std::int64_t q = 1;       // as given
    std::int64_t q_star = 1;  // odd, 0 < q_star < 2p
    std::vector<int> epsilon; // eps_i = (-1)^floor(i q_star / p), i = 1..p-1
};

/// Validates and normalizes (p, q). Throws InvalidParameters.
TwoBridgeKnot normalize(std::int64_t p, std::int64_t q);

const std::vector<int>& epsilon_sequence(const TwoBridgeKnot& k);

/// The raw Schubert diagram pairing i -> (i - q) mod 2p on {0,...,2p-1}.
std::vector<std::int64_t> schubert_pairing(std::int64_t p, std::int64_t q);

/// Canonical continued fraction of p/q for 0 < q < p: all entries >= 1,
/// last entry >= 2. Throws InvalidParameters.
std::vector<std::int64_t> continued_fraction(std::int64_t p, std::int64_t q);

/// Inverse of continued_fraction: evaluate [c1,...,cn] to (p, q).
/// Throws InvalidParameters on intermediate division by zero.
std::pair<std::int64_t, std::int64_t> from_twists(const std::vector<std::int64_t>& c);

/// Knot signature, with the orientation convention sigma(K(3,1)) = -2 for
/// the right-handed trefoil. Computed as the exact signature of the chain
/// linking matrix built from the even continued fraction of p/q.
std::int64_t signature(const TwoBridgeKnot& k);

/// Even continued fraction p/r = [c1,...,c2n], all entries even, used by the
/// signature matrix. Requires p odd, r even, gcd = 1.
std::vector<std::int64_t> even_continued_fraction(std::int64_t p, std::int64_t r);

/// The symmetric linking matrix tridiag(2f_1,...,2f_2n; 1) of the chain
/// plumbing realizing K, framings f_i = (-1)^{i+1} c_i / 2.
IntMatrix signature_matrix(const TwoBridgeKnot& k);

/// Bidiagonal Seifert matrix of the same chain (diag f_i, superdiag 1);
/// det(V - T V^T) recovers the Alexander polynomial up to unit.
IntMatrix seifert_matrix(const TwoBridgeKnot& k);

}  // namespace coverhfk
