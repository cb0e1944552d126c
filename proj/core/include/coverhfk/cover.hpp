#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coverhfk/fox.hpp"
#include "coverhfk/laurent.hpp"

namespace coverhfk {

/// One formal summand of the Fox determinant of the lifted presentation:
/// the word read off the chosen permutation term, its Spin^c label
/// rho(word), relative Alexander degree epsilon(word), and sign
/// (permutation sign times Fox signs, globally normalized).
struct CoverGenerator {
    Word word;
    Residue label;
    std::int64_t degree;
    int sign;
};

/// Everything downstream needs from one cover computation.
struct CoverData {
    int m = 2;
    Presentation base;
    Presentation lifted;
    SplittingMaps maps;
    std::vector<CoverGenerator> generators;
};

/// Lift the base presentation, expand the m x m Fox determinant over the
/// non-meridian generators formally, and map every summand by (rho, epsilon).
/// The global sign is normalized so the signs sum to +|H_1|.
/// rotation cyclically rotates the base relator first (a different starting
/// generator on the diagram); labels may shift by a unit, nothing else.
CoverData compute_cover(const TwoBridgeKnot& k, int m = 2, std::size_t rotation = 0);

std::vector<CoverGenerator> cover_generators(const TwoBridgeKnot& k, int m = 2);

/// Per-Spin^c-class aggregate. Levels are centered at 0 when the level
/// multiset is palindromic with integral center; otherwise they are
/// relative to the lexicographically least word of the class.
struct SpincClassSummary {
    Residue label;
    std::int64_t size = 0;
    bool centered = true;
    std::map<std::int64_t, std::int64_t> level_counts;
    std::map<std::int64_t, Int> signed_counts;
    LaurentPoly p_s;
    bool is_central = false;
    Residue conjugate_label;
};

std::vector<SpincClassSummary> spinc_classes(const CoverData& c);
std::vector<SpincClassSummary> spinc_classes(const TwoBridgeKnot& k, int m = 2);

struct CentralIsoResult {
    bool ok = false;
    std::string report;
};

/// Theorem check: the unique self-conjugate class has size p and its
/// centered (level, sign) data equals the base (A, sign) data exactly.
CentralIsoResult central_iso_check(const TwoBridgeKnot& k);

/// Canonical comparison key: the multiset over classes of
/// (size, p_s canonicalized up to T-shift and T -> 1/T), serialized, plus
/// an FNV-1a 64 digest for display. Invariant under relabeling the group by
/// a unit and under conjugation.
struct Fingerprint {
    std::string canonical;
    std::string digest;
    bool operator==(const Fingerprint& o) const { return canonical == o.canonical; }
    bool operator!=(const Fingerprint& o) const { return canonical != o.canonical; }
};

Fingerprint fingerprint(const CoverData& c);
Fingerprint fingerprint(const TwoBridgeKnot& k, int m = 2);

}  // namespace coverhfk
