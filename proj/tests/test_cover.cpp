#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "coverhfk/cfk_base.hpp"
#include "coverhfk/cover.hpp"

using namespace coverhfk;

namespace {

// Class sizes keyed by label residue, for cyclic H1.
std::map<std::int64_t, std::int64_t> sizes_by_label(const std::vector<SpincClassSummary>& cs) {
    std::map<std::int64_t, std::int64_t> m;
    for (const auto& s : cs) m[s.label.empty() ? 0 : s.label[0]] = s.size;
    return m;
}

// Does some unit u of Z_n match our sizes to the published column sizes
// (want[k] = size at s_{+-k}, conjugation-symmetric)?
bool matches_up_to_unit(const std::map<std::int64_t, std::int64_t>& ours,
                        const std::vector<std::int64_t>& want, std::int64_t n) {
    for (std::int64_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        bool ok = true;
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(want.size()) && ok; ++k) {
            auto it = ours.find(u * k % n);
            if (it == ours.end() || it->second != want[static_cast<std::size_t>(k)]) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("trefoil double cover: 5 generators in classes 3 + 1 + 1") {
    CoverData c = compute_cover(normalize(3, 1), 2);
    CHECK(c.generators.size() == 5);
    auto classes = spinc_classes(c);
    REQUIRE(classes.size() == 3);
    auto sizes = sizes_by_label(classes);
    CHECK(sizes[0] == 3);
    CHECK(sizes[1] == 1);
    CHECK(sizes[2] == 1);

    for (const auto& s : classes) CHECK(s.p_s.eval_at_one() == 1);

    // Central class is the trefoil alexander polynomial on the nose.
    for (const auto& s : classes)
        if (s.is_central) {
            CHECK(s.p_s.coeff(-1) == 1);
            CHECK(s.p_s.coeff(0) == -1);
            CHECK(s.p_s.coeff(1) == 1);
        }
}

TEST_CASE("K(15,7) double cover reproduces the published class sizes") {
    CoverData c = compute_cover(normalize(15, 7), 2);
    CHECK(c.generators.size() == 113);  // 8^2 + 7^2
    auto classes = spinc_classes(c);
    REQUIRE(classes.size() == 15);
    // s_0 .. s_{+-7} column sizes, with the corrected 13 in the s_{+-2} slot.
    std::vector<std::int64_t> want = {15, 1, 13, 3, 11, 5, 9, 7};
    CHECK(matches_up_to_unit(sizes_by_label(classes), want, 15));
}

TEST_CASE("K(15,4) double cover reproduces the published class sizes") {
    CoverData c = compute_cover(normalize(15, 4), 2);
    CHECK(c.generators.size() == 113);
    auto classes = spinc_classes(c);
    std::vector<std::int64_t> want = {15, 7, 1, 9, 13, 5, 3, 11};
    CHECK(matches_up_to_unit(sizes_by_label(classes), want, 15));
}

TEST_CASE("K(15,7) size-13 classes carry levels (3,7,3) with signed (3,-5,3)") {
    auto classes = spinc_classes(normalize(15, 7), 2);
    int found = 0;
    for (const auto& s : classes) {
        if (s.size != 13) continue;
        ++found;
        CHECK(s.centered);
        REQUIRE(s.level_counts.size() == 3);
        CHECK(s.level_counts.at(-1) == 3);
        CHECK(s.level_counts.at(0) == 7);
        CHECK(s.level_counts.at(1) == 3);
        CHECK(s.signed_counts.at(-1) == 3);
        CHECK(s.signed_counts.at(0) == -5);
        CHECK(s.signed_counts.at(1) == 3);
    }
    CHECK(found == 2);  // the conjugate pair
}

TEST_CASE("central iso holds for the examples") {
    CHECK(central_iso_check(normalize(15, 7)).ok);
    CHECK(central_iso_check(normalize(15, 4)).ok);
    CHECK(central_iso_check(normalize(1, 1)).ok);
    CHECK(central_iso_check(normalize(3, 1)).ok);
    CHECK(central_iso_check(normalize(5, 3)).ok);
}

TEST_CASE("cover sweep p <= 49: counts, partition, chi, conjugation") {
    for (std::int64_t p = 1; p <= 49; p += 2) {
        for (std::int64_t q = 1; q < (p == 1 ? 2 : p); ++q) {
            if (std::gcd(p, q) != 1) continue;
            TwoBridgeKnot k = normalize(p, q);
            CoverData c = compute_cover(k, 2);
            std::int64_t expect =
                ((p + 1) / 2) * ((p + 1) / 2) + ((p - 1) / 2) * ((p - 1) / 2);
            REQUIRE(static_cast<std::int64_t>(c.generators.size()) == expect);
            REQUIRE(c.maps.h1_order == p);

            auto classes = spinc_classes(c);
            REQUIRE(static_cast<std::int64_t>(classes.size()) == p);
            std::int64_t total = 0;
            int self_conj = 0;
            std::map<Residue, const SpincClassSummary*> by_label;
            for (const auto& s : classes) by_label[s.label] = &s;
            for (const auto& s : classes) {
                total += s.size;
                if (s.label == s.conjugate_label) {
                    ++self_conj;
                    REQUIRE(s.size == p);
                }
                REQUIRE(s.p_s.eval_at_one() == 1);
                const auto* conj = by_label.at(s.conjugate_label);
                REQUIRE(conj->size == s.size);
            }
            REQUIRE(total == expect);
            REQUIRE(self_conj == 1);
            REQUIRE(central_iso_check(k).ok);
        }
    }
}

TEST_CASE("fingerprints separate the famous pair and are stable") {
    Fingerprint f157 = fingerprint(normalize(15, 7), 2);
    Fingerprint f154 = fingerprint(normalize(15, 4), 2);
    CHECK(f157 != f154);
    CHECK(f157 == fingerprint(normalize(15, 7), 2));

    // Base-point rotation relabels classes by a unit; the fingerprint and the
    // size multiset are unchanged.
    TwoBridgeKnot tre = normalize(3, 1);
    Fingerprint f0 = fingerprint(compute_cover(tre, 2, 0));
    for (std::size_t r = 1; r <= 5; ++r) CHECK(fingerprint(compute_cover(tre, 2, r)) == f0);

    TwoBridgeKnot k157 = normalize(15, 7);
    CHECK(fingerprint(compute_cover(k157, 2, 3)) == f157);
}

TEST_CASE("labels rotate by a unit under base rotation") {
    TwoBridgeKnot k = normalize(15, 7);
    auto s0 = sizes_by_label(spinc_classes(compute_cover(k, 2, 0)));
    auto s1 = sizes_by_label(spinc_classes(compute_cover(k, 2, 2)));
    bool some_unit = false;
    for (std::int64_t u = 1; u < 15 && !some_unit; ++u) {
        if (std::gcd<std::int64_t>(u, 15) != 1) continue;
        bool ok = true;
        for (const auto& [l, n] : s0)
            if (s1.at(u * l % 15) != n) {
                ok = false;
                break;
            }
        some_unit = ok;
    }
    CHECK(some_unit);
}

TEST_CASE("m = 3 cover of the trefoil") {
    CoverData c = compute_cover(normalize(3, 1), 3);
    CHECK(c.maps.h1_torsion.factors == std::vector<std::int64_t>{2, 2});
    CHECK(c.generators.size() == 6);
    auto classes = spinc_classes(c);
    REQUIRE(classes.size() == 4);
    std::int64_t central_size = 0;
    for (const auto& s : classes) {
        CHECK(s.p_s.eval_at_one() == 1);
        if (s.is_central) central_size = s.size;
    }
    CHECK(central_size == 3);
}

TEST_CASE("generator degrees within a class differ like filtration levels") {
    // Spot check: the central class of K(15,7) spans three adjacent levels.
    CoverData c = compute_cover(normalize(15, 7), 2);
    std::set<std::int64_t> degs;
    for (const auto& g : c.generators)
        if (c.maps.h1_torsion.is_zero(g.label)) degs.insert(g.degree);
    CHECK(degs.size() == 3);
    CHECK(*degs.rbegin() - *degs.begin() == 2);
}
