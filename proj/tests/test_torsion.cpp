#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "coverhfk/cfk_base.hpp"
#include "coverhfk/cover.hpp"
#include "coverhfk/torsion.hpp"

using namespace coverhfk;

namespace {

LaurentPoly shiftnorm(const LaurentPoly& f) {
    return f.is_zero() ? f : f.shifted(-f.min_degree());
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    LaurentPoly x = shiftnorm(a), y = shiftnorm(b);
    return x == y || x == shiftnorm(-b);
}

}  // namespace

TEST_CASE("trefoil torsion numerator") {
    TorsionElement t = turaev_torsion(normalize(3, 1), 2);
    CHECK(t.h1_order == 3);
    CHECK(t.numerator.augmentation() == 3);
    // Central component is the alexander polynomial up to the centering unit.
    LaurentPoly central = t.p_s(t.group.zero());
    CHECK(equal_up_to_unit(central, alexander_polynomial(normalize(3, 1))));
    CHECK(normalize_alexander(central) == alexander_polynomial(normalize(3, 1)));
    // Each nontrivial class contributes a single +T^k.
    for (const Residue& r : t.group.elements()) {
        if (t.group.is_zero(r)) continue;
        LaurentPoly p = t.p_s(r);
        CHECK(p.eval_at_one() == 1);
        CHECK(p.coeff_abs_sum() == 1);
    }
}

TEST_CASE("K(15,7) torsion components match the cover class data") {
    TorsionElement t = turaev_torsion(normalize(15, 7), 2);
    CoverData c = compute_cover(normalize(15, 7), 2);

    GroupAlgebraElem agg(t.group);
    for (const CoverGenerator& g : c.generators) agg.add_term(g.label, g.degree, Int(g.sign));
    CHECK(agg == t.numerator);

    // The size-13 classes have p_s = 3/T - 5 + 3T after centering.
    int found = 0;
    for (const auto& s : spinc_classes(c)) {
        if (s.size != 13) continue;
        ++found;
        LaurentPoly want;
        want.add_term(-1, Int(3));
        want.add_term(0, Int(-5));
        want.add_term(1, Int(3));
        CHECK(s.p_s == want);
        CHECK(equal_up_to_unit(t.p_s(s.label), want));
    }
    CHECK(found == 2);
}

TEST_CASE("unknot torsion is trivial") {
    TorsionElement t = turaev_torsion(normalize(1, 1), 2);
    CHECK(t.h1_order == 1);
    LaurentPoly p = t.p_s(t.group.zero());
    CHECK(p.coeff_abs_sum() == 1);
    CHECK(p.eval_at_one() == 1);
}

TEST_CASE("acyclicity checks") {
    CHECK(acyclicity_check(normalize(15, 7), 2));
    CHECK(acyclicity_check(normalize(3, 1), 2));
    CHECK(acyclicity_check(normalize(1, 1), 2));
    CHECK(acyclicity_check(normalize(3, 1), 3));
}

TEST_CASE("m = 1 torsion is the alexander polynomial (Kitano)") {
    for (std::int64_t p = 1; p <= 29; p += 2) {
        for (std::int64_t q = 1; q < (p == 1 ? 2 : p); ++q) {
            if (std::gcd(p, q) != 1) continue;
            TwoBridgeKnot k = normalize(p, q);
            TorsionElement t = turaev_torsion(k, 1);
            REQUIRE(t.h1_order == 1);
            REQUIRE(normalize_alexander(t.p_s(t.group.zero())) == alexander_polynomial(k));
        }
    }
}

TEST_CASE("theorem consistency sweep p <= 49") {
    for (std::int64_t p = 1; p <= 49; p += 2) {
        for (std::int64_t q = 1; q < (p == 1 ? 2 : p); ++q) {
            if (std::gcd(p, q) != 1) continue;
            TwoBridgeKnot k = normalize(p, q);
            TorsionElement t = turaev_torsion(k, 2);
            CoverData c = compute_cover(k, 2);
            GroupAlgebraElem agg(t.group);
            for (const CoverGenerator& g : c.generators)
                agg.add_term(g.label, g.degree, Int(g.sign));
            REQUIRE(agg == t.numerator);
            for (const Residue& r : t.group.elements()) REQUIRE(t.p_s(r).eval_at_one() == 1);
            REQUIRE(normalize_alexander(t.p_s(t.group.zero())) == alexander_polynomial(k));
        }
    }
}

TEST_CASE("twisted alexander polynomials") {
    SUBCASE("trivial character collapses to the sum of p_s") {
        TorsionElement t = turaev_torsion(normalize(15, 7), 2);
        CycloPoly w = twisted_alexander_wada(normalize(15, 7), 2, {0});
        REQUIRE(w.is_integral());
        LaurentPoly sum;
        for (const auto& [key, c] : t.numerator.coeffs()) sum.add_term(key.second, c);
        CHECK(w.integer_part() == sum);
    }
    SUBCASE("conjugate characters give conjugate polynomials (trefoil)") {
        CycloPoly w1 = twisted_alexander_wada(normalize(3, 1), 2, {1});
        CycloPoly w2 = twisted_alexander_wada(normalize(3, 1), 2, {2});
        CHECK(w2 == w1.conjugated());
        // The trefoil's twisted numerator happens to be rational:
        // 1 - 2T + T^2 = (T-1)^2, so the reduced Wada polynomial is T - 1.
        REQUIRE(w1.is_integral());
        LaurentPoly reduced = w1.divided_by_T_minus_1().integer_part();
        LaurentPoly want = LaurentPoly::monomial(Int(1), 1) - LaurentPoly(Int(1));
        CHECK((reduced == want || reduced == -want));
    }
    SUBCASE("direct substitution oracle (trefoil)") {
        // Substitute zeta^rho(g) T^eps(g) into the Fox matrix entries directly
        // and expand the 2x2 determinant in Z[zeta_3][T, 1/T].
        TwoBridgeKnot k = normalize(3, 1);
        CoverData c = compute_cover(k, 2);
        auto ring = std::make_shared<CycloRing>(3);
        auto entry = [&](std::size_t i, int gen) {
            CycloPoly e(ring);
            for (const FoxSummand& s : fox_derivative(c.lifted.relators[i], gen)) {
                Residue r = c.maps.rho_of(s.prefix);
                e.add_monomial(Int(s.sign), r[0], c.maps.eps_of(s.prefix));
            }
            return e;
        };
        std::vector<int> cols;
        for (std::size_t g = 0; g < c.lifted.ngens(); ++g)
            if (static_cast<int>(g) != c.lifted.meridian) cols.push_back(static_cast<int>(g));
        CycloPoly det = entry(0, cols[0]) * entry(1, cols[1]) -
                        entry(0, cols[1]) * entry(1, cols[0]);
        CycloPoly w = twisted_alexander_wada(k, 2, {1});
        // Same up to the global sign normalization of the numerator.
        bool same = det == w;
        CycloPoly neg(ring);
        neg.add_monomial(Int(-1), 0, 0);
        bool opposite = (det * neg) == w;
        CHECK((same || opposite));
        // Conjugation symmetry of the pair.
        CHECK(w.conjugated() == twisted_alexander_wada(k, 2, {2}));
    }
    SUBCASE("K(15,7): the (T-1)-free part at T = 1 has norm dividing a power of 15") {
        CycloPoly w = twisted_alexander_wada(normalize(15, 7), 2, {1});
        // The numerator vanishes at T = 1 for a nontrivial character (the
        // p_s(1) = 1 values sum against the character to zero). For this
        // genus-1 knot it is in fact unit * (T-1)^2 * T^a; strip every
        // (T-1) factor and take the norm of what remains at T = 1.
        std::vector<Int> at_one = w.eval_at_one();
        for (const Int& c : at_one) CHECK(c == 0);
        int strips = 0;
        auto is_zero_vec = [](const std::vector<Int>& v) {
            for (const Int& c : v)
                if (c != 0) return false;
            return true;
        };
        while (is_zero_vec(w.eval_at_one())) {
            w = w.divided_by_T_minus_1();
            ++strips;
            REQUIRE(strips <= 4);
        }
        CHECK(strips == 2);
        Int n = int_abs(w.ring().norm(w.eval_at_one()));
        REQUIRE(n != 0);
        CHECK(n == 1);  // the leftover factor is a unit of Z[zeta_15]
        Int big = 1;
        for (int i = 0; i < 16; ++i) big *= 15;
        CHECK(big % n == 0);
    }
}

TEST_CASE("cover order oracle m in {2,3}") {
    for (std::int64_t p = 1; p <= 49; p += 2) {
        for (std::int64_t q = 1; q < (p == 1 ? 2 : p); ++q) {
            if (std::gcd(p, q) != 1) continue;
            TwoBridgeKnot k = normalize(p, q);
            LaurentPoly alex = alexander_polynomial(k);
            for (int m : {2, 3}) {
                std::vector<Int> delta = alex.dense();
                std::vector<Int> xm(static_cast<std::size_t>(m) + 1, Int(0));
                xm[0] = -1;
                xm.back() = 1;
                Int expect = int_abs(resultant(xm, delta));
                Presentation lifted = lift_presentation(two_bridge_presentation(k), m);
                AbelianizeResult ab = abelianize(lifted, true);
                Int order = ab.free_rank > 0 ? Int(0) : ab.torsion.order();
                REQUIRE(order == expect);
            }
        }
    }
    // Anchors: trefoil gives Z3 at m=2 and Z2+Z2 at m=3.
    AbelianizeResult a2 =
        abelianize(lift_presentation(two_bridge_presentation(normalize(3, 1)), 2), true);
    CHECK(a2.torsion.factors == std::vector<std::int64_t>{3});
    AbelianizeResult a3 =
        abelianize(lift_presentation(two_bridge_presentation(normalize(3, 1)), 3), true);
    CHECK(a3.torsion.factors == std::vector<std::int64_t>{2, 2});
}
