#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "coverhfk/errors.hpp"
#include "coverhfk/laurent.hpp"
#include "coverhfk/twobridge.hpp"

using namespace coverhfk;

namespace {

// Independent oracle: lattice count over the odd representative in (0, p).
std::int64_t signature_count(const TwoBridgeKnot& k) {
    if (k.p == 1) return 0;
    std::int64_t qbar = k.q_star % k.p;
    std::int64_t q_odd = qbar % 2 == 1 ? qbar : k.p - qbar;
    std::int64_t s = 0;
    for (std::int64_t i = 1; i < k.p; ++i) s += (i * q_odd / k.p) % 2 == 0 ? 1 : -1;
    return -s;
}

// det(V - T V^t) for the bidiagonal Seifert matrix, via the tridiagonal
// three-term recurrence.
LaurentPoly seifert_alexander(const TwoBridgeKnot& k) {
    IntMatrix v = seifert_matrix(k);
    LaurentPoly dm1(Int(1));  // D_0
    if (v.rows() == 0) return dm1;
    LaurentPoly t = LaurentPoly::monomial(Int(1), 1);
    LaurentPoly one(Int(1));
    LaurentPoly prev = dm1;
    LaurentPoly cur = (one - t) * LaurentPoly(v.at(0, 0));  // D_1
    for (std::size_t i = 1; i < v.rows(); ++i) {
        LaurentPoly next = (one - t) * LaurentPoly(v.at(i, i)) * cur + t * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<int> eps_of(std::int64_t p, std::int64_t q) {
    return normalize(p, q).epsilon;
}

}  // namespace

TEST_CASE("normalize examples") {
    CHECK(normalize(15, 4).q_star == 19);
    CHECK(normalize(15, 7).q_star == 7);
    CHECK(normalize(3, 1).q_star == 1);
    CHECK(normalize(1, 1).q_star == 1);
    CHECK(normalize(15, 19).q_star == 19);  // q only matters mod p
    CHECK(normalize(15, 34).q_star == 19);
}

TEST_CASE("normalize rejects bad input") {
    CHECK_THROWS_AS(normalize(4, 1), InvalidParameters);
    CHECK_THROWS_AS(normalize(-3, 1), InvalidParameters);
    CHECK_THROWS_AS(normalize(15, 5), InvalidParameters);
    CHECK_THROWS_AS(normalize(15, 0), InvalidParameters);
    CHECK_THROWS_AS(normalize(3, -1), InvalidParameters);
    CHECK_THROWS_AS(normalize(5, 10), InvalidParameters);
}

TEST_CASE("epsilon sequences") {
    CHECK(eps_of(15, 7) ==
          std::vector<int>{1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1});
    CHECK(eps_of(3, 1) == std::vector<int>{1, 1});
    CHECK(eps_of(15, 4) ==
          std::vector<int>{-1, 1, -1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1});
    CHECK(eps_of(5, 3) == std::vector<int>{1, -1, -1, 1});
    CHECK(eps_of(1, 1).empty());
}

TEST_CASE("schubert pairing") {
    // K(3,1): i -> (i-1) mod 6
    CHECK(schubert_pairing(3, 1) == std::vector<std::int64_t>{5, 0, 1, 2, 3, 4});
    // Degenerate q = 0 is the identity map (links only, rejected upstream).
    CHECK(schubert_pairing(1, 0) == std::vector<std::int64_t>{0, 1});
    CHECK(schubert_pairing(15, 4)[0] == 26);

    for (std::int64_t p = 3; p <= 31; p += 2)
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto m = schubert_pairing(p, q);
            std::vector<int> seen(m.size(), 0);
            for (auto v : m) seen[static_cast<std::size_t>(v)]++;
            for (int c : seen) CHECK(c == 1);
        }
}

TEST_CASE("continued fractions") {
    CHECK(continued_fraction(3, 1) == std::vector<std::int64_t>{3});
    CHECK(continued_fraction(15, 7) == std::vector<std::int64_t>{2, 7});
    CHECK(continued_fraction(15, 4) == std::vector<std::int64_t>{3, 1, 3});
    CHECK(from_twists({3}) == std::pair<std::int64_t, std::int64_t>{3, 1});
    CHECK(from_twists({2, 7}) == std::pair<std::int64_t, std::int64_t>{15, 7});
    CHECK(from_twists({3, 1, 3}) == std::pair<std::int64_t, std::int64_t>{15, 4});
    CHECK_THROWS_AS(continued_fraction(4, 15), InvalidParameters);
    CHECK_THROWS_AS(from_twists({}), InvalidParameters);
}

TEST_CASE("continued fraction round trip p <= 999") {
    for (std::int64_t p = 3; p <= 999; p += 2)
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto cf = continued_fraction(p, q);
            REQUIRE(cf.back() >= 2);
            for (auto c : cf) REQUIRE(c >= 1);
            auto [pp, qq] = from_twists(cf);
            REQUIRE(pp == p);
            REQUIRE(qq == q);
        }
}

TEST_CASE("signature anchors") {
    CHECK(signature(normalize(1, 1)) == 0);
    CHECK(signature(normalize(3, 1)) == -2);   // right-handed trefoil
    CHECK(signature(normalize(5, 3)) == 0);    // figure eight
    CHECK(signature(normalize(5, 1)) == -4);   // T(2,5)
    CHECK(signature(normalize(7, 1)) == -6);   // T(2,7)
    CHECK(signature(normalize(7, 3)) == -2);
    CHECK(signature(normalize(9, 5)) == 0);
    CHECK(signature(normalize(15, 7)) == signature(normalize(15, 4)));
    CHECK(signature(normalize(15, 7)) == -2);
}

TEST_CASE("signature matrix agrees with the lattice count oracle") {
    CHECK(signature(normalize(1, 1)) == signature_count(normalize(1, 1)));
    for (std::int64_t p = 3; p <= 199; p += 2)
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            TwoBridgeKnot k = normalize(p, q);
            std::int64_t s = signature(k);
            REQUIRE(s == signature_count(k));
            REQUIRE(s % 2 == 0);
        }
}

TEST_CASE("seifert matrix reproduces the alexander polynomial") {
    for (std::int64_t p = 3; p <= 199; p += 2)
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            TwoBridgeKnot k = normalize(p, q);
            LaurentPoly d = seifert_alexander(k);
            REQUIRE(!d.is_zero());
            REQUIRE(int_abs(d.eval_at_one()) == 1);
            LaurentPoly n = normalize_alexander(d.eval_at_one() == 1 ? d : -d);
            REQUIRE(int_abs(n.eval(Int(-1))) == p);
        }
}

TEST_CASE("tridiagonal signature agrees with the char-poly route") {
    for (std::int64_t p = 3; p <= 61; p += 2)
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            TwoBridgeKnot k = normalize(p, q);
            IntMatrix m = signature_matrix(k);
            std::vector<Int> diag(m.rows());
            for (std::size_t i = 0; i < m.rows(); ++i) diag[i] = m.at(i, i);
            REQUIRE(signature_tridiagonal_unit(diag) == signature_symmetric(m));
        }
}

TEST_CASE("even continued fraction shape") {
    auto c = even_continued_fraction(3, -2);
    CHECK(c == std::vector<std::int64_t>{-2, 2});
    for (std::int64_t p = 3; p <= 99; p += 2)
        for (std::int64_t q = 1; q < p; q += 2) {
            if (std::gcd(p, q) != 1) continue;
            auto cf = even_continued_fraction(p, q - p);
            REQUIRE(cf.size() % 2 == 0);
            for (auto e : cf) {
                REQUIRE(e % 2 == 0);
                REQUIRE(e != 0);
            }
        }
}
