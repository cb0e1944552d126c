#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>

#include "coverhfk/cfk_base.hpp"
#include "coverhfk/errors.hpp"
#include "coverhfk/fox.hpp"

using namespace coverhfk;

namespace {

Word from_string(const std::string& s) {
    Word w;
    for (char c : s) {
        if (c >= 'a' && c <= 'z')
            w.push(c - 'a', 1);
        else
            w.push(c - 'A', -1);
    }
    return w;
}

// Free-group-ring check of sum_g dR/dg (g - 1) = R - 1.
bool fox_identity(const Word& rel, std::size_t ngens) {
    std::map<std::vector<Letter>, long> acc;
    auto add = [&](const Word& w, long c) {
        acc[w.letters()] += c;
        if (acc[w.letters()] == 0) acc.erase(w.letters());
    };
    for (std::size_t g = 0; g < ngens; ++g)
        for (const FoxSummand& s : fox_derivative(rel, static_cast<int>(g))) {
            add(s.prefix * Word::letter(static_cast<int>(g), 1), s.sign);
            add(s.prefix, -s.sign);
        }
    add(rel, -1);
    add(Word(), 1);
    return acc.empty();
}

}  // namespace

TEST_CASE("word reduction and printing") {
    Word w = from_string("abaBAB");
    CHECK(w.size() == 6);
    CHECK(w.str() == "abaBAB");
    CHECK((w * w.inverse()).empty());
    CHECK(from_string("aA").empty());
    CHECK(from_string("abBA").empty());
    CHECK(from_string("abBc").str() == "ac");
    CHECK(w.exponent_sum(0) == 1);
    CHECK(w.exponent_sum(1) == -1);
    CHECK(from_string("aab").exponent_vector(2) == std::vector<std::int64_t>{2, 1});
}

TEST_CASE("two-bridge presentations") {
    SUBCASE("trefoil relator is w a w^-1 b^-1") {
        Presentation p = two_bridge_presentation(normalize(3, 1));
        REQUIRE(p.relators.size() == 1);
        CHECK(p.relators[0].str() == "abaBAB");
        CHECK(p.meridian == 1);
        CHECK(p.gens.size() == 2);
    }
    SUBCASE("unknot degenerate presentation") {
        Presentation p = two_bridge_presentation(normalize(1, 1));
        CHECK(p.relators[0].str() == "aB");
    }
    SUBCASE("K(5,3) word") {
        // eps = (+,-,-,+): w = a b^-1 a^-1 b
        Presentation p = two_bridge_presentation(normalize(5, 3));
        CHECK(p.relators[0].str() == from_string("aBAb" "a" "BabA" "B").str());
    }
}

TEST_CASE("fox derivative rules") {
    SUBCASE("leading letter") {
        auto d = fox_derivative(from_string("ab"), 0);
        REQUIRE(d.size() == 1);
        CHECK(d[0].sign == 1);
        CHECK(d[0].prefix.empty());
    }
    SUBCASE("inverse letter") {
        auto d = fox_derivative(from_string("A"), 0);
        REQUIRE(d.size() == 1);
        CHECK(d[0].sign == -1);
        CHECK(d[0].prefix.str() == "A");
    }
    SUBCASE("no occurrences") {
        CHECK(fox_derivative(from_string("bbb"), 0).empty());
    }
    SUBCASE("trefoil relator by a") {
        auto d = fox_derivative(from_string("abaBAB"), 0);
        REQUIRE(d.size() == 3);
        CHECK(d[0].sign == 1);
        CHECK(d[0].prefix.str() == "");
        CHECK(d[1].sign == 1);
        CHECK(d[1].prefix.str() == "ab");
        CHECK(d[2].sign == -1);
        CHECK(d[2].prefix.str() == "abaBA");
    }
}

TEST_CASE("fox fundamental identity on constructed presentations") {
    for (std::int64_t p = 1; p <= 49; p += 2)
        for (std::int64_t q = 1; q <= (p == 1 ? 1 : p - 1); ++q) {
            if (std::gcd(p, q) != 1 || (p > 1 && q >= p)) continue;
            Presentation base = two_bridge_presentation(normalize(p, q));
            REQUIRE(fox_identity(base.relators[0], base.ngens()));
            for (int m : {2, 3}) {
                Presentation lifted = lift_presentation(base, m);
                for (const Word& r : lifted.relators)
                    REQUIRE(fox_identity(r, lifted.ngens()));
            }
        }
}

TEST_CASE("abelianize examples") {
    SUBCASE("trefoil complement is Z") {
        AbelianizeResult a = abelianize(two_bridge_presentation(normalize(3, 1)), false);
        CHECK(a.free_rank == 1);
        CHECK(a.torsion.trivial());
    }
    SUBCASE("trefoil double cover closed is Z3") {
        Presentation l = lift_presentation(two_bridge_presentation(normalize(3, 1)), 2);
        AbelianizeResult a = abelianize(l, true);
        CHECK(a.free_rank == 0);
        CHECK(a.torsion.factors == std::vector<std::int64_t>{3});
    }
    SUBCASE("K(15,7) double cover complement is Z + Z15") {
        Presentation l = lift_presentation(two_bridge_presentation(normalize(15, 7)), 2);
        AbelianizeResult a = abelianize(l, false);
        CHECK(a.free_rank == 1);
        CHECK(a.torsion.factors == std::vector<std::int64_t>{15});
    }
    SUBCASE("trefoil triple cover closed is Z2 + Z2") {
        Presentation l = lift_presentation(two_bridge_presentation(normalize(3, 1)), 3);
        AbelianizeResult a = abelianize(l, true);
        CHECK(a.free_rank == 0);
        CHECK(a.torsion.factors == std::vector<std::int64_t>{2, 2});
    }
}

TEST_CASE("lift_presentation structure") {
    Presentation base = two_bridge_presentation(normalize(3, 1));
    SUBCASE("m = 1 is the identity") {
        Presentation l = lift_presentation(base, 1);
        CHECK(l.relators[0] == base.relators[0]);
        CHECK(l.ngens() == 2);
    }
    SUBCASE("m = 2 gives 3 generators, 2 relators") {
        Presentation l = lift_presentation(base, 2);
        CHECK(l.ngens() == 3);
        CHECK(l.relators.size() == 2);
        CHECK(l.meridian == 2);
    }
    SUBCASE("m = 3 gives 4 generators, 3 relators") {
        Presentation l = lift_presentation(base, 3);
        CHECK(l.ngens() == 4);
        CHECK(l.relators.size() == 3);
    }
    CHECK_THROWS_AS(lift_presentation(base, 0), InvalidParameters);
}

TEST_CASE("splitting maps") {
    SUBCASE("base presentation: both generators are meridians") {
        Presentation base = two_bridge_presentation(normalize(3, 1));
        SplittingMaps s = splitting_maps(base);
        CHECK(s.epsilon == std::vector<std::int64_t>{1, 1});
        CHECK(s.h1_torsion.trivial());
    }
    SUBCASE("trefoil double cover: non-meridian rho values are opposite") {
        Presentation l = lift_presentation(two_bridge_presentation(normalize(3, 1)), 2);
        SplittingMaps s = splitting_maps(l);
        CHECK(s.h1_torsion.factors == std::vector<std::int64_t>{3});
        CHECK(s.epsilon[static_cast<std::size_t>(l.meridian)] == 1);
        Residue r0 = s.rho[0], r1 = s.rho[1];
        CHECK(s.h1_torsion.add(r0, r1) == s.h1_torsion.zero());
        CHECK(!s.h1_torsion.is_zero(r0));
        CHECK(s.h1_torsion.is_zero(s.rho[static_cast<std::size_t>(l.meridian)]));
    }
    SUBCASE("K(15,7) double cover: epsilon and rho kill all relators") {
        Presentation l = lift_presentation(two_bridge_presentation(normalize(15, 7)), 2);
        SplittingMaps s = splitting_maps(l);
        CHECK(s.h1_torsion.factors == std::vector<std::int64_t>{15});
        for (const Word& r : l.relators) {
            CHECK(s.eps_of(r) == 0);
            CHECK(s.h1_torsion.is_zero(s.rho_of(r)));
        }
    }
}

TEST_CASE("base fox derivative has p summands") {
    for (std::int64_t p = 3; p <= 99; p += 2) {
        TwoBridgeKnot k = normalize(p, p - 2);
        Presentation base = two_bridge_presentation(k);
        CHECK(fox_derivative(base.relators[0], 0).size() == static_cast<std::size_t>(p));
    }
}

TEST_CASE("presentation text format") {
    Presentation p = two_bridge_presentation(normalize(3, 1));
    std::string t = p.text();
    CHECK(t.find("abaBAB") != std::string::npos);
    CHECK(t.find("meridian=b") != std::string::npos);
}
