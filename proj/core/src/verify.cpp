#include "coverhfk/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "coverhfk/cfk_base.hpp"
#include "coverhfk/cover.hpp"
#include "coverhfk/errors.hpp"
#include "coverhfk/torsion.hpp"

namespace coverhfk::verify {

namespace {

struct Local {
    std::map<std::string, std::int64_t> checks;
    std::vector<std::string> failures;
};

std::string knot_id(const TwoBridgeKnot& k) {
    return "K(" + std::to_string(k.p) + "," + std::to_string(k.q) + ")";
}

void fail(Local& L, const TwoBridgeKnot& k, const std::string& what) {
    L.failures.push_back(knot_id(k) + ": " + what);
}

void run_check(Local& L, const char* name) { L.checks[name] += 1; }

LaurentPoly shiftnorm(const LaurentPoly& f) {
    return f.is_zero() ? f : f.shifted(-f.min_degree());
}

// Sum over generators of dR/dg (g - 1) equals R - 1 in the free group ring.
bool fox_identity_holds(const Word& rel, std::size_t ngens) {
    std::map<std::vector<Letter>, Int> lhs;
    auto add = [&](const Word& w, int c) {
        auto it = lhs.find(w.letters());
        if (it == lhs.end())
            lhs.emplace(w.letters(), c);
        else {
            it->second += c;
            if (it->second == 0) lhs.erase(it);
        }
    };
    for (std::size_t g = 0; g < ngens; ++g)
        for (const FoxSummand& s : fox_derivative(rel, static_cast<int>(g))) {
            Word wg = s.prefix * Word::letter(static_cast<int>(g), 1);
            add(wg, s.sign);
            add(s.prefix, -s.sign);
        }
    add(rel, -1);
    add(Word(), +1);
    return lhs.empty();
}

Int resultant_order(const LaurentPoly& alex, int m) {
    std::vector<Int> delta = alex.dense();
    std::vector<Int> xm(static_cast<std::size_t>(m) + 1, Int(0));
    xm[0] = -1;
    xm.back() = 1;
    return int_abs(resultant(xm, delta));
}

void check_base(Local& L, const TwoBridgeKnot& k) {
    LaurentPoly alex = alexander_polynomial(k);

    run_check(L, "alexander_properties");
    if (alex.mirrored() != alex) fail(L, k, "alexander not symmetric");
    if (alex.eval_at_one() != 1) fail(L, k, "alexander(1) != 1");
    if (int_abs(alex.eval(Int(-1))) != k.p) fail(L, k, "|alexander(-1)| != p");
    if (alex.coeff_abs_sum() != k.p) fail(L, k, "sum |coeffs| != p");

    run_check(L, "alexander_two_routes");
    if (alexander_polynomial_fox(k) != alex) fail(L, k, "fox route disagrees with walk route");

    run_check(L, "base_gradings");
    std::vector<BaseGenerator> gens = base_generators(k);
    std::map<std::int64_t, std::int64_t> amult;
    Int sign_sum = 0;
    bool steps_ok = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        amult[gens[i].alexander] += 1;
        sign_sum += gens[i].sign;
        if (i > 0 && std::abs(gens[i].alexander - gens[i - 1].alexander) != 1) steps_ok = false;
        if (i > 0 && gens[i].sign != -gens[i - 1].sign) steps_ok = false;
    }
    for (const auto& [a, n] : amult)
        if (amult.count(-a) == 0 || amult.at(-a) != n) fail(L, k, "A-multiset not symmetric");
    if (sign_sum != 1) fail(L, k, "sign sum != +1");
    if (!steps_ok) fail(L, k, "adjacent generators do not step by one");

    run_check(L, "signature_even");
    std::int64_t sig = signature(k);
    if (sig % 2 != 0) fail(L, k, "signature is odd");
    if (k.p == 1 && sig != 0) fail(L, k, "unknot signature nonzero");

    run_check(L, "determinant_check");
    if (determinant_check(k) != k.p) fail(L, k, "determinant mismatch");

    if (k.p > 1) {
        run_check(L, "cf_roundtrip");
        auto cf = continued_fraction(k.p, k.q_star % k.p);
        auto [pp, qq] = from_twists(cf);
        if (pp != k.p || qq != k.q_star % k.p) fail(L, k, "continued fraction does not round-trip");
        if (cf.back() < 2 && cf.size() > 1) fail(L, k, "continued fraction not canonical");

        run_check(L, "schubert_bijection");
        auto pairing = schubert_pairing(k.p, k.q);
        std::vector<std::int64_t> seen(pairing.size(), 0);
        for (auto v : pairing) seen[static_cast<std::size_t>(v)] += 1;
        for (auto c : seen)
            if (c != 1) fail(L, k, "schubert pairing is not a bijection");
    }

    run_check(L, "epsilon_length");
    if (static_cast<std::int64_t>(k.epsilon.size()) != k.p - 1)
        fail(L, k, "epsilon length != p - 1");

    run_check(L, "fox_identity_base");
    Presentation base = two_bridge_presentation(k);
    if (!fox_identity_holds(base.relators[0], base.ngens())) fail(L, k, "fox identity (base)");

    run_check(L, "fox_summand_count");
    const int a = base.meridian == 0 ? 1 : 0;
    if (static_cast<std::int64_t>(fox_derivative(base.relators[0], a).size()) != k.p)
        fail(L, k, "dR/da does not have p summands");
}

void check_cover(Local& L, const TwoBridgeKnot& k, int m) {
    CoverData c = compute_cover(k, m);

    run_check(L, "fox_identity_lifted");
    for (const Word& r : c.lifted.relators)
        if (!fox_identity_holds(r, c.lifted.ngens())) {
            fail(L, k, "fox identity (lifted)");
            break;
        }

    run_check(L, "splitting_consistency");
    if (c.maps.epsilon[static_cast<std::size_t>(c.lifted.meridian)] != 1)
        fail(L, k, "epsilon(meridian) != 1");

    if (m == 2) {
        run_check(L, "h1_order_is_p");
        if (c.maps.h1_order != k.p) fail(L, k, "|H1| != p for the double cover");

        run_check(L, "cover_count");
        std::int64_t expect = ((k.p + 1) / 2) * ((k.p + 1) / 2) +
                              ((k.p - 1) / 2) * ((k.p - 1) / 2);
        if (static_cast<std::int64_t>(c.generators.size()) != expect)
            fail(L, k, "generator count != ((p+1)/2)^2 + ((p-1)/2)^2");
    }

    std::vector<SpincClassSummary> classes = spinc_classes(c);

    run_check(L, "class_partition");
    std::int64_t total = 0;
    for (const auto& s : classes) total += s.size;
    if (total != static_cast<std::int64_t>(c.generators.size()))
        fail(L, k, "class sizes do not partition the generators");
    if (c.maps.h1_order != static_cast<std::int64_t>(classes.size()))
        fail(L, k, "number of classes != |H1|");

    run_check(L, "class_chi");
    for (const auto& s : classes)
        if (s.p_s.eval_at_one() != 1) {
            fail(L, k, "p_s(1) != +1 for class " + residue_str(s.label));
            break;
        }

    if (m == 2) {
        run_check(L, "unique_self_conjugate");
        int self_conj = 0;
        for (const auto& s : classes)
            if (s.label == s.conjugate_label) ++self_conj;
        if (self_conj != 1) fail(L, k, "self-conjugate class count != 1");

        run_check(L, "central_iso");
        CentralIsoResult r = central_iso_check(k);
        if (!r.ok) fail(L, k, "central iso: " + r.report);

        run_check(L, "conjugation_symmetry");
        std::map<Residue, const SpincClassSummary*> by_label;
        for (const auto& s : classes) by_label[s.label] = &s;
        for (const auto& s : classes) {
            auto it = by_label.find(s.conjugate_label);
            if (it == by_label.end() || it->second->size != s.size) {
                fail(L, k, "conjugate class size mismatch");
                break;
            }
            if (shiftnorm(it->second->p_s) != shiftnorm(s.p_s.mirrored())) {
                fail(L, k, "conjugate class levels not mirrored");
                break;
            }
        }

        run_check(L, "rotation_invariance");
        Fingerprint f0 = fingerprint(c);
        Fingerprint f1 = fingerprint(compute_cover(k, m, 1));
        if (f0 != f1) fail(L, k, "fingerprint changes under base rotation");
    }
}

void check_torsion(Local& L, const TwoBridgeKnot& k, int m) {
    TorsionElement t = turaev_torsion(k, m);
    CoverData c = compute_cover(k, m);

    run_check(L, "torsion_matches_cover");
    GroupAlgebraElem agg(t.group);
    for (const CoverGenerator& g : c.generators) agg.add_term(g.label, g.degree, Int(g.sign));
    if (!(agg == t.numerator)) fail(L, k, "formal expansion and ring determinant disagree");

    run_check(L, "torsion_class_chi");
    for (const Residue& r : t.group.elements())
        if (t.p_s(r).eval_at_one() != 1) {
            fail(L, k, "torsion p_s(1) != +1");
            break;
        }

    if (m == 2) {
        // The central component equals the base polynomial only for the
        // double cover, where the central isomorphism theorem applies.
        run_check(L, "torsion_central_is_alexander");
        LaurentPoly central = t.p_s(t.group.zero());
        try {
            if (normalize_alexander(central) != alexander_polynomial(k))
                fail(L, k, "central torsion component != alexander");
        } catch (const std::exception& e) {
            fail(L, k, std::string("central torsion component not symmetrizable: ") + e.what());
        }
    }

    run_check(L, "acyclicity");
    if (!acyclicity_check(k, m)) fail(L, k, "acyclicity check failed");

    run_check(L, "kitano_m1");
    TorsionElement t1 = turaev_torsion(k, 1);
    try {
        if (normalize_alexander(t1.p_s(t1.group.zero())) != alexander_polynomial(k))
            fail(L, k, "m=1 torsion != alexander");
    } catch (const std::exception& e) {
        fail(L, k, std::string("m=1 torsion not symmetrizable: ") + e.what());
    }

    run_check(L, "cover_order_oracle");
    LaurentPoly alex = alexander_polynomial(k);
    for (int mm : {2, 3}) {
        Int expect = resultant_order(alex, mm);
        Presentation lifted = lift_presentation(two_bridge_presentation(k), mm);
        AbelianizeResult ab = abelianize(lifted, true);
        Int order = ab.free_rank > 0 ? Int(0) : ab.torsion.order();
        if (order != expect) {
            fail(L, k, "cover order mismatch at m = " + std::to_string(mm) + ": smith " +
                           order.get_str() + " vs resultant " + expect.get_str());
        }
    }

    if (!t.group.trivial()) {
        std::vector<std::int64_t> chars(t.group.rank(), 0);
        chars[0] = 1;
        std::vector<std::int64_t> neg = chars;
        neg[0] = t.group.factors[0] - 1;

        run_check(L, "wada_conjugate_chars");
        CycloPoly w1 = twisted_alexander_wada(k, m, chars);
        CycloPoly w2 = twisted_alexander_wada(k, m, neg);
        if (!(w2 == w1.conjugated())) fail(L, k, "wada conjugate characters mismatch");

        run_check(L, "wada_trivial_char");
        std::vector<std::int64_t> zero(t.group.rank(), 0);
        CycloPoly w0 = twisted_alexander_wada(k, m, zero);
        if (!w0.is_integral()) {
            fail(L, k, "trivial character image not integral");
        } else {
            LaurentPoly sum;
            for (const auto& [key, coeff] : t.numerator.coeffs()) sum.add_term(key.second, coeff);
            if (w0.integer_part() != sum) fail(L, k, "trivial character != sum of p_s");
        }

        run_check(L, "wada_product_norm_palindromic");
        CycloPoly prod = w1 * w2;
        if (!(prod.conjugated() == prod)) {
            fail(L, k, "wada product not conjugation invariant");
        } else if (!prod.is_zero()) {
            std::vector<Int> norms;
            std::int64_t lo = prod.coeffs().begin()->first;
            std::int64_t hi = prod.coeffs().rbegin()->first;
            for (std::int64_t d = lo; d <= hi; ++d) {
                auto it = prod.coeffs().find(d);
                norms.push_back(it == prod.coeffs().end()
                                    ? Int(0)
                                    : int_abs(prod.ring().norm(it->second)));
            }
            std::vector<Int> rev(norms.rbegin(), norms.rend());
            if (norms != rev) fail(L, k, "wada product norms not palindromic");
        }
    }
}

}  // namespace

Report run_verification(const Options& opt) {
    std::vector<std::pair<std::int64_t, std::int64_t>> knots;
    knots.push_back({1, 1});
    for (std::int64_t p = 3; p <= opt.max_p; p += 2)
        for (std::int64_t q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) knots.push_back({p, q});

    std::size_t n = knots.size();
    int jobs = std::max(1, opt.jobs);
    std::vector<Local> locals(n);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            TwoBridgeKnot k = normalize(knots[i].first, knots[i].second);
            Local& L = locals[i];
            try {
                check_base(L, k);
                check_cover(L, k, opt.m);
                if (k.p <= 49) check_torsion(L, k, opt.m);
            } catch (const InfiniteH1&) {
                // b_1 > 0 covers are outside the torsion theory; not a failure.
                L.checks["skipped_infinite_h1"] += 1;
            } catch (const std::exception& e) {
                fail(L, k, std::string("exception: ") + e.what());
            }
        }
    };

    if (jobs == 1) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (n + static_cast<std::size_t>(jobs) - 1) / static_cast<std::size_t>(jobs);
        for (int t = 0; t < jobs; ++t) {
            std::size_t b = static_cast<std::size_t>(t) * chunk;
            std::size_t e = std::min(n, b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }

    Report r;
    r.knots = static_cast<std::int64_t>(n);
    for (const Local& L : locals) {
        for (const auto& [name, cnt] : L.checks) r.checks[name] += cnt;
        for (const auto& f : L.failures) r.failures.push_back(f);
    }
    return r;
}

std::string render(const Report& r) {
    std::ostringstream os;
    os << "verified " << r.knots << " knots\n";
    for (const auto& [name, cnt] : r.checks) os << "  " << name << ": " << cnt << "\n";
    if (r.ok()) {
        os << "all checks passed\n";
    } else {
        os << r.failures.size() << " failures:\n";
        for (const auto& f : r.failures) os << "  FAIL " << f << "\n";
    }
    return os.str();
}

}  // namespace coverhfk::verify
