#include "coverhfk/cfk_base.hpp"

#include <algorithm>
#include <stdexcept>

#include "coverhfk/errors.hpp"
#include "coverhfk/fox.hpp"

namespace coverhfk {

std::vector<BaseGenerator> base_generators(const TwoBridgeKnot& k) {
    std::size_t n = static_cast<std::size_t>(k.p);
    std::vector<std::int64_t> mu(n, 0);
    for (std::size_t i = 1; i < n; ++i) mu[i] = mu[i - 1] + k.epsilon[i - 1];
    std::int64_t lo = *std::min_element(mu.begin(), mu.end());
    std::int64_t hi = *std::max_element(mu.begin(), mu.end());
    if ((lo + hi) % 2 != 0)
        throw AsymmetricGrading("epsilon walk cannot be centered integrally");
    std::int64_t center = (lo + hi) / 2;

    int flip = n % 2 == 1 ? 1 : -1;  // sum of (-1)^k over k < p; p odd gives +1
    std::int64_t sigma = signature(k);
    std::vector<BaseGenerator> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t a = mu[i] - center;
        int s = (i % 2 == 0 ? 1 : -1) * flip;
        out.push_back({static_cast<int>(i), a, s, a - sigma / 2});
    }
    return out;
}

LaurentPoly alexander_polynomial(const TwoBridgeKnot& k) {
    LaurentPoly f;
    for (const BaseGenerator& g : base_generators(k)) f.add_term(g.alexander, Int(g.sign));
    return normalize_alexander(f);
}

LaurentPoly alexander_polynomial_fox(const TwoBridgeKnot& k) {
    Presentation p = two_bridge_presentation(k);
    const int a = p.meridian == 0 ? 1 : 0;
    LaurentPoly f;
    // Both generators are meridians, so epsilon is the total exponent sum.
    for (const FoxSummand& s : fox_derivative(p.relators[0], a)) {
        std::int64_t e = 0;
        for (const Letter& l : s.prefix.letters()) e += l.exp;
        f.add_term(e, Int(s.sign));
    }
    return normalize_alexander(f);
}

std::int64_t GradedRanks::total() const {
    std::int64_t t = 0;
    for (const auto& [k, r] : ranks) t += r;
    return t;
}

GradedRanks hfk_hat_base(const TwoBridgeKnot& k) {
    GradedRanks g;
    for (const BaseGenerator& b : base_generators(k)) g.ranks[{b.alexander, b.maslov}] += 1;
    return g;
}

std::int64_t determinant_check(const TwoBridgeKnot& k) {
    Int d = int_abs(alexander_polynomial(k).eval(Int(-1)));
    if (d != k.p)
        throw std::logic_error("determinant " + d.get_str() + " != p = " + std::to_string(k.p));
    return to_i64(d);
}

}  // namespace coverhfk
