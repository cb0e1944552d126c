#include "coverhfk/twobridge.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "coverhfk/errors.hpp"

namespace coverhfk {

TwoBridgeKnot normalize(std::int64_t p, std::int64_t q) {
    if (p <= 0 || p % 2 == 0)
        throw InvalidParameters("p must be odd and positive, got p = " + std::to_string(p));
    if (q <= 0)
        throw InvalidParameters("q must be positive (mirror inputs are the caller's job)");
    if (std::gcd(p, q) != 1)
        throw InvalidParameters("gcd(p, q) must be 1, got (" + std::to_string(p) + ", " +
                                std::to_string(q) + ")");
    std::int64_t qbar = q % p;
    if (p > 1 && qbar == 0)
        throw InvalidParameters("q = 0 mod p describes a link, not a knot");

    TwoBridgeKnot k;
    k.p = p;
    k.q = q;
    k.q_star = qbar % 2 == 1 ? qbar : qbar + p;  // p = 1 gives q_star = 1
    k.epsilon.reserve(static_cast<std::size_t>(p - 1));
    for (std::int64_t i = 1; i < p; ++i)
        k.epsilon.push_back((i * k.q_star / p) % 2 == 0 ? 1 : -1);
    return k;
}

const std::vector<int>& epsilon_sequence(const TwoBridgeKnot& k) { return k.epsilon; }

std::vector<std::int64_t> schubert_pairing(std::int64_t p, std::int64_t q) {
    if (std::gcd(p, q) != 1) throw InvalidParameters("gcd(p, q) must be 1");
    std::int64_t m = 2 * p;
    std::vector<std::int64_t> out(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = ((i - q) % m + m) % m;
    return out;
}

std::vector<std::int64_t> continued_fraction(std::int64_t p, std::int64_t q) {
    if (!(0 < q && q < p)) throw InvalidParameters("continued_fraction requires 0 < q < p");
    if (std::gcd(p, q) != 1) throw InvalidParameters("gcd(p, q) must be 1");
    std::vector<std::int64_t> c;
    std::int64_t a = p, b = q;
    while (b != 0) {
        c.push_back(a / b);
        std::int64_t r = a % b;
        a = b;
        b = r;
    }
    return c;
}

std::pair<std::int64_t, std::int64_t> from_twists(const std::vector<std::int64_t>& c) {
    if (c.empty()) throw InvalidParameters("empty continued fraction");
    // Evaluate right to left as an exact fraction num/den.
    std::int64_t num = 1, den = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        // x -> c_i + 1/x
        if (num == 0) throw InvalidParameters("division by zero in continued fraction");
        std::int64_t nnum = *it * num + den;
        den = num;
        num = nnum;
    }
    if (num < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(std::abs(num), std::abs(den));
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::vector<std::int64_t> even_continued_fraction(std::int64_t p, std::int64_t r) {
    auto floor_div = [](std::int64_t a, std::int64_t b) {
        std::int64_t q = a / b;
        if (a % b != 0 && ((a < 0) != (b < 0))) --q;
        return q;
    };
    std::vector<std::int64_t> c;
    std::int64_t x0 = p, x1 = r;
    while (x1 != 0) {
        // Unique even quotient with |remainder| < |x1|; the quotient parity
        // alternates odd/even along the walk, so no tie is possible.
        std::int64_t fd = floor_div(x0, x1);
        std::int64_t qlo = fd % 2 == 0 ? fd : fd - 1;
        std::int64_t q = qlo;
        std::int64_t rem = x0 - q * x1;
        if (std::abs(rem) >= std::abs(x1)) {
            q = qlo + 2;
            rem = x0 - q * x1;
        }
        if (std::abs(rem) >= std::abs(x1))
            throw std::logic_error("no even quotient step; input parity is wrong");
        c.push_back(q);
        x0 = x1;
        x1 = rem;
    }
    if (c.size() % 2 != 0) throw std::logic_error("even continued fraction has odd length");
    return c;
}

static std::vector<std::int64_t> chain_framings(const TwoBridgeKnot& k) {
    if (k.p == 1) return {};
    std::int64_t qbar = k.q_star % k.p;
    std::int64_t q_odd = qbar % 2 == 1 ? qbar : k.p - qbar;  // exactly one is odd
    std::vector<std::int64_t> c = even_continued_fraction(k.p, q_odd - k.p);
    std::vector<std::int64_t> f(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) f[i] = (i % 2 == 0 ? c[i] : -c[i]) / 2;
    return f;
}

IntMatrix signature_matrix(const TwoBridgeKnot& k) {
    std::vector<std::int64_t> f = chain_framings(k);
    IntMatrix m(f.size(), f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        m.at(i, i) = 2 * f[i];
        if (i + 1 < f.size()) {
            m.at(i, i + 1) = 1;
            m.at(i + 1, i) = 1;
        }
    }
    return m;
}

IntMatrix seifert_matrix(const TwoBridgeKnot& k) {
    std::vector<std::int64_t> f = chain_framings(k);
    IntMatrix m(f.size(), f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        m.at(i, i) = f[i];
        if (i + 1 < f.size()) m.at(i, i + 1) = 1;
    }
    return m;
}

std::int64_t signature(const TwoBridgeKnot& k) {
    if (k.p == 1) return 0;
    std::vector<std::int64_t> f = chain_framings(k);
    std::vector<Int> diag(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) diag[i] = 2 * f[i];
    return signature_tridiagonal_unit(diag);
}

}  // namespace coverhfk
