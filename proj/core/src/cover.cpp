#include "coverhfk/cover.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "coverhfk/cfk_base.hpp"
#include "coverhfk/errors.hpp"

namespace coverhfk {

namespace {

struct MappedSummand {
    int sign;
    std::int64_t eps;
    Residue rho;
    Word prefix;
};

// Fox derivative entries of the m x m matrix with (rho, eps) of every
// prefix precomputed in one scan per relator.
std::vector<std::vector<std::vector<MappedSummand>>> fox_matrix(const Presentation& lifted,
                                                                const SplittingMaps& maps) {
    std::size_t m = lifted.relators.size();
    std::vector<int> cols;  // non-meridian generators
    for (std::size_t g = 0; g < lifted.ngens(); ++g)
        if (static_cast<int>(g) != lifted.meridian) cols.push_back(static_cast<int>(g));
    if (cols.size() != m) throw std::logic_error("Fox matrix is not square");

    std::vector<std::vector<std::vector<MappedSummand>>> f(
        m, std::vector<std::vector<MappedSummand>>(m));
    for (std::size_t i = 0; i < m; ++i) {
        const Word& r = lifted.relators[i];
        Word prefix;
        std::int64_t eps = 0;
        Residue rho = maps.h1_torsion.zero();
        for (const Letter& l : r.letters()) {
            std::size_t g = static_cast<std::size_t>(l.gen);
            const Residue& rg = maps.rho[g];
            if (static_cast<int>(g) != lifted.meridian) {
                std::size_t j =
                    static_cast<std::size_t>(std::find(cols.begin(), cols.end(), l.gen) -
                                             cols.begin());
                if (l.exp > 0) {
                    f[i][j].push_back({+1, eps, rho, prefix});
                } else {
                    Word q = prefix;
                    q.push(l.gen, -1);
                    f[i][j].push_back({-1, eps - maps.epsilon[g],
                                       maps.h1_torsion.add(rho, maps.h1_torsion.neg(rg)), q});
                }
            }
            if (l.exp > 0) {
                eps += maps.epsilon[g];
                rho = maps.h1_torsion.add(rho, rg);
            } else {
                eps -= maps.epsilon[g];
                rho = maps.h1_torsion.add(rho, maps.h1_torsion.neg(rg));
            }
            prefix.push(l);
        }
    }
    return f;
}

void expand_term(const std::vector<std::vector<std::vector<MappedSummand>>>& f,
                 const std::vector<std::size_t>& perm, int perm_sign,
                 const FiniteAbelianGroup& g, std::vector<CoverGenerator>& out) {
    std::size_t m = perm.size();
    std::vector<std::size_t> idx(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (f[i][perm[i]].empty()) return;
    while (true) {
        CoverGenerator cg;
        cg.sign = perm_sign;
        cg.degree = 0;
        cg.label = g.zero();
        Word w;
        for (std::size_t i = 0; i < m; ++i) {
            const MappedSummand& s = f[i][perm[i]][idx[i]];
            cg.sign *= s.sign;
            cg.degree += s.eps;
            cg.label = g.add(cg.label, s.rho);
            w = w * s.prefix;
        }
        cg.word = std::move(w);
        out.push_back(std::move(cg));
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (++idx[i] < f[i][perm[i]].size()) break;
            idx[i] = 0;
            if (i == 0) return;
        }
    }
}

}  // namespace

CoverData compute_cover(const TwoBridgeKnot& k, int m, std::size_t rotation) {
    CoverData c;
    c.m = m;
    c.base = two_bridge_presentation(k);
    if (rotation != 0) c.base.relators[0] = c.base.relators[0].rotated(rotation);
    c.lifted = lift_presentation(c.base, m);
    c.maps = splitting_maps(c.lifted);

    auto f = fox_matrix(c.lifted, c.maps);
    std::size_t n = f.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // Expand over all permutations; parity tracked from the identity.
    std::vector<std::size_t> p = perm;
    do {
        int sign = 1;
        std::vector<std::size_t> q = p;
        for (std::size_t i = 0; i < n; ++i)
            while (q[i] != i) {
                std::swap(q[i], q[q[i]]);
                sign = -sign;
            }
        expand_term(f, p, sign, c.maps.h1_torsion, c.generators);
    } while (std::next_permutation(p.begin(), p.end()));

    Int total = 0;
    for (const CoverGenerator& g : c.generators) total += g.sign;
    if (int_abs(total) != c.maps.h1_order)
        throw std::logic_error("determinant sign sum " + total.get_str() +
                               " does not match |H_1| = " + c.maps.h1_order.get_str());
    if (total < 0)
        for (CoverGenerator& g : c.generators) g.sign = -g.sign;

    std::sort(c.generators.begin(), c.generators.end(),
              [](const CoverGenerator& x, const CoverGenerator& y) {
                  if (x.label != y.label) return x.label < y.label;
                  if (x.degree != y.degree) return x.degree < y.degree;
                  if (x.word < y.word) return true;
                  if (y.word < x.word) return false;
                  return x.sign < y.sign;
              });
    return c;
}

std::vector<CoverGenerator> cover_generators(const TwoBridgeKnot& k, int m) {
    return compute_cover(k, m).generators;
}

std::vector<SpincClassSummary> spinc_classes(const CoverData& c) {
    const FiniteAbelianGroup& g = c.maps.h1_torsion;
    std::map<Residue, std::vector<const CoverGenerator*>> classes;
    for (const CoverGenerator& cg : c.generators) classes[cg.label].push_back(&cg);

    std::vector<SpincClassSummary> out;
    for (const auto& [label, gens] : classes) {
        SpincClassSummary s;
        s.label = label;
        s.size = static_cast<std::int64_t>(gens.size());
        s.is_central = g.is_zero(label);
        s.conjugate_label = g.neg(label);

        std::vector<std::int64_t> degs;
        degs.reserve(gens.size());
        for (const CoverGenerator* cg : gens) degs.push_back(cg->degree);
        std::sort(degs.begin(), degs.end());
        std::int64_t span = degs.front() + degs.back();
        bool palindromic = true;
        for (std::size_t i = 0; i < degs.size(); ++i)
            if (degs[i] + degs[degs.size() - 1 - i] != span) {
                palindromic = false;
                break;
            }
        std::int64_t shift;
        if (palindromic && span % 2 == 0) {
            s.centered = true;
            shift = span / 2;
        } else {
            s.centered = false;
            const CoverGenerator* anchor = gens.front();
            for (const CoverGenerator* cg : gens)
                if (cg->word < anchor->word) anchor = cg;
            shift = anchor->degree;
        }
        for (const CoverGenerator* cg : gens) {
            std::int64_t level = cg->degree - shift;
            s.level_counts[level] += 1;
            s.signed_counts[level] += cg->sign;
            s.p_s.add_term(level, Int(cg->sign));
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<SpincClassSummary> spinc_classes(const TwoBridgeKnot& k, int m) {
    return spinc_classes(compute_cover(k, m));
}

CentralIsoResult central_iso_check(const TwoBridgeKnot& k) {
    CoverData c = compute_cover(k, 2);
    std::vector<SpincClassSummary> classes = spinc_classes(c);

    CentralIsoResult r;
    const SpincClassSummary* central = nullptr;
    int self_conjugate = 0;
    for (const SpincClassSummary& s : classes)
        if (s.label == s.conjugate_label) {
            ++self_conjugate;
            central = &s;
        }
    if (self_conjugate != 1) {
        r.report = "expected a unique self-conjugate class, found " +
                   std::to_string(self_conjugate);
        return r;
    }
    if (central->size != k.p) {
        r.report = "central class size " + std::to_string(central->size) +
                   " != p = " + std::to_string(k.p);
        return r;
    }

    std::map<std::pair<std::int64_t, int>, std::int64_t> base_data, cover_data;
    for (const BaseGenerator& b : base_generators(k)) base_data[{b.alexander, b.sign}] += 1;
    for (const CoverGenerator& cg : c.generators) {
        if (cg.label != central->label) continue;
        // Central levels recentered exactly like the class summary.
        std::int64_t level = cg.degree;
        cover_data[{level, cg.sign}] += 1;
    }
    // Shift cover levels by the class centering.
    std::map<std::pair<std::int64_t, int>, std::int64_t> shifted;
    std::int64_t lo = cover_data.begin()->first.first;
    std::int64_t hi = cover_data.rbegin()->first.first;
    if ((lo + hi) % 2 != 0) {
        r.report = "central class cannot be centered integrally";
        return r;
    }
    for (const auto& [key, n] : cover_data) shifted[{key.first - (lo + hi) / 2, key.second}] = n;

    if (shifted != base_data) {
        r.report = "central class data differs from base:";
        for (const auto& [key, n] : base_data)
            r.report += " base(A=" + std::to_string(key.first) +
                        ",s=" + std::to_string(key.second) + ")=" + std::to_string(n);
        for (const auto& [key, n] : shifted)
            r.report += " cover(A=" + std::to_string(key.first) +
                        ",s=" + std::to_string(key.second) + ")=" + std::to_string(n);
        return r;
    }
    r.ok = true;
    return r;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

Fingerprint fingerprint(const CoverData& c) {
    std::vector<std::string> keys;
    for (const SpincClassSummary& s : spinc_classes(c)) {
        std::string k = std::to_string(s.size) + ":";
        for (const Int& x : canonical_sequence(s.p_s)) k += x.get_str() + ",";
        keys.push_back(std::move(k));
    }
    std::sort(keys.begin(), keys.end());
    Fingerprint f;
    for (const std::string& k : keys) f.canonical += k + ";";
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(f.canonical)));
    f.digest = buf;
    return f;
}

Fingerprint fingerprint(const TwoBridgeKnot& k, int m) { return fingerprint(compute_cover(k, m)); }

}  // namespace coverhfk
