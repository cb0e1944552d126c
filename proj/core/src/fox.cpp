#include "coverhfk/fox.hpp"

#include <stdexcept>
#include <string>

#include "coverhfk/errors.hpp"

namespace coverhfk {

std::vector<FoxSummand> fox_derivative(const Word& rel, int gen) {
    std::vector<FoxSummand> out;
    Word prefix;
    for (const Letter& l : rel.letters()) {
        if (l.gen == gen) {
            if (l.exp > 0) {
                out.push_back({+1, prefix});
            } else {
                Word q = prefix;
                q.push(l.gen, -1);
                out.push_back({-1, q});
            }
        }
        prefix.push(l);
    }
    return out;
}

Presentation two_bridge_presentation(const TwoBridgeKnot& k) {
    Presentation p;
    p.gens = {"a", "b"};
    p.meridian = 1;
    Word r;
    if (k.p == 1) {
        r.push(0, 1);
        r.push(1, -1);
    } else {
        Word w;
        for (std::size_t i = 1; i < static_cast<std::size_t>(k.p); ++i)
            w.push(i % 2 == 1 ? 0 : 1, k.epsilon[i - 1]);
        r = w * Word::letter(0, 1) * w.inverse() * Word::letter(1, -1);
    }
    p.relators = {r};
    return p;
}

AbelianizeResult abelianize(const Presentation& p, bool kill_meridian) {
    IntMatrix e = p.exponent_matrix(kill_meridian);
    SmithResult s = smith_normal_form(e);
    // H_1 = Z^n / rowspan(e); with U e V = D the class of generator i is
    // row i of V, the j-th coordinate taken mod d_j (free when d_j = 0).
    std::size_t n = p.ngens();
    std::size_t dmin = std::min(e.rows(), e.cols());
    std::vector<std::int64_t> d(n, 0);
    for (std::size_t j = 0; j < dmin; ++j) d[j] = to_i64(s.D.at(j, j));

    AbelianizeResult r;
    std::vector<std::size_t> torsion_pos, free_pos;
    std::vector<std::int64_t> factors;
    for (std::size_t j = 0; j < n; ++j) {
        if (d[j] == 0)
            free_pos.push_back(j);
        else if (d[j] >= 2)
            torsion_pos.push_back(j);
    }
    for (std::size_t j : torsion_pos) factors.push_back(d[j]);
    r.torsion = FiniteAbelianGroup(factors);
    r.free_rank = static_cast<std::int64_t>(free_pos.size());
    r.torsion_coords.resize(n);
    r.free_coords.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Residue t(torsion_pos.size());
        for (std::size_t k = 0; k < torsion_pos.size(); ++k) {
            Int v = s.V.at(i, torsion_pos[k]) % d[torsion_pos[k]];
            if (v < 0) v += d[torsion_pos[k]];
            t[k] = to_i64(v);
        }
        r.torsion_coords[i] = std::move(t);
        std::vector<std::int64_t> f(free_pos.size());
        for (std::size_t k = 0; k < free_pos.size(); ++k) f[k] = to_i64(s.V.at(i, free_pos[k]));
        r.free_coords[i] = std::move(f);
    }
    return r;
}

Presentation lift_presentation(const Presentation& p, int m) {
    if (m < 1) throw InvalidParameters("cover degree must be >= 1");
    if (m == 1) return p;
    if (p.ngens() != 2)
        throw InvalidParameters("lift_presentation expects a two-generator base presentation");

    const int a = p.meridian == 0 ? 1 : 0;  // non-meridian generator
    const int mu = p.meridian;

    Presentation out;
    for (int j = 0; j < m; ++j) out.gens.push_back(p.gens[static_cast<std::size_t>(a)] + std::to_string(j));
    out.gens.push_back("t");
    out.meridian = m;  // the surviving meridian power b^m

    // Rewrite a word of the kernel through the transversal {1, mu, ..., mu^{m-1}}.
    // State j = exponent sum of the scanned prefix mod m.
    auto rewrite = [&](int start, const Word& w) {
        Word r;
        int j = start;
        for (const Letter& l : w.letters()) {
            if (l.exp > 0) {
                if (l.gen == mu) {
                    if (j == m - 1) r.push(m, 1);
                } else {
                    r.push(j, 1);
                }
                j = (j + 1) % m;
            } else {
                int jp = (j - 1 + m) % m;
                if (l.gen == mu) {
                    if (jp == m - 1) r.push(m, -1);
                } else {
                    r.push(jp, -1);
                }
                j = jp;
            }
        }
        return r;
    };

    for (const Word& rel : p.relators)
        for (int j = 0; j < m; ++j) out.relators.push_back(rewrite(j, rel));
    return out;
}

std::int64_t SplittingMaps::eps_of(const Word& w) const {
    std::int64_t s = 0;
    for (const Letter& l : w.letters()) s += l.exp * epsilon[static_cast<std::size_t>(l.gen)];
    return s;
}

Residue SplittingMaps::rho_of(const Word& w) const {
    Residue r = h1_torsion.zero();
    for (const Letter& l : w.letters()) {
        const Residue& g = rho[static_cast<std::size_t>(l.gen)];
        r = h1_torsion.add(r, l.exp > 0 ? g : h1_torsion.neg(g));
    }
    return r;
}

SplittingMaps splitting_maps(const Presentation& cover) {
    AbelianizeResult closed = abelianize(cover, true);
    if (closed.free_rank > 0)
        throw InfiniteH1("closed cover has b_1 = " + std::to_string(closed.free_rank) +
                         " > 0; torsion theory needs a rational homology sphere");

    AbelianizeResult compl_ = abelianize(cover, false);
    if (compl_.free_rank != 1)
        throw std::logic_error("knot complement must have first Betti number 1");

    SplittingMaps s;
    s.h1_torsion = closed.torsion;
    s.h1_order = closed.torsion.order();
    s.rho.resize(cover.ngens());
    s.epsilon.resize(cover.ngens());
    for (std::size_t i = 0; i < cover.ngens(); ++i) {
        s.rho[i] = closed.torsion_coords[i];
        s.epsilon[i] = compl_.free_coords[i][0];
    }
    std::int64_t em = s.epsilon[static_cast<std::size_t>(cover.meridian)];
    if (em != 1 && em != -1)
        throw std::logic_error("meridian does not generate the free quotient of H_1");
    if (em == -1)
        for (auto& e : s.epsilon) e = -e;

    for (const Word& r : cover.relators) {
        if (s.eps_of(r) != 0 || !s.h1_torsion.is_zero(s.rho_of(r)))
            throw std::logic_error("splitting maps fail to kill a relator");
    }
    return s;
}

}  // namespace coverhfk
