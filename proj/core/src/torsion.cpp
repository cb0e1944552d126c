#include "coverhfk/torsion.hpp"

#include <stdexcept>

#include "coverhfk/errors.hpp"

namespace coverhfk {

namespace {

// Determinant over the commutative ring Z[G][T,T^-1] by cofactor expansion.
GroupAlgebraElem ring_det(const std::vector<std::vector<GroupAlgebraElem>>& m,
                          std::vector<std::size_t> cols, std::size_t row,
                          const FiniteAbelianGroup& g) {
    if (cols.empty()) {
        GroupAlgebraElem one(g);
        one.add_term(g.zero(), 0, Int(1));
        return one;
    }
    GroupAlgebraElem acc(g);
    for (std::size_t t = 0; t < cols.size(); ++t) {
        const GroupAlgebraElem& e = m[row][cols[t]];
        if (e.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t u = 0; u < cols.size(); ++u)
            if (u != t) rest.push_back(cols[u]);
        GroupAlgebraElem sub = ring_det(m, rest, row + 1, g);
        GroupAlgebraElem term = e * sub;
        if (t % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

}  // namespace

TorsionElement turaev_torsion(const TwoBridgeKnot& k, int m) {
    CoverData c = compute_cover(k, m);
    const FiniteAbelianGroup& g = c.maps.h1_torsion;

    std::vector<int> cols;
    for (std::size_t gi = 0; gi < c.lifted.ngens(); ++gi)
        if (static_cast<int>(gi) != c.lifted.meridian) cols.push_back(static_cast<int>(gi));

    std::size_t n = c.lifted.relators.size();
    std::vector<std::vector<GroupAlgebraElem>> mat(
        n, std::vector<GroupAlgebraElem>(n, GroupAlgebraElem(g)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            GroupAlgebraElem e(g);
            for (const FoxSummand& s : fox_derivative(c.lifted.relators[i], cols[j]))
                e.add_term(c.maps.rho_of(s.prefix), c.maps.eps_of(s.prefix), Int(s.sign));
            mat[i][j] = std::move(e);
        }

    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    GroupAlgebraElem det = ring_det(mat, all, 0, g);

    Int aug = det.augmentation();
    if (int_abs(aug) != c.maps.h1_order)
        throw std::logic_error("torsion numerator augmentation " + aug.get_str() +
                               " != |H_1| = " + c.maps.h1_order.get_str());
    if (aug < 0) det = -det;

    return TorsionElement{g, det, c.maps.h1_order};
}

bool acyclicity_check(const TwoBridgeKnot& k, int m) {
    try {
        TorsionElement t = turaev_torsion(k, m);
        return int_abs(t.numerator.augmentation()) == t.h1_order && t.h1_order != 0;
    } catch (const InfiniteH1&) {
        return false;
    }
}

CycloPoly twisted_alexander_wada(const TwoBridgeKnot& k, int m,
                                 const std::vector<std::int64_t>& chars) {
    TorsionElement t = turaev_torsion(k, m);
    return cyclotomic_eval(t.numerator, chars);
}

}  // namespace coverhfk
