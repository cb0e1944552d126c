#include "coverhfk/group_algebra.hpp"

#include <stdexcept>

namespace coverhfk {

GroupAlgebraElem GroupAlgebraElem::monomial(const FiniteAbelianGroup& g, const Int& coeff,
                                            const Residue& label, std::int64_t degree) {
    GroupAlgebraElem e(g);
    e.add_term(label, degree, coeff);
    return e;
}

void GroupAlgebraElem::add_term(const Residue& label, std::int64_t degree, const Int& coeff) {
    if (coeff == 0) return;
    Key k{group_.reduce(label), degree};
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        coeffs_.emplace(std::move(k), coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

GroupAlgebraElem GroupAlgebraElem::operator+(const GroupAlgebraElem& o) const {
    if (!(group_ == o.group_)) throw std::logic_error("group mismatch");
    GroupAlgebraElem r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k.first, k.second, c);
    return r;
}

GroupAlgebraElem GroupAlgebraElem::operator-(const GroupAlgebraElem& o) const {
    if (!(group_ == o.group_)) throw std::logic_error("group mismatch");
    GroupAlgebraElem r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k.first, k.second, -c);
    return r;
}

GroupAlgebraElem GroupAlgebraElem::operator*(const GroupAlgebraElem& o) const {
    if (!(group_ == o.group_)) throw std::logic_error("group mismatch");
    GroupAlgebraElem r(group_);
    for (const auto& [k1, c1] : coeffs_)
        for (const auto& [k2, c2] : o.coeffs_)
            r.add_term(group_.add(k1.first, k2.first), k1.second + k2.second, c1 * c2);
    return r;
}

GroupAlgebraElem GroupAlgebraElem::operator-() const {
    GroupAlgebraElem r(group_);
    for (const auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
    return r;
}

bool GroupAlgebraElem::operator==(const GroupAlgebraElem& o) const {
    return group_ == o.group_ && coeffs_ == o.coeffs_;
}

Int GroupAlgebraElem::augmentation() const {
    Int s = 0;
    for (const auto& [k, c] : coeffs_) s += c;
    return s;
}

LaurentPoly GroupAlgebraElem::component(const Residue& label) const {
    LaurentPoly p;
    Residue l = group_.reduce(label);
    for (const auto& [k, c] : coeffs_)
        if (k.first == l) p.add_term(k.second, c);
    return p;
}

std::string GroupAlgebraElem::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : coeffs_) {
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        out += int_abs(c).get_str() + "*g" + residue_str(k.first) + "*T^" +
               std::to_string(k.second);
    }
    return out;
}

}  // namespace coverhfk
