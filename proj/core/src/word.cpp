#include "coverhfk/word.hpp"

#include <stdexcept>

namespace coverhfk {

Word Word::letter(int gen, int exp) {
    Word w;
    w.push(gen, exp);
    return w;
}

void Word::push(int gen, int exp) {
    if (exp != 1 && exp != -1) throw std::logic_error("letter exponent must be +-1");
    if (!ls_.empty() && ls_.back().gen == gen && ls_.back().exp == -exp)
        ls_.pop_back();
    else
        ls_.push_back({gen, exp});
}

Word Word::operator*(const Word& o) const {
    Word r = *this;
    for (const Letter& l : o.ls_) r.push(l);
    return r;
}

Word Word::inverse() const {
    Word r;
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) r.push(it->gen, -it->exp);
    return r;
}

Word Word::conjugated_by(const Word& c) const { return c * (*this) * c.inverse(); }

Word Word::rotated(std::size_t r) const {
    Word out;
    std::size_t n = ls_.size();
    if (n == 0) return out;
    for (std::size_t i = 0; i < n; ++i) out.push(ls_[(i + r) % n]);
    return out;
}

std::int64_t Word::exponent_sum(int gen) const {
    std::int64_t s = 0;
    for (const Letter& l : ls_)
        if (l.gen == gen) s += l.exp;
    return s;
}

std::vector<std::int64_t> Word::exponent_vector(std::size_t ngens) const {
    std::vector<std::int64_t> v(ngens, 0);
    for (const Letter& l : ls_) v[static_cast<std::size_t>(l.gen)] += l.exp;
    return v;
}

bool Word::operator<(const Word& o) const {
    if (ls_.size() != o.ls_.size()) return ls_.size() < o.ls_.size();
    for (std::size_t i = 0; i < ls_.size(); ++i) {
        if (ls_[i].gen != o.ls_[i].gen) return ls_[i].gen < o.ls_[i].gen;
        if (ls_[i].exp != o.ls_[i].exp) return ls_[i].exp > o.ls_[i].exp;  // positive first
    }
    return false;
}

std::string Word::str() const {
    std::string s;
    for (const Letter& l : ls_) {
        char c = static_cast<char>('a' + l.gen);
        s += l.exp > 0 ? c : static_cast<char>(c - 'a' + 'A');
    }
    return s;
}

}  // namespace coverhfk
