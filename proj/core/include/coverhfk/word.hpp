#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coverhfk {

/// One letter g^e of a free-group word, e = +-1.
struct Letter {
    int gen;
    int exp;
    bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
    bool operator<(const Letter& o) const {
        if (gen != o.gen) return gen < o.gen;
        return exp > o.exp;  // positive letter first
    }
};

/// Freely reduced word in a free group. Append maintains reduction.
class Word {
public:
    Word() = default;

    static Word letter(int gen, int exp);

    bool empty() const { return ls_.empty(); }
    std::size_t size() const { return ls_.size(); }
    const std::vector<Letter>& letters() const { return ls_; }

    void push(int gen, int exp);  // append one letter, cancelling if inverse
    void push(const Letter& l) { push(l.gen, l.exp); }

    Word operator*(const Word& o) const;
    Word inverse() const;
    Word conjugated_by(const Word& c) const;  // c * w * c^{-1}
    /// Cyclic rotation by r letters (valid on cyclically reduced words).
    Word rotated(std::size_t r) const;

    std::int64_t exponent_sum(int gen) const;
    std::vector<std::int64_t> exponent_vector(std::size_t ngens) const;

    bool operator==(const Word& o) const { return ls_ == o.ls_; }
    bool operator<(const Word& o) const;  // length, then (gen, -exp) lex

    /// Letters a,b,c,... with uppercase for inverses, e.g. "abaBAB".
    std::string str() const;

private:
    std::vector<Letter> ls_;
};

}  // namespace coverhfk
