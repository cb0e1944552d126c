#include "coverhfk/presentation.hpp"

namespace coverhfk {

IntMatrix Presentation::exponent_matrix(bool kill_meridian) const {
    std::size_t rows = relators.size() + (kill_meridian ? 1 : 0);
    IntMatrix m(rows, ngens());
    for (std::size_t i = 0; i < relators.size(); ++i) {
        std::vector<std::int64_t> v = relators[i].exponent_vector(ngens());
        for (std::size_t j = 0; j < ngens(); ++j) m.at(i, j) = v[j];
    }
    if (kill_meridian) m.at(relators.size(), static_cast<std::size_t>(meridian)) = 1;
    return m;
}

std::string Presentation::text() const {
    std::string s = "gens:";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        s += " ";
        s += static_cast<char>('a' + i);
        s += "=" + gens[i];
    }
    s += " meridian=";
    s += static_cast<char>('a' + meridian);
    s += "\n";
    for (const Word& r : relators) s += r.str() + "\n";
    return s;
}

}  // namespace coverhfk
