#pragma once

#include <string>
#include <vector>

#include "coverhfk/matrix.hpp"
#include "coverhfk/word.hpp"

namespace coverhfk {

/// Finitely presented group with a designated meridian generator.
struct Presentation {
    std::vector<std::string> gens;
    std::vector<Word> relators;
    int meridian = 0;

    std::size_t ngens() const { return gens.size(); }

    /// Relator exponent-sum matrix, one row per relator; with kill_meridian
    /// an extra row kills the meridian generator.
    IntMatrix exponent_matrix(bool kill_meridian) const;

    /// Debug format: one relator per line, generators as letters, inverses
    /// uppercase. A header line lists the generators and the meridian.
    std::string text() const;
};

}  // namespace coverhfk
