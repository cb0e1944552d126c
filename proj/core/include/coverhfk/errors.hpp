#pragma once

#include <stdexcept>

namespace coverhfk {

// Rejected knot parameters or malformed continued-fraction data.
struct InvalidParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// No unit multiple of the polynomial is symmetric under T -> 1/T.
struct NotSymmetrizable : std::domain_error {
    using std::domain_error::domain_error;
};

// f(1) is not +-1, so the symmetrized polynomial cannot be scaled to f(1) = 1.
struct NotUnit : std::domain_error {
    using std::domain_error::domain_error;
};

// The closed cover has b_1 > 0; the torsion theory needs a rational homology sphere.
struct InfiniteH1 : std::domain_error {
    using std::domain_error::domain_error;
};

// The filtration walk cannot be centered integrally; signals a convention bug.
struct AsymmetricGrading : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace coverhfk
