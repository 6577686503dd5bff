#pragma once

#include <vector>

#include "mpg/rational.hpp"

namespace mpg {

// Dense square system A x = b over the rationals.
struct LinearSystem {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
};

// Exact solve by fraction-free (Bareiss) elimination: each row is scaled to
// integers first, so intermediate entries stay determinant-bounded instead of
// accumulating rational blowup. Requires a unique solution; throws
// SingularSystemError otherwise.
std::vector<Rational> solve_linear(const LinearSystem& sys);

} // namespace mpg
