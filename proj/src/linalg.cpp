#include "mpg/linalg.hpp"

#include <utility>

namespace mpg {

std::vector<Rational> solve_linear(const LinearSystem& sys) {
    const std::size_t n = sys.a.size();
    if (sys.b.size() != n)
        throw Error("solve_linear: dimension mismatch");
    for (const auto& row : sys.a)
        if (row.size() != n)
            throw Error("solve_linear: non-square matrix");
    if (n == 0) return {};

    // Clear denominators row by row: M holds the integer augmented matrix.
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), sys.a[i][j].get_den_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), sys.b[i].get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = sys.a[i][j].get_num() * (lcm / sys.a[i][j].get_den());
        m[i][n] = sys.b[i].get_num() * (lcm / sys.b[i].get_den());
    }

    // Fraction-free elimination; all divisions below are exact.
    Integer prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && m[pivot_row][k] == 0) ++pivot_row;
        if (pivot_row == n)
            throw SingularSystemError("singular linear system");
        if (pivot_row != k) std::swap(m[pivot_row], m[k]);

        const Integer pivot = m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                Integer t = m[i][j] * pivot - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev_pivot = pivot;
    }
    if (m[n - 1][n - 1] == 0)
        throw SingularSystemError("singular linear system");

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational sum(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j)
            sum -= Rational(m[i][j]) * x[j];
        x[i] = sum / Rational(m[i][i]);
        x[i].canonicalize();
    }
    return x;
}

} // namespace mpg
