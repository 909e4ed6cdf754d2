#include "modfol/linsolve.hpp"

#include "modfol/error.hpp"

#include <stdexcept>
#include <utility>

namespace modfol {

std::vector<Rational> solve_linear_exact(const RationalMatrix& a, const std::vector<Rational>& b)
{
    const std::size_t rows = a.size();
    if (rows != b.size()) {
        throw std::invalid_argument("solve_linear_exact: row count of A and b differ");
    }
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    if (rows < cols) {
        throw Error(ErrorKind::Singular, "underdetermined system");
    }

    // Augmented integer matrix: each row times the lcm of its denominators.
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) {
            throw std::invalid_argument("solve_linear_exact: ragged matrix");
        }
        Integer l = b[i].get_den();
        for (const auto& x : a[i]) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m[i][j] = a[i][j].get_num() * (l / a[i][j].get_den());
        }
        m[i][cols] = b[i].get_num() * (l / b[i].get_den());
    }

    // Bareiss: after step k every entry below row k is an exact minor.
    Integer prev = 1;
    for (std::size_t k = 0; k < cols; ++k) {
        std::size_t pivot = k;
        while (pivot < rows && m[pivot][k] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            throw Error(ErrorKind::Singular, "matrix is rank deficient (column " + std::to_string(k) + ")");
        }
        std::swap(m[k], m[pivot]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j <= cols; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    for (std::size_t i = cols; i < rows; ++i) {
        if (m[i][cols] != 0) {
            throw Error(ErrorKind::Inconsistent, "overdetermined rows conflict (row " + std::to_string(i) + ")");
        }
    }

    std::vector<Rational> x(cols);
    for (std::size_t k = cols; k-- > 0;) {
        Rational acc(m[k][cols]);
        for (std::size_t j = k + 1; j < cols; ++j) {
            acc -= Rational(m[k][j]) * x[j];
        }
        x[k] = acc / Rational(m[k][k]);
    }
    return x;
}

} // namespace modfol
