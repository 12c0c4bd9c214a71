#include "milnor/int_matrix.hpp"

#include <cstdlib>
#include <utility>

#include "milnor/errors.hpp"

namespace milnor {

Int determinant(IntMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    for (const auto& row : a) {
        if (row.size() != n) throw PreconditionError("determinant requires a square matrix");
    }
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::vector<Int> solve_unimodular(const IntMatrix& m, const std::vector<Int>& rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n) throw PreconditionError("solve: dimension mismatch");
    const Int det = determinant(m);
    if (det != 1 && det != -1) {
        throw InternalInconsistencyError("matrix is not unimodular (|det| != 1)");
    }
    std::vector<Int> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix replaced = m;
        for (std::size_t i = 0; i < n; ++i) replaced[i][j] = rhs[i];
        // Cramer; division by det is multiplication by its sign.
        x[j] = determinant(std::move(replaced)) * det;
    }
    return x;
}

}  // namespace milnor
