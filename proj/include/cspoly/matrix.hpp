// Dense exact linear algebra over Scalar, sized for transition matrices and
// Gram systems (a dozen rows at most). Plain Gaussian elimination; pivots
// are exact so there is no conditioning concern.
#pragma once

#include <vector>

#include "scalar.hpp"

namespace cspoly {

using Matrix = std::vector<std::vector<Scalar>>;

// solves A x = b; throws SingularSystem when A is singular
inline std::vector<Scalar> solve_linear(Matrix A, std::vector<Scalar> b) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A[piv][col].is_zero()) ++piv;
        if (piv == n) throw SingularSystem("singular linear system");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        Scalar inv = A[col][col].inverse();
        for (std::size_t j = col; j < n; ++j) A[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col].is_zero()) continue;
            Scalar f = A[r][col];
            for (std::size_t j = col; j < n; ++j) A[r][j] -= f * A[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

inline bool is_invertible(Matrix A) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A[piv][col].is_zero()) ++piv;
        if (piv == n) return false;
        std::swap(A[piv], A[col]);
        Scalar inv = A[col][col].inverse();
        for (std::size_t j = col; j < n; ++j) A[col][j] *= inv;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (A[r][col].is_zero()) continue;
            Scalar f = A[r][col];
            for (std::size_t j = col; j < n; ++j) A[r][j] -= f * A[col][j];
        }
    }
    return true;
}

}  // namespace cspoly
