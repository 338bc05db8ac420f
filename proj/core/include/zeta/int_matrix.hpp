#pragma once

// Square matrices of arbitrary-precision integers. These stay small
// (homology actions, torus maps, subshift transition matrices); all
// arithmetic is exact.

#include "zeta/numbers.hpp"
#include "zeta/polynomial.hpp"

#include <vector>

namespace zeta {

class IntMatrix {
public:
    IntMatrix() = default;
    // Row-major square data; throws std::invalid_argument if rows are ragged
    // or the matrix is not square.
    explicit IntMatrix(const std::vector<std::vector<Int>>& rows);
    static IntMatrix identity(int dim);

    int dim() const { return dim_; }
    const Int& at(int i, int j) const { return data_[static_cast<size_t>(i) * dim_ + j]; }
    Int& at(int i, int j) { return data_[static_cast<size_t>(i) * dim_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix pow(long n) const;

    Int trace() const;
    Int det() const;  // fraction-free (Bareiss) elimination

    bool operator==(const IntMatrix& rhs) const = default;

private:
    int dim_ = 0;
    std::vector<Int> data_;
};

// det(I - A z), the characteristic polynomial written with constant term 1.
// Integer coefficients; coefficient of z is -trace(A). Computed by the
// Faddeev-LeVerrier trace recursion, which is exact over the integers.
Polynomial reversed_char_poly(const IntMatrix& a);

}  // namespace zeta
