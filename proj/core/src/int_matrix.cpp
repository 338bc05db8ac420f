#include "zeta/int_matrix.hpp"

#include <cassert>
#include <utility>

namespace zeta {

IntMatrix::IntMatrix(const std::vector<std::vector<Int>>& rows) {
    dim_ = static_cast<int>(rows.size());
    data_.reserve(static_cast<size_t>(dim_) * dim_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim_)
            throw std::invalid_argument("matrix must be square");
        for (const auto& v : row)
            data_.push_back(v);
    }
}

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m;
    m.dim_ = dim;
    m.data_.assign(static_cast<size_t>(dim) * dim, Int(0));
    for (int i = 0; i < dim; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (dim_ != rhs.dim_)
        throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix out;
    out.dim_ = dim_;
    out.data_.assign(data_.size(), Int(0));
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < dim_; ++j)
                out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (dim_ != rhs.dim_)
        throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix out(*this);
    for (size_t i = 0; i < data_.size(); ++i)
        out.data_[i] -= rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::pow(long n) const {
    if (n < 0)
        throw std::invalid_argument("matrix power expects a nonnegative exponent");
    IntMatrix result = identity(dim_);
    IntMatrix base(*this);
    while (n > 0) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

Int IntMatrix::trace() const {
    Int t(0);
    for (int i = 0; i < dim_; ++i)
        t += at(i, i);
    return t;
}

Int IntMatrix::det() const {
    if (dim_ == 0)
        return Int(1);
    IntMatrix m(*this);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < dim_; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < dim_; ++i)
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0)
                return Int(0);
            for (int j = 0; j < dim_; ++j)
                std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < dim_; ++i)
            for (int j = k + 1; j < dim_; ++j) {
                Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = std::move(v);
            }
        prev = m.at(k, k);
    }
    Int d = m.at(dim_ - 1, dim_ - 1);
    return sign > 0 ? d : Int(-d);
}

Polynomial reversed_char_poly(const IntMatrix& a) {
    const int n = a.dim();
    // det(lambda I - A) = lambda^n + c_1 lambda^(n-1) + ... + c_n, so
    // det(I - A z) = 1 + c_1 z + ... + c_n z^n.
    std::vector<Rat> coeffs(static_cast<size_t>(n) + 1, Rat(0));
    coeffs[0] = 1;
    IntMatrix m = a;
    Int c(0);
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // m <- a * (m + c I)
            IntMatrix shifted = m;
            for (int i = 0; i < n; ++i)
                shifted.at(i, i) += c;
            m = a * shifted;
        }
        Int t = m.trace();
        assert(mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(k)));
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
        c = -t;
        coeffs[static_cast<size_t>(k)] = Rat(c);
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace zeta
