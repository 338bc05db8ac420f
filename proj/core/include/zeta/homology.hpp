#pragma once

// Graded homology actions and their Lefschetz invariants. The Lefschetz
// zeta function is an alternating product of reversed characteristic
// polynomials, hence always a rational function; its series expansion is
// the exponential generating identity the tests pin down.

#include "zeta/int_matrix.hpp"
#include "zeta/rational_function.hpp"

#include <vector>

namespace zeta {

class GradedAction {
public:
    // One square matrix per degree 0..D. When `surface` is set, the action
    // is validated as one of a connected closed oriented surface: the
    // degree-0 and top-degree matrices must be 1x1.
    explicit GradedAction(std::vector<IntMatrix> matrices, bool surface = false);

    int top_degree() const { return static_cast<int>(matrices_.size()) - 1; }
    const IntMatrix& matrix(int degree) const { return matrices_[static_cast<size_t>(degree)]; }
    const std::vector<IntMatrix>& matrices() const { return matrices_; }
    bool surface() const { return surface_; }

    bool operator==(const GradedAction& rhs) const = default;

private:
    std::vector<IntMatrix> matrices_;
    bool surface_ = false;
};

// L(phi^n) = sum_k (-1)^k tr(M_k^n), exact.
Int lefschetz_number(const GradedAction& a, long n);

// prod_k det(I - M_k z)^((-1)^(k+1)) as a reduced rational function.
RationalFunction lefschetz_zeta(const GradedAction& a);

// The Euler-characteristic zeta of the action; equals lefschetz_zeta.
RationalFunction euler_symplectic_zeta(const GradedAction& a);

}  // namespace zeta
