#pragma once

// Hyperbolic torus diffeomorphisms, given by their 2x2 integer covering
// matrices with determinant 1. Nielsen numbers are |det(I - A^n)|; the
// zeta function is rational and obtained from the Lefschetz zeta by the
// sign substitution z -> sigma z and inversion.

#include "zeta/homology.hpp"
#include "zeta/int_matrix.hpp"
#include "zeta/rational_function.hpp"

namespace zeta {

// Spectral sign data of the covering matrix: r eigenvalues of modulus > 1,
// p eigenvalues < -1, sigma = (-1)^p.
struct SignData {
    int r = 0;
    int p = 0;
    int sigma = 1;

    bool operator==(const SignData&) const = default;
};

class TorusMap {
public:
    // Requires a 2x2 matrix of determinant 1 (orientation-reversing maps
    // are rejected).
    explicit TorusMap(const IntMatrix& matrix);

    const IntMatrix& matrix() const { return matrix_; }
    bool hyperbolic() const { return hyperbolic_; }
    Int trace() const { return matrix_.trace(); }

    bool operator==(const TorusMap& rhs) const = default;

private:
    IntMatrix matrix_;
    bool hyperbolic_ = false;
};

// True iff |trace| > 2, which for determinant 1 is equivalent to having no
// eigenvalue of modulus one. Throws std::invalid_argument unless det(m) = 1.
bool is_hyperbolic(const IntMatrix& m);

// |det(I - A^n)|, exact. Requires a hyperbolic map (the determinant can
// vanish otherwise) and n >= 1.
Int nielsen_number(const TorusMap& t, long n);

// Identical to nielsen_number; the dimension of the n-th iterate's
// fixed-point Floer homology.
Int floer_dimension(const TorusMap& t, long n);

// Exact eigenvalue sign analysis over the quadratic extension
// Q(sqrt(trace^2 - 4)). Requires a hyperbolic map.
SignData sign_data(const TorusMap& t);

// The induced graded homology action (1, A, 1) on the torus.
GradedAction torus_action(const TorusMap& t);

// (L(sigma z))^((-1)^r), reduced. Its expansion is the exponential
// generating function of the Nielsen numbers.
RationalFunction torus_zeta(const TorusMap& t);

}  // namespace zeta
