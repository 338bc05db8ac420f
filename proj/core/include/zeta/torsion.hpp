#pragma once

// Reidemeister torsion of the mapping torus of a graded action, twisted by
// a one-dimensional flat bundle with unit holonomy lambda. Two independent
// routes compute it: the alternating product of |det(I - lambda M_k)| over
// the degrees, and the reciprocal modulus of the Lefschetz zeta function
// evaluated at lambda. They must agree to high relative precision.

#include "zeta/homology.hpp"

#include <complex>

namespace zeta {

// A complex scalar of modulus one, validated to 1e-9 at construction.
class UnitHolonomy {
public:
    UnitHolonomy(double re, double im);

    double re() const { return value_.real(); }
    double im() const { return value_.imag(); }
    std::complex<double> value() const { return value_; }
    UnitHolonomy conj() const { return UnitHolonomy(re(), -im()); }

private:
    std::complex<double> value_;
};

// prod_k |det(I - lambda M_k)|^((-1)^k) by complex LU determinants.
// Throws std::domain_error naming the degree when any factor's modulus
// falls below 1e-9 (the twisted complex is not acyclic there).
double torsion_direct(const GradedAction& a, const UnitHolonomy& lambda);

// 1 / |L(lambda)| from the reduced Lefschetz zeta function. Throws
// std::domain_error when lambda is a zero or a pole (modulus below 1e-9).
double torsion_via_zeta(const GradedAction& a, const UnitHolonomy& lambda);

}  // namespace zeta
