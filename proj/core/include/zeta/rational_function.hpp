#pragma once

// Quotients of polynomials in reduced canonical form: numerator and
// denominator coprime, denominator with constant term 1 so a power-series
// expansion at z = 0 always exists. Equality is field comparison.

#include "zeta/polynomial.hpp"

#include <complex>
#include <string>

namespace zeta {

class RationalFunction {
public:
    // The constant 1.
    RationalFunction();
    // Reduces by the polynomial gcd and rescales so den(0) = 1; throws
    // std::domain_error if den is zero or vanishes at z = 0 after reduction.
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction reciprocal() const;
    RationalFunction pow(long e) const;

    // f(sign * z); sign must be +1 or -1.
    RationalFunction scale_argument(int sign) const;

    std::complex<double> eval(const std::complex<double>& z) const;

    bool operator==(const RationalFunction& rhs) const = default;

    std::string to_string() const;

private:
    Polynomial num_;
    Polynomial den_;
};

}  // namespace zeta
