#pragma once

// Dense univariate polynomials with exact rational coefficients.
//
// Invariant: the coefficient vector is trimmed, so the leading coefficient
// is nonzero; the zero polynomial is the empty vector (degree -1).

#include "zeta/numbers.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace zeta {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial constant(const Rat& c);
    static Polynomial one() { return constant(Rat(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(int i) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rat& s) const;
    bool operator==(const Polynomial& rhs) const = default;

    Rat eval(const Rat& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    // p(sign * z); sign must be +1 or -1.
    Polynomial scale_argument(int sign) const;

    std::string to_string() const;

private:
    std::vector<Rat> coeffs_;

    void trim();
};

// Quotient and remainder with deg(rem) < deg(divisor).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

// Exact quotient; throws std::domain_error if the division leaves a remainder.
Polynomial exact_div(const Polynomial& num, const Polynomial& den);

// Integer-coefficient associate with coprime coefficients and positive
// leading coefficient (content stripped). primitive_part(0) = 0.
Polynomial primitive_part(const Polynomial& p);

// Euclidean gcd over the rationals, returned in primitive form.
Polynomial poly_gcd(Polynomial a, Polynomial b);

}  // namespace zeta
