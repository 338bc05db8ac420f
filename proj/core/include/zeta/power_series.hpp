#pragma once

// Truncated formal power series with exact rational coefficients.
//
// A series of order K stores coefficients of z^0 .. z^K. Every generating
// function identity in the library is checked coefficient-for-coefficient
// through this type; there is no floating point anywhere in it.

#include "zeta/numbers.hpp"
#include "zeta/rational_function.hpp"

#include <vector>

namespace zeta {

class PowerSeries {
public:
    // The zero series of the given order.
    explicit PowerSeries(int order);
    // coeffs has length order + 1, degrees 0..order.
    PowerSeries(int order, std::vector<Rat> coeffs);

    static PowerSeries one(int order);

    int order() const { return order_; }
    const Rat& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // Mixed-order arithmetic truncates to the smaller order.
    PowerSeries operator+(const PowerSeries& rhs) const;
    PowerSeries operator-(const PowerSeries& rhs) const;
    PowerSeries operator*(const PowerSeries& rhs) const;

    PowerSeries truncate(int order) const;

    bool operator==(const PowerSeries& rhs) const = default;

private:
    int order_ = 0;
    std::vector<Rat> coeffs_;
};

// exp(s) for s with zero constant term, via the recurrence
// (exp s)' = s' exp s. Throws std::domain_error otherwise.
PowerSeries series_exp(const PowerSeries& s);

// log(s) for s with constant term 1; inverse of series_exp.
PowerSeries series_log(const PowerSeries& s);

// Power-series expansion of a reduced rational function at z = 0.
PowerSeries expand_rational(const RationalFunction& r, int order);

// exp(sum_{n=1..K} a_n z^n / n) for counts a_1..a_K, truncated at order K.
PowerSeries zeta_series_from_counts(const std::vector<Int>& counts);

// (1 - z^period)^exponent by the generalized binomial theorem, truncated.
PowerSeries binomial_factor(int period, const Rat& exponent, int order);

}  // namespace zeta
