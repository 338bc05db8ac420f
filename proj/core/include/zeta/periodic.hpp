#pragma once

// Fixed-point count data of periodic maps and their zeta function, a formal
// product prod_{d|m} (1 - z^d)^(-P(d)/d) with exact rational exponents.
// The integers P(d) come from Moebius inversion over the divisor lattice
// of the period.

#include "zeta/numbers.hpp"
#include "zeta/power_series.hpp"

#include <map>
#include <vector>

namespace zeta {

// Moebius function: 0 on non-squarefree n, else (-1)^(number of primes).
int moebius(long n);

// All positive divisors of n, ascending.
std::vector<long> divisors_of(long n);

// Per-divisor fixed point counts N_d of a map of period m. Every divisor
// of m must have an entry; counts are nonnegative. Counts at non-divisor
// indices are determined by N_k = N_gcd(k, m).
class NielsenData {
public:
    NielsenData(long period, std::map<long, Int> counts);

    long period() const { return period_; }
    const std::map<long, Int>& counts() const { return counts_; }
    const Int& count(long divisor) const;

    bool operator==(const NielsenData& rhs) const = default;

private:
    long period_ = 1;
    std::map<long, Int> counts_;
};

// Formal product prod (1 - z^d)^(e_d) with nonzero rational exponents e_d,
// every d dividing the declared period.
class CyclotomicProduct {
public:
    CyclotomicProduct(long period, std::map<long, Rat> factors);

    long period() const { return period_; }
    const std::map<long, Rat>& factors() const { return factors_; }

    bool operator==(const CyclotomicProduct& rhs) const = default;

private:
    long period_ = 1;
    std::map<long, Rat> factors_;
};

// N_1..N_horizon via the gcd rule N_k = N_gcd(k, m).
std::vector<Int> expand_counts(const NielsenData& d, int horizon);

// P(d) by the recursion P(d) = N_d - sum_{d1|d, d1 != d} P(d1); checked
// against the explicit sum P(d) = sum_{d1|d} mu(d1) N_{d/d1}, which must
// coincide.
std::map<long, Int> p_coefficients(const NielsenData& d);

// The zeta function of the periodic data: factors d -> -P(d)/d, zero
// exponents omitted.
CyclotomicProduct periodic_zeta(const NielsenData& d);

// Expands the formal product as a power series by the generalized
// binomial theorem, exact rational coefficients.
PowerSeries expand_cyclotomic(const CyclotomicProduct& c, int order);

}  // namespace zeta
