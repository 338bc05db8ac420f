#include "zeta/periodic.hpp"

#include <algorithm>
#include <numeric>

namespace zeta {

int moebius(long n) {
    if (n < 1)
        throw std::invalid_argument("moebius is defined for positive integers");
    int primes = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        ++primes;
    }
    if (n > 1)
        ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

std::vector<long> divisors_of(long n) {
    if (n < 1)
        throw std::invalid_argument("divisors of a positive integer only");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        small.push_back(d);
        if (d != n / d)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

NielsenData::NielsenData(long period, std::map<long, Int> counts)
    : period_(period), counts_(std::move(counts)) {
    if (period_ < 1)
        throw std::invalid_argument("period must be positive");
    const auto divs = divisors_of(period_);
    for (long d : divs)
        if (!counts_.contains(d))
            throw std::invalid_argument("missing count for divisor " + std::to_string(d));
    if (counts_.size() != divs.size())
        throw std::invalid_argument("counts keyed by non-divisors of the period");
    for (const auto& [d, n] : counts_)
        if (n < 0)
            throw std::invalid_argument("counts must be nonnegative");
}

const Int& NielsenData::count(long divisor) const {
    const auto it = counts_.find(divisor);
    if (it == counts_.end())
        throw std::invalid_argument("not a divisor of the period: " + std::to_string(divisor));
    return it->second;
}

CyclotomicProduct::CyclotomicProduct(long period, std::map<long, Rat> factors)
    : period_(period), factors_(std::move(factors)) {
    if (period_ < 1)
        throw std::invalid_argument("period must be positive");
    for (const auto& [d, e] : factors_) {
        if (d < 1 || period_ % d != 0)
            throw std::invalid_argument("factor index must divide the period");
        if (e == 0)
            throw std::invalid_argument("zero exponents are omitted, not stored");
    }
}

std::vector<Int> expand_counts(const NielsenData& d, int horizon) {
    if (horizon < 1)
        throw std::invalid_argument("horizon must be >= 1");
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(horizon));
    for (long k = 1; k <= horizon; ++k)
        out.push_back(d.count(std::gcd(k, d.period())));
    return out;
}

std::map<long, Int> p_coefficients(const NielsenData& data) {
    const auto divs = divisors_of(data.period());
    std::map<long, Int> p;
    for (long d : divs) {
        Int value = data.count(d);
        for (long d1 : divisors_of(d))
            if (d1 != d)
                value -= p.at(d1);
        p[d] = std::move(value);
    }
    // Cross-check against the closed form P(d) = sum_{d1|d} mu(d1) N_{d/d1}.
    for (long d : divs) {
        Int direct(0);
        for (long d1 : divisors_of(d)) {
            const int mu = moebius(d1);
            if (mu != 0)
                direct += mu * data.count(d / d1);
        }
        if (direct != p.at(d))
            throw std::logic_error("Moebius inversion mismatch at divisor " + std::to_string(d));
    }
    return p;
}

CyclotomicProduct periodic_zeta(const NielsenData& d) {
    std::map<long, Rat> factors;
    for (const auto& [div, p] : p_coefficients(d)) {
        if (p == 0)
            continue;
        factors[div] = make_rat(Int(-p), Int(div));
    }
    return CyclotomicProduct(d.period(), std::move(factors));
}

PowerSeries expand_cyclotomic(const CyclotomicProduct& c, int order) {
    PowerSeries out = PowerSeries::one(order);
    for (const auto& [d, e] : c.factors())
        out = out * binomial_factor(static_cast<int>(d), e, order);
    return out;
}

}  // namespace zeta
