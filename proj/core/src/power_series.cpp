#include "zeta/power_series.hpp"

#include <algorithm>

namespace zeta {

PowerSeries::PowerSeries(int order) : order_(order) {
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative");
    coeffs_.assign(static_cast<size_t>(order) + 1, Rat(0));
}

PowerSeries::PowerSeries(int order, std::vector<Rat> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative");
    if (coeffs_.size() != static_cast<size_t>(order) + 1)
        throw std::invalid_argument("series coefficient count must be order + 1");
}

PowerSeries PowerSeries::one(int order) {
    PowerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

PowerSeries PowerSeries::operator+(const PowerSeries& rhs) const {
    const int k = std::min(order_, rhs.order_);
    PowerSeries out(k);
    for (int i = 0; i <= k; ++i)
        out.coeffs_[static_cast<size_t>(i)] = coeff(i) + rhs.coeff(i);
    return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& rhs) const {
    const int k = std::min(order_, rhs.order_);
    PowerSeries out(k);
    for (int i = 0; i <= k; ++i)
        out.coeffs_[static_cast<size_t>(i)] = coeff(i) - rhs.coeff(i);
    return out;
}

PowerSeries PowerSeries::operator*(const PowerSeries& rhs) const {
    const int k = std::min(order_, rhs.order_);
    PowerSeries out(k);
    for (int i = 0; i <= k; ++i) {
        if (coeff(i) == 0)
            continue;
        for (int j = 0; i + j <= k; ++j)
            out.coeffs_[static_cast<size_t>(i + j)] += coeff(i) * rhs.coeff(j);
    }
    return out;
}

PowerSeries PowerSeries::truncate(int order) const {
    if (order > order_)
        throw std::invalid_argument("cannot extend a truncated series");
    PowerSeries out(order);
    for (int i = 0; i <= order; ++i)
        out.coeffs_[static_cast<size_t>(i)] = coeff(i);
    return out;
}

PowerSeries series_exp(const PowerSeries& s) {
    if (s.coeff(0) != 0)
        throw std::domain_error("series_exp requires zero constant term");
    const int k = s.order();
    std::vector<Rat> e(static_cast<size_t>(k) + 1, Rat(0));
    e[0] = 1;
    // n e_n = sum_{j=1..n} j s_j e_{n-j}
    for (int n = 1; n <= k; ++n) {
        Rat acc(0);
        for (int j = 1; j <= n; ++j) {
            const Rat& sj = s.coeff(j);
            if (sj == 0)
                continue;
            acc += Rat(j) * sj * e[static_cast<size_t>(n - j)];
        }
        e[static_cast<size_t>(n)] = acc / Rat(n);
    }
    return PowerSeries(k, std::move(e));
}

PowerSeries series_log(const PowerSeries& s) {
    if (s.coeff(0) != 1)
        throw std::domain_error("series_log requires constant term 1");
    const int k = s.order();
    std::vector<Rat> g(static_cast<size_t>(k) + 1, Rat(0));
    // n s_n = sum_{j=1..n} j g_j s_{n-j}, solved for g_n
    for (int n = 1; n <= k; ++n) {
        Rat acc = Rat(n) * s.coeff(n);
        for (int j = 1; j < n; ++j) {
            const Rat& gj = g[static_cast<size_t>(j)];
            if (gj == 0)
                continue;
            acc -= Rat(j) * gj * s.coeff(n - j);
        }
        g[static_cast<size_t>(n)] = acc / Rat(n);
    }
    return PowerSeries(k, std::move(g));
}

PowerSeries expand_rational(const RationalFunction& r, int order) {
    if (order < 0)
        throw std::invalid_argument("expansion order must be nonnegative");
    const Polynomial& num = r.num();
    const Polynomial& den = r.den();
    // den has constant term 1, so c_n = num_n - sum_{j=1..n} den_j c_{n-j}.
    std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
    for (int n = 0; n <= order; ++n) {
        Rat acc = num.coeff(n);
        const int top = std::min(n, den.degree());
        for (int j = 1; j <= top; ++j) {
            const Rat dj = den.coeff(j);
            if (dj == 0)
                continue;
            acc -= dj * c[static_cast<size_t>(n - j)];
        }
        c[static_cast<size_t>(n)] = acc;
    }
    return PowerSeries(order, std::move(c));
}

PowerSeries zeta_series_from_counts(const std::vector<Int>& counts) {
    if (counts.empty())
        throw std::invalid_argument("zeta_series_from_counts needs at least one count");
    const int k = static_cast<int>(counts.size());
    std::vector<Rat> s(static_cast<size_t>(k) + 1, Rat(0));
    for (int n = 1; n <= k; ++n)
        s[static_cast<size_t>(n)] = make_rat(counts[static_cast<size_t>(n - 1)], Int(n));
    return series_exp(PowerSeries(k, std::move(s)));
}

PowerSeries binomial_factor(int period, const Rat& exponent, int order) {
    if (period < 1)
        throw std::invalid_argument("binomial factor period must be positive");
    // (1 - w)^e = sum_j binom(e, j) (-w)^j with w = z^period.
    Rat binom(1);
    std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
    c[0] = 1;
    for (int j = 1; static_cast<long>(j) * period <= order; ++j) {
        binom *= (exponent - Rat(j - 1)) / Rat(j);
        const Rat term = (j % 2 == 0) ? binom : -binom;
        c[static_cast<size_t>(j) * period] = term;
    }
    return PowerSeries(order, std::move(c));
}

}  // namespace zeta
