#include "zeta/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace zeta {

GrowthEstimate growth_rate(const std::function<Int(long)>& sequence, int horizon) {
    if (horizon < 4)
        throw std::invalid_argument("growth horizon must be >= 4");
    GrowthEstimate estimate;
    estimate.horizon = horizon;
    const int start = (horizon + 1) / 2;
    double best = -std::numeric_limits<double>::infinity();
    for (int n = start; n <= horizon; ++n) {
        const Int a = sequence(n);
        if (a < 0)
            throw std::invalid_argument("growth_rate expects nonnegative terms");
        const double log_term = (a == 0)
            ? -std::numeric_limits<double>::infinity()
            : log_of_int(a) / static_cast<double>(n);
        estimate.per_n_logs.push_back(log_term);
        best = std::max(best, log_term);
    }
    estimate.value = std::max(1.0, std::exp(best));
    return estimate;
}

double torus_entropy(const TorusMap& t) {
    if (!t.hyperbolic())
        throw std::domain_error("torus map is not hyperbolic (|trace| <= 2)");
    const Int tr = abs(t.trace());
    // log((tr + sqrt(tr^2 - 4)) / 2), arranged to survive huge traces
    const double tr_d = tr.get_d();
    const double correction = std::sqrt(1.0 - 4.0 / (tr_d * tr_d));
    return log_of_int(tr) - std::log(2.0) + std::log1p(correction);
}

GrowthEstimate asymptotic_invariant(const TorusMap& t, int horizon) {
    return growth_rate([&t](long n) { return floer_dimension(t, n); }, horizon);
}

GrowthEstimate asymptotic_invariant(const NielsenData& d, int horizon) {
    return growth_rate(
        [&d](long n) { return d.count(std::gcd(n, d.period())); }, horizon);
}

GrowthEstimate asymptotic_invariant(const SignedSubshiftFamily& f, int horizon) {
    // the explicit return type materializes the |.| expression before the
    // temporary it references goes away
    return growth_rate([&f](long n) -> Int { return abs(trace_formula(f, n)); }, horizon);
}

}  // namespace zeta
