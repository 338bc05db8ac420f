#include "zeta/torsion.hpp"

#include <cmath>
#include <vector>

namespace zeta {

namespace {

constexpr double kAcyclicityTolerance = 1e-9;

// det(I - lambda M) with partial-pivot LU over complex doubles.
std::complex<double> unit_twist_det(const IntMatrix& m, std::complex<double> lambda) {
    const int n = m.dim();
    std::vector<std::complex<double>> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double entry = m.at(i, j).get_d();
            a[static_cast<size_t>(i) * n + j] =
                (i == j ? 1.0 : 0.0) - lambda * entry;
        }
    std::complex<double> det(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a[static_cast<size_t>(i) * n + k]) >
                std::abs(a[static_cast<size_t>(pivot) * n + k]))
                pivot = i;
        if (pivot != k) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<size_t>(k) * n + j],
                          a[static_cast<size_t>(pivot) * n + j]);
            det = -det;
        }
        const std::complex<double> diag = a[static_cast<size_t>(k) * n + k];
        if (diag == std::complex<double>(0.0, 0.0))
            return {0.0, 0.0};
        det *= diag;
        for (int i = k + 1; i < n; ++i) {
            const std::complex<double> factor = a[static_cast<size_t>(i) * n + k] / diag;
            for (int j = k; j < n; ++j)
                a[static_cast<size_t>(i) * n + j] -=
                    factor * a[static_cast<size_t>(k) * n + j];
        }
    }
    return det;
}

}  // namespace

UnitHolonomy::UnitHolonomy(double re, double im) : value_(re, im) {
    if (std::abs(re * re + im * im - 1.0) > 1e-9)
        throw std::invalid_argument("holonomy must have modulus one");
}

double torsion_direct(const GradedAction& a, const UnitHolonomy& lambda) {
    double torsion = 1.0;
    for (int k = 0; k <= a.top_degree(); ++k) {
        const double mod = std::abs(unit_twist_det(a.matrix(k), lambda.value()));
        if (mod <= kAcyclicityTolerance)
            throw std::domain_error("twisted complex not acyclic in degree " +
                                    std::to_string(k));
        if (k % 2 == 0)
            torsion *= mod;
        else
            torsion /= mod;
    }
    return torsion;
}

double torsion_via_zeta(const GradedAction& a, const UnitHolonomy& lambda) {
    const RationalFunction l = lefschetz_zeta(a);
    const std::complex<double> num = l.num().eval(lambda.value());
    const std::complex<double> den = l.den().eval(lambda.value());
    if (std::abs(num) <= kAcyclicityTolerance)
        throw std::domain_error("zeta function vanishes at the holonomy");
    if (std::abs(den) <= kAcyclicityTolerance)
        throw std::domain_error("holonomy is a pole of the zeta function");
    return std::abs(den) / std::abs(num);
}

}  // namespace zeta
