#include "zeta/homology.hpp"

namespace zeta {

GradedAction::GradedAction(std::vector<IntMatrix> matrices, bool surface)
    : matrices_(std::move(matrices)), surface_(surface) {
    if (matrices_.empty())
        throw std::invalid_argument("graded action needs at least one degree");
    if (surface_) {
        if (matrices_.front().dim() != 1 || matrices_.back().dim() != 1)
            throw std::invalid_argument(
                "surface action must have 1x1 matrices in degrees 0 and top");
    }
}

Int lefschetz_number(const GradedAction& a, long n) {
    if (n < 1)
        throw std::invalid_argument("iterate index must be >= 1");
    Int sum(0);
    int sign = 1;
    for (const IntMatrix& m : a.matrices()) {
        const Int t = m.pow(n).trace();
        sum += sign > 0 ? t : Int(-t);
        sign = -sign;
    }
    return sum;
}

RationalFunction lefschetz_zeta(const GradedAction& a) {
    Polynomial num = Polynomial::one();
    Polynomial den = Polynomial::one();
    for (int k = 0; k <= a.top_degree(); ++k) {
        const Polynomial f = reversed_char_poly(a.matrix(k));
        // exponent (-1)^(k+1): odd degrees upstairs, even degrees downstairs
        if (k % 2 == 1)
            num = num * f;
        else
            den = den * f;
    }
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction euler_symplectic_zeta(const GradedAction& a) {
    return lefschetz_zeta(a);
}

}  // namespace zeta
