#include "zeta/rational_function.hpp"

namespace zeta {

RationalFunction::RationalFunction() : num_(Polynomial::one()), den_(Polynomial::one()) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero())
        throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial::one();
        return;
    }
    const Polynomial g = poly_gcd(num, den);
    num = exact_div(num, g);
    den = exact_div(den, g);
    const Rat c0 = den.coeff(0);
    if (c0 == 0)
        throw std::domain_error("denominator vanishes at z = 0 after reduction");
    const Rat scale = Rat(1) / c0;
    num_ = num * scale;
    den_ = den * scale;
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::reciprocal() const {
    if (num_.is_zero())
        throw std::domain_error("reciprocal of the zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    RationalFunction base = e < 0 ? reciprocal() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    RationalFunction result;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

RationalFunction RationalFunction::scale_argument(int sign) const {
    return RationalFunction(num_.scale_argument(sign), den_.scale_argument(sign));
}

std::complex<double> RationalFunction::eval(const std::complex<double>& z) const {
    return num_.eval(z) / den_.eval(z);
}

std::string RationalFunction::to_string() const {
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace zeta
