#include "zeta/numbers.hpp"

#include <cmath>

namespace zeta {

Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return make_rat(num, den);
}

double log_of_int(const Int& n) {
    if (n <= 0)
        throw std::domain_error("log_of_int requires a positive integer");
    signed long exponent = 0;
    // n = d * 2^exponent with d in [0.5, 1)
    const double d = mpz_get_d_2exp(&exponent, n.get_mpz_t());
    return std::log(d) + static_cast<double>(exponent) * std::log(2.0);
}

}  // namespace zeta
