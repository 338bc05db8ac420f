#pragma once

// Exact integer and rational scalars used throughout the library.
//
// All symbolic computation (polynomials, power series, fixed point counts)
// runs over these types; floating point only ever appears at the very end,
// in torsion values and growth-rate estimates.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace zeta {

using Int = mpz_class;
using Rat = mpq_class;

// num/den reduced to lowest terms, denominator positive, zero is 0/1.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) {
    return make_rat(Int(num), Int(den));
}

// "p/q", or just "p" when q = 1.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Parses "p" or "p/q"; inverse of rat_to_string.
Rat rat_from_string(const std::string& s);

// Natural logarithm of a positive big integer, from the bit length and the
// leading bits. Relative accuracy is that of double arithmetic (~1e-16),
// independent of the magnitude of n.
double log_of_int(const Int& n);

}  // namespace zeta
