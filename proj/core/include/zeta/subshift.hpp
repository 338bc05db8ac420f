#pragma once

// Subshifts of finite type over 0/1 transition matrices. Fixed points of
// the n-th shift iterate are counted two ways: by the trace of the n-th
// matrix power, and by direct enumeration of admissible cyclic words (the
// oracle, capped). Signed families combine traces into fixed point counts
// and a rational zeta function.

#include "zeta/int_matrix.hpp"
#include "zeta/rational_function.hpp"

#include <stdexcept>
#include <vector>

namespace zeta {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Subshift {
public:
    // Entries must be 0 or 1; dimension >= 1.
    explicit Subshift(const IntMatrix& transition);

    const IntMatrix& transition() const { return transition_; }
    int alphabet_size() const { return transition_.dim(); }

    bool operator==(const Subshift& rhs) const = default;

private:
    IntMatrix transition_;
};

struct SignedPiece {
    Subshift shift;
    int sign;  // +1 or -1

    bool operator==(const SignedPiece& rhs) const = default;
};

class SignedSubshiftFamily {
public:
    explicit SignedSubshiftFamily(std::vector<SignedPiece> pieces);

    const std::vector<SignedPiece>& pieces() const { return pieces_; }

    bool operator==(const SignedSubshiftFamily& rhs) const = default;

private:
    std::vector<SignedPiece> pieces_;
};

struct EnumerationCaps {
    int max_length = 12;
    int max_alphabet = 6;
};

// tr(A^n): the number of fixed points of the n-th shift iterate.
Int trace_count(const Subshift& s, long n);

// Counts admissible cyclic words (x_0, ..., x_{n-1}) directly. Exceeding
// the caps raises ResourceLimitError. Always equals trace_count.
Int brute_force_count(const Subshift& s, int n, const EnumerationCaps& caps = {});

// sum_i sign_i * tr(A_i^n); may be negative.
Int trace_formula(const SignedSubshiftFamily& f, long n);

// prod_i det(I - A_i z)^(-sign_i), reduced.
RationalFunction subshift_zeta(const SignedSubshiftFamily& f);

}  // namespace zeta
