#include "zeta/subshift.hpp"

namespace zeta {

Subshift::Subshift(const IntMatrix& transition) : transition_(transition) {
    if (transition.dim() < 1)
        throw std::invalid_argument("subshift alphabet must be nonempty");
    for (int i = 0; i < transition.dim(); ++i)
        for (int j = 0; j < transition.dim(); ++j) {
            const Int& v = transition.at(i, j);
            if (v != 0 && v != 1)
                throw std::invalid_argument("transition entries must be 0 or 1");
        }
}

SignedSubshiftFamily::SignedSubshiftFamily(std::vector<SignedPiece> pieces)
    : pieces_(std::move(pieces)) {
    if (pieces_.empty())
        throw std::invalid_argument("signed family needs at least one piece");
    for (const auto& p : pieces_)
        if (p.sign != 1 && p.sign != -1)
            throw std::invalid_argument("signs must be +1 or -1");
}

Int trace_count(const Subshift& s, long n) {
    if (n < 1)
        throw std::invalid_argument("iterate index must be >= 1");
    return s.transition().pow(n).trace();
}

namespace {

// Depth-first enumeration of admissible words with a fixed first symbol,
// counting those whose last transition closes the cycle.
struct WordCounter {
    int dim;
    int length;
    int first;
    const std::vector<char>& allowed;
    long count = 0;

    void extend(int pos, int prev) {
        if (pos == length) {
            if (allowed[static_cast<size_t>(prev) * dim + first])
                ++count;
            return;
        }
        for (int c = 0; c < dim; ++c)
            if (allowed[static_cast<size_t>(prev) * dim + c])
                extend(pos + 1, c);
    }
};

}  // namespace

Int brute_force_count(const Subshift& s, int n, const EnumerationCaps& caps) {
    if (n < 1)
        throw std::invalid_argument("iterate index must be >= 1");
    if (n > caps.max_length)
        throw ResourceLimitError("word length " + std::to_string(n) +
                                 " exceeds enumeration cap " + std::to_string(caps.max_length));
    if (s.alphabet_size() > caps.max_alphabet)
        throw ResourceLimitError("alphabet size " + std::to_string(s.alphabet_size()) +
                                 " exceeds enumeration cap " +
                                 std::to_string(caps.max_alphabet));
    const int dim = s.alphabet_size();
    std::vector<char> allowed(static_cast<size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            allowed[static_cast<size_t>(i) * dim + j] = s.transition().at(i, j) == 1;
    long total = 0;
    for (int first = 0; first < dim; ++first) {
        WordCounter counter{dim, n, first, allowed};
        counter.extend(1, first);
        total += counter.count;
    }
    return Int(total);
}

Int trace_formula(const SignedSubshiftFamily& f, long n) {
    Int sum(0);
    for (const auto& piece : f.pieces()) {
        const Int t = trace_count(piece.shift, n);
        sum += piece.sign > 0 ? t : Int(-t);
    }
    return sum;
}

RationalFunction subshift_zeta(const SignedSubshiftFamily& f) {
    Polynomial num = Polynomial::one();
    Polynomial den = Polynomial::one();
    for (const auto& piece : f.pieces()) {
        const Polynomial factor = reversed_char_poly(piece.shift.transition());
        if (piece.sign > 0)
            den = den * factor;
        else
            num = num * factor;
    }
    return RationalFunction(std::move(num), std::move(den));
}

}  // namespace zeta
