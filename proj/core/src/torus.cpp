#include "zeta/torus.hpp"

namespace zeta {

namespace {

// x = (a + b*sqrt(d)) / 2 with d > 0 not a perfect square, so x is
// irrational whenever b != 0 and exact sign comparisons cannot tie.
struct QuadraticSurd {
    Int a;
    Int b;
    Int d;

    // x > q for an integer threshold q
    bool greater_than(long q) const {
        const Int rhs = Int(2 * q) - a;  // compare b*sqrt(d) with rhs
        if (b == 0)
            return 0 > rhs;
        if (b > 0) {
            if (rhs < 0)
                return true;
            return b * b * d > rhs * rhs;
        }
        if (rhs >= 0)
            return false;
        return b * b * d < rhs * rhs;
    }

    bool less_than(long q) const { return !greater_than(q) && !equals(q); }

    bool equals(long q) const { return b == 0 && a == Int(2 * q); }
};

void require_hyperbolic(const TorusMap& t) {
    if (!t.hyperbolic())
        throw std::domain_error("torus map is not hyperbolic (|trace| <= 2)");
}

}  // namespace

TorusMap::TorusMap(const IntMatrix& matrix) : matrix_(matrix) {
    if (matrix.dim() != 2)
        throw std::invalid_argument("torus map needs a 2x2 matrix");
    if (matrix.det() != 1)
        throw std::invalid_argument("torus map must have determinant 1");
    hyperbolic_ = abs(matrix.trace()) > 2;
}

bool is_hyperbolic(const IntMatrix& m) {
    if (m.dim() != 2)
        throw std::invalid_argument("hyperbolicity test needs a 2x2 matrix");
    if (m.det() != 1)
        throw std::invalid_argument("hyperbolicity test requires determinant 1");
    return abs(m.trace()) > 2;
}

Int nielsen_number(const TorusMap& t, long n) {
    require_hyperbolic(t);
    if (n < 1)
        throw std::invalid_argument("iterate index must be >= 1");
    const IntMatrix fixed = IntMatrix::identity(2) - t.matrix().pow(n);
    return abs(fixed.det());
}

Int floer_dimension(const TorusMap& t, long n) {
    return nielsen_number(t, n);
}

SignData sign_data(const TorusMap& t) {
    require_hyperbolic(t);
    const Int tr = t.trace();
    const Int disc = tr * tr - 4;
    const QuadraticSurd plus{tr, Int(1), disc};
    const QuadraticSurd minus{tr, Int(-1), disc};
    SignData s;
    for (const auto& lambda : {plus, minus}) {
        if (lambda.greater_than(1) || lambda.less_than(-1))
            ++s.r;
        if (lambda.less_than(-1))
            ++s.p;
    }
    s.sigma = (s.p % 2 == 0) ? 1 : -1;
    return s;
}

GradedAction torus_action(const TorusMap& t) {
    std::vector<IntMatrix> degrees;
    degrees.push_back(IntMatrix::identity(1));
    degrees.push_back(t.matrix());
    degrees.push_back(IntMatrix::identity(1));
    return GradedAction(std::move(degrees), /*surface=*/true);
}

RationalFunction torus_zeta(const TorusMap& t) {
    const SignData s = sign_data(t);
    const RationalFunction l = lefschetz_zeta(torus_action(t));
    return l.scale_argument(s.sigma).pow(s.r % 2 == 0 ? 1 : -1);
}

}  // namespace zeta
