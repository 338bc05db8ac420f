#include "zeta/polynomial.hpp"

#include <algorithm>

namespace zeta {

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::constant(const Rat& c) {
    Polynomial p;
    if (c != 0)
        p.coeffs_.push_back(c);
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rat Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return Rat(0);
    return coeffs_[static_cast<size_t>(i)];
}

const Rat& Polynomial::leading() const {
    if (coeffs_.empty())
        throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Rat> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
        out[i] += rhs.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + (-rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero())
        return Polynomial();
    std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rat& s) const {
    if (s == 0)
        return Polynomial();
    Polynomial r(*this);
    for (auto& c : r.coeffs_)
        c *= s;
    return r;
}

Rat Polynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::complex<double> Polynomial::eval(const std::complex<double>& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + std::complex<double>(it->get_d(), 0.0);
    return acc;
}

Polynomial Polynomial::scale_argument(int sign) const {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("scale_argument expects sign +1 or -1");
    if (sign == 1)
        return *this;
    Polynomial r(*this);
    for (size_t i = 1; i < r.coeffs_.size(); i += 2)
        r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

std::string Polynomial::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rat c = coeff(i);
        if (c == 0)
            continue;
        if (!out.empty())
            out += (c > 0) ? " + " : " - ";
        else if (c < 0)
            out += "-";
        const Rat a = abs(c);
        if (a != 1 || i == 0)
            out += rat_to_string(a);
        if (i >= 1)
            out += (i == 1) ? "z" : "z^" + std::to_string(i);
    }
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem(num.coeffs());
    const int dn = den.degree();
    const int dr = num.degree();
    if (dr < dn)
        return {Polynomial(), num};
    std::vector<Rat> quot(static_cast<size_t>(dr - dn) + 1, Rat(0));
    const Rat& lead = den.leading();
    for (int i = dr; i >= dn; --i) {
        Rat& top = rem[static_cast<size_t>(i)];
        if (top == 0)
            continue;
        const Rat q = top / lead;
        quot[static_cast<size_t>(i - dn)] = q;
        for (int j = 0; j <= dn; ++j)
            rem[static_cast<size_t>(i - dn + j)] -= q * den.coeff(j);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero())
        throw std::domain_error("polynomial division is not exact");
    return q;
}

Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero())
        return p;
    Int num_gcd(0);
    Int den_lcm(1);
    for (const Rat& c : p.coeffs()) {
        if (c == 0)
            continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content = make_rat(num_gcd, den_lcm);
    if (p.leading() < 0)
        content = -content;
    std::vector<Rat> out;
    out.reserve(p.coeffs().size());
    for (const Rat& c : p.coeffs())
        out.push_back(c / content);
    return Polynomial(std::move(out));
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return a;
}

}  // namespace zeta
