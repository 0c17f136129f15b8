#include "parinv/poly.hpp"

#include <stdexcept>

#include "parinv/errors.hpp"

namespace parinv {

Poly::Poly(long constant) {
    if (constant != 0) coeffs_.push_back(Rat(constant));
}

Poly::Poly(const Rat& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::variable() {
    Poly p;
    p.coeffs_ = {Rat(0), Rat(1)};
    return p;
}

Poly Poly::from_coeffs(std::vector<Rat> coeffs) {
    Poly p;
    p.coeffs_ = std::move(coeffs);
    for (auto& c : p.coeffs_) c.canonicalize();
    p.trim();
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

Rat Poly::evaluate(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Int Poly::evaluate_integer(long x) const { return to_integer(evaluate(Rat(x))); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Rat& s) const {
    if (s == 0) return Poly();
    Poly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

Poly Poly::operator/(const Rat& s) const {
    if (s == 0) throw std::invalid_argument("division of polynomial by zero");
    Rat inv(s.get_den(), s.get_num());
    inv.canonicalize();
    return *this * inv;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1);
    Poly base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::pair<Poly, Poly> Poly::div_rem(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Poly q;
    Poly r = num;
    const long dd = den.degree();
    const Rat lead = den.coeffs_.back();
    while (!r.is_zero() && r.degree() >= dd) {
        const long shift = r.degree() - dd;
        Rat c = r.coeffs_.back() / lead;
        c.canonicalize();
        std::vector<Rat> mono(shift + 1, Rat(0));
        mono[shift] = c;
        const Poly term = Poly::from_coeffs(std::move(mono));
        q += term;
        r -= term * den;
    }
    return {q, r};
}

Poly Poly::divide_exact(const Poly& num, const Poly& den) {
    auto [q, r] = div_rem(num, den);
    if (!r.is_zero()) {
        throw ConsistencyError("polynomial division left remainder " + r.str());
    }
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto [q, r] = div_rem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a / a.coeffs_.back();  // monic
    return a;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (long i = degree(); i >= 0; --i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        const bool first = s.empty();
        Rat abs = c < 0 ? Rat(-c) : c;
        if (!first) s += (c < 0) ? " - " : " + ";
        if (first && c < 0) s += "-";
        const bool unit = (abs == 1);
        if (i == 0) {
            s += abs.get_str();
        } else {
            if (!unit) s += abs.get_str() + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace parinv
