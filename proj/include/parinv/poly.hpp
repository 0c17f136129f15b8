#pragma once

#include <string>
#include <vector>

#include "parinv/numeric.hpp"

namespace parinv {

// Dense univariate polynomial with exact rational coefficients.
// Used for the dimension polynomials in q and for local Euler factors.
class Poly {
public:
    Poly() = default;                 // zero
    Poly(long constant);              // NOLINT: implicit for readable formulas
    explicit Poly(const Rat& constant);
    static Poly variable();           // the monomial x
    static Poly from_coeffs(std::vector<Rat> coeffs);  // c0 + c1 x + ...

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
    Rat coeff(long i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat evaluate(const Rat& x) const;
    // Evaluation that must land in Z; throws ConsistencyError otherwise.
    Int evaluate_integer(long x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rat& s) const;
    Poly operator/(const Rat& s) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly&, const Poly&) = default;

    // Exact division; throws ConsistencyError if the remainder is nonzero.
    static Poly divide_exact(const Poly& num, const Poly& den);
    // (quotient, remainder) of Euclidean division.
    static std::pair<Poly, Poly> div_rem(const Poly& num, const Poly& den);
    // Monic gcd.
    static Poly gcd(Poly a, Poly b);

    std::string str(const std::string& var = "q") const;

private:
    void trim();
    std::vector<Rat> coeffs_;  // coeffs_[i] multiplies x^i; invariant: no trailing zeros
};

}  // namespace parinv
