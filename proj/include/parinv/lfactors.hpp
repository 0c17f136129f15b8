#pragma once

#include <optional>
#include <vector>

#include "parinv/poly.hpp"

namespace parinv::lfactors {

// Coefficient in Q(sqrt p): value a + b sqrt(p).
struct QuadCoeff {
    Rat a = Rat(0);
    Rat b = Rat(0);

    bool rational() const { return b == 0; }
    friend bool operator==(const QuadCoeff&, const QuadCoeff&) = default;
};

// p^(j/2) as an exact element of Q(sqrt p), j any integer.
QuadCoeff half_power(long p, long j);

// Inverse local factor: L_p(s) = 1 / poly(X) with X = p^{-s}, constant term
// one.  Coefficients live in Q(sqrt p) so that half-integer shifts stay
// exact and the type is closed under composition.
class EulerFactor {
public:
    EulerFactor(long p, const Poly& inverse_poly);  // rational coefficients
    static EulerFactor one(long p);

    long prime() const { return p_; }
    long degree() const { return static_cast<long>(coeff_.size()) - 1; }
    const std::vector<QuadCoeff>& coeffs() const { return coeff_; }

    bool is_rational() const;
    Poly rational_poly() const;  // ModeError when a sqrt(p) coefficient survives

    friend bool operator==(const EulerFactor&, const EulerFactor&) = default;

private:
    EulerFactor() = default;
    long p_ = 2;
    std::vector<QuadCoeff> coeff_;

    friend EulerFactor spinor_product(const EulerFactor&, const EulerFactor&);
    friend EulerFactor shift(const EulerFactor&, long, bool);
};

// Product of inverse factors (degrees add, constant term stays one).
// Both factors must live at the same prime.
EulerFactor spinor_product(const EulerFactor& e1, const EulerFactor& e2);

// Substitution s -> s + t with t = twice_t / 2, i.e. X -> p^{-t} X.
// With require_rational the result must have rational coefficients
// (ModeError otherwise).
EulerFactor shift(const EulerFactor& e, long twice_t, bool require_rational = false);

// Local factor as a reduced rational function num(X)/den(X), X = p^{-s},
// constant terms one.  den == 1 means the factor reduced to polynomial form.
struct LocalFactor {
    long p = 2;
    Poly num;
    Poly den;

    bool polynomial() const { return den == Poly(1); }
};

// Normalizes and reduces num/den by their gcd, restoring unit constant terms.
LocalFactor reduce_local_factor(long p, Poly num, Poly den);

// The level-adjustment factor (1 - p^{k-1} X)(1 - p^{k-2} X) / (1 + eps_p
// p^{k-2} X); for eps_p = -1 the denominator cancels exactly and the result
// is the polynomial 1 - p^{k-1} X.
LocalFactor sk_correction(long p, long k, int eps_p);

// Inverse local factor at p of the lifted L-function: the two zeta-type
// factors shifted by k-1 and k-2, the elliptic factor ef (inverse-polynomial
// form), and for p in M the correction term.  Reduced exactly; a surviving
// denominator is reported in rational-function form rather than as an error.
LocalFactor sk_classical_factor(long p, long k, std::optional<int> eps_p, bool in_m,
                                const Poly& ef);

}  // namespace parinv::lfactors
