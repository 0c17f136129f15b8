#pragma once

#include <vector>

#include "parinv/numeric.hpp"

namespace parinv::modforms {

// Truncated power series in q with exact rational coefficients, known
// modulo q^(P+1).  Arithmetic never reads beyond the stated precision;
// products truncate to the minimum precision of the factors.
class QExpansion {
public:
    explicit QExpansion(long precision);  // the zero series
    static QExpansion constant(const Rat& value, long precision);

    long precision() const { return static_cast<long>(coeff_.size()) - 1; }
    const Rat& coefficient(long n) const;  // PrecisionError beyond the precision
    void set_coefficient(long n, const Rat& value);

    QExpansion truncated(long new_precision) const;

    friend QExpansion operator+(const QExpansion& a, const QExpansion& b);
    friend QExpansion operator-(const QExpansion& a, const QExpansion& b);
    friend QExpansion operator*(const QExpansion& a, const QExpansion& b);
    QExpansion scaled(const Rat& s) const;
    QExpansion pow(unsigned e) const;  // precision preserved

    // Multiplication by q^m (m >= 0); coefficients beyond the precision are
    // dropped, so the result has the same precision.
    QExpansion shifted_up(long m) const;

    // q -> q^2 substitution to the requested precision; needs input
    // precision >= floor(target/2).
    QExpansion dilated2(long target_precision) const;

    bool is_zero() const;
    bool is_integral() const;
    // Index of the first nonzero coefficient, or -1 for the zero series.
    long leading_index() const;

    friend bool operator==(const QExpansion&, const QExpansion&) = default;

private:
    std::vector<Rat> coeff_;  // a_0 .. a_P
};

// Classical generators, exact to the requested precision:
//   E2, E4, E6   normalized Eisenstein series (constant term 1)
//   Delta        q prod (1-q^n)^24
//   Delta2       q prod (1-q^n)^8 (1-q^2n)^8
//   A            2 E2(2z) - E2(z), weight 2 on Gamma_0(2)
//   Bminus       E4(z) - 4 E4(2z), weight 4, Fricke eigenvalue -1
enum class SeriesName { E2, E4, E6, Delta, Delta2, A, Bminus };

QExpansion standard_series(SeriesName name, long precision);

}  // namespace parinv::modforms
