#include "parinv/qexpansion.hpp"

#include <algorithm>
#include <stdexcept>

#include "parinv/errors.hpp"

namespace parinv::modforms {

QExpansion::QExpansion(long precision) {
    if (precision < 0) throw std::invalid_argument("precision must be non-negative");
    coeff_.assign(precision + 1, Rat(0));
}

QExpansion QExpansion::constant(const Rat& value, long precision) {
    QExpansion s(precision);
    s.coeff_[0] = value;
    return s;
}

const Rat& QExpansion::coefficient(long n) const {
    if (n < 0 || n >= static_cast<long>(coeff_.size())) {
        throw PrecisionError("coefficient index " + std::to_string(n) +
                             " beyond precision " + std::to_string(precision()));
    }
    return coeff_[n];
}

void QExpansion::set_coefficient(long n, const Rat& value) {
    if (n < 0 || n >= static_cast<long>(coeff_.size())) {
        throw PrecisionError("coefficient index beyond precision");
    }
    coeff_[n] = value;
    coeff_[n].canonicalize();
}

QExpansion QExpansion::truncated(long new_precision) const {
    if (new_precision > precision()) {
        throw PrecisionError("cannot extend a series by truncation");
    }
    QExpansion s(new_precision);
    std::copy(coeff_.begin(), coeff_.begin() + new_precision + 1, s.coeff_.begin());
    return s;
}

QExpansion operator+(const QExpansion& a, const QExpansion& b) {
    const long p = std::min(a.precision(), b.precision());
    QExpansion s(p);
    for (long n = 0; n <= p; ++n) s.coeff_[n] = a.coeff_[n] + b.coeff_[n];
    return s;
}

QExpansion operator-(const QExpansion& a, const QExpansion& b) {
    const long p = std::min(a.precision(), b.precision());
    QExpansion s(p);
    for (long n = 0; n <= p; ++n) s.coeff_[n] = a.coeff_[n] - b.coeff_[n];
    return s;
}

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
    const long p = std::min(a.precision(), b.precision());
    QExpansion s(p);
    for (long i = 0; i <= p; ++i) {
        if (a.coeff_[i] == 0) continue;
        for (long j = 0; i + j <= p; ++j) {
            if (b.coeff_[j] == 0) continue;
            s.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
        }
    }
    return s;
}

QExpansion QExpansion::scaled(const Rat& s) const {
    QExpansion r(precision());
    for (long n = 0; n <= precision(); ++n) r.coeff_[n] = coeff_[n] * s;
    return r;
}

QExpansion QExpansion::pow(unsigned e) const {
    QExpansion result = QExpansion::constant(Rat(1), precision());
    QExpansion base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

QExpansion QExpansion::shifted_up(long m) const {
    if (m < 0) throw std::invalid_argument("shift must be non-negative");
    QExpansion s(precision());
    for (long n = 0; n + m <= precision(); ++n) s.coeff_[n + m] = coeff_[n];
    return s;
}

QExpansion QExpansion::dilated2(long target_precision) const {
    if (precision() < target_precision / 2) {
        throw PrecisionError("insufficient precision for q -> q^2 substitution");
    }
    QExpansion s(target_precision);
    for (long n = 0; 2 * n <= target_precision; ++n) s.coeff_[2 * n] = coeff_[n];
    return s;
}

bool QExpansion::is_zero() const {
    for (const auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

bool QExpansion::is_integral() const {
    for (auto c : coeff_) {
        c.canonicalize();
        if (c.get_den() != 1) return false;
    }
    return true;
}

long QExpansion::leading_index() const {
    for (long n = 0; n <= precision(); ++n)
        if (coeff_[n] != 0) return n;
    return -1;
}

// ---------------------------------------------------------------------------
// Standard series
// ---------------------------------------------------------------------------

namespace {

// sum_{n>=1} sigma_k(n) q^n
QExpansion sigma_series(unsigned k, long precision) {
    QExpansion s(precision);
    for (long d = 1; d <= precision; ++d) {
        const Int dk = pow_int(Int(d), k);
        for (long n = d; n <= precision; n += d) {
            s.set_coefficient(n, s.coefficient(n) + Rat(dk));
        }
    }
    return s;
}

// prod_{n>=1} (1 - q^n) by the pentagonal number expansion
QExpansion euler_product(long precision) {
    QExpansion s(precision);
    s.set_coefficient(0, Rat(1));
    for (long k = 1;; ++k) {
        const long g1 = k * (3 * k - 1) / 2;
        const long g2 = k * (3 * k + 1) / 2;
        if (g1 > precision && g2 > precision) break;
        const Rat sign((k % 2 == 0) ? 1 : -1);
        if (g1 <= precision) s.set_coefficient(g1, s.coefficient(g1) + sign);
        if (g2 <= precision) s.set_coefficient(g2, s.coefficient(g2) + sign);
    }
    return s;
}

QExpansion eisenstein(unsigned weight, long multiplier, long precision) {
    // 1 + multiplier * sum sigma_{weight-1}(n) q^n
    QExpansion s = sigma_series(weight - 1, precision).scaled(Rat(multiplier));
    s.set_coefficient(0, Rat(1));
    return s;
}

}  // namespace

QExpansion standard_series(SeriesName name, long precision) {
    switch (name) {
        case SeriesName::E2:
            return eisenstein(2, -24, precision);
        case SeriesName::E4:
            return eisenstein(4, 240, precision);
        case SeriesName::E6:
            return eisenstein(6, -504, precision);
        case SeriesName::Delta: {
            const QExpansion eta = euler_product(precision);
            return eta.pow(24).shifted_up(1);
        }
        case SeriesName::Delta2: {
            const QExpansion eta = euler_product(precision);
            const QExpansion eta2 = eta.dilated2(precision);
            return (eta * eta2).pow(8).shifted_up(1);
        }
        case SeriesName::A: {
            const QExpansion e2 = standard_series(SeriesName::E2, precision);
            return e2.dilated2(precision).scaled(Rat(2)) - e2;
        }
        case SeriesName::Bminus: {
            const QExpansion e4 = standard_series(SeriesName::E4, precision);
            return e4 - e4.dilated2(precision).scaled(Rat(4));
        }
    }
    throw std::invalid_argument("unknown series name");
}

}  // namespace parinv::modforms
