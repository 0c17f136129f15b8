#include "parinv/modforms.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "parinv/errors.hpp"

namespace parinv::modforms {

namespace {

void require_weight(long k) {
    if (k < 2 || k % 2 != 0) {
        throw UnsupportedWeightError("weight must be even and >= 2, got " + std::to_string(k));
    }
}

}  // namespace

long dim_cusp(int level, long k) {
    require_weight(k);
    if (k == 2) return 0;  // genus of X_0(N), zero for N <= 4
    switch (level) {
        case 1: {
            const long d = k / 12;
            return (k % 12 == 2) ? d - 1 : d;
        }
        case 2:
            return k / 4 - 1;
        case 4:
            return k / 2 - 2;
        default:
            throw std::invalid_argument("level must be 1, 2 or 4");
    }
}

// ---------------------------------------------------------------------------
// Bases
// ---------------------------------------------------------------------------

namespace {

// Reduce a spanning set to the reduced echelon basis with unit pivots at
// q^1..q^d.  Throws ConsistencyError if the pivots do not come out there.
std::vector<QExpansion> echelonize(std::vector<QExpansion> rows) {
    const long d = static_cast<long>(rows.size());
    for (long i = 0; i < d; ++i) {
        const long pivot_col = i + 1;
        long pivot_row = -1;
        for (long r = i; r < d; ++r) {
            if (rows[r].coefficient(pivot_col) != 0) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) {
            throw ConsistencyError("cusp form basis is not in echelon position");
        }
        std::swap(rows[i], rows[pivot_row]);
        const Rat inv = Rat(1) / rows[i].coefficient(pivot_col);
        rows[i] = rows[i].scaled(inv);
        for (long r = 0; r < d; ++r) {
            if (r == i) continue;
            const Rat c = rows[r].coefficient(pivot_col);
            if (c != 0) rows[r] = rows[r] - rows[i].scaled(c);
        }
    }
    for (long i = 0; i < d; ++i) {
        if (rows[i].leading_index() != i + 1) {
            throw ConsistencyError("echelon basis has a gap in leading terms");
        }
    }
    return rows;
}

std::vector<QExpansion> level1_spanning_set(long k, long precision) {
    const long d = dim_cusp(1, k);
    const QExpansion delta = standard_series(SeriesName::Delta, precision);
    const QExpansion e4 = standard_series(SeriesName::E4, precision);
    const QExpansion e6 = standard_series(SeriesName::E6, precision);
    std::vector<QExpansion> rows;
    for (long j = 1; j <= d; ++j) {
        const long w = k - 12 * j;  // even, >= 0, never 2 for j <= d
        long a = 0, b = 0;
        switch (w % 6) {
            case 0:
                b = w / 6;
                break;
            case 4:
                a = 1;
                b = (w - 4) / 6;
                break;
            case 2:
                a = 2;
                b = (w - 8) / 6;
                break;
        }
        rows.push_back(delta.pow(j) * e4.pow(a) * e6.pow(b));
    }
    return rows;
}

std::vector<QExpansion> level2_spanning_set(long k, long precision) {
    const QExpansion d2 = standard_series(SeriesName::Delta2, precision);
    const QExpansion a_series = standard_series(SeriesName::A, precision);
    const QExpansion b_series = standard_series(SeriesName::Bminus, precision);
    std::vector<QExpansion> rows;
    // Delta2 A^a B^b over 2a + 4b = k - 8
    for (long b = 0; 8 + 4 * b <= k; ++b) {
        const long rem = k - 8 - 4 * b;
        if (rem < 0 || rem % 2 != 0) continue;
        const long a = rem / 2;
        rows.push_back(d2 * a_series.pow(a) * b_series.pow(b));
    }
    return rows;
}

}  // namespace

std::vector<QExpansion> cusp_basis(int level, long k, long precision) {
    require_weight(k);
    if (k < 4) throw UnsupportedWeightError("cusp bases start at weight 4");
    if (level != 1 && level != 2) throw std::invalid_argument("basis levels are 1 and 2");
    const long d = dim_cusp(level, k);
    if (precision < 2 * d + 10) {
        throw PrecisionError("cusp_basis needs precision >= 2*dim + 10");
    }
    auto rows = (level == 1) ? level1_spanning_set(k, precision)
                             : level2_spanning_set(k, precision);
    if (static_cast<long>(rows.size()) != d) {
        throw ConsistencyError("spanning set size disagrees with the dimension formula");
    }
    return echelonize(std::move(rows));
}

// ---------------------------------------------------------------------------
// Hecke matrices
// ---------------------------------------------------------------------------

Int IntMatrix::trace() const {
    Int t = 0;
    for (long i = 0; i < n; ++i) t += at(i, i);
    return t;
}

namespace {

QExpansion apply_u2(const QExpansion& f) {
    const long p = f.precision() / 2;
    QExpansion g(p);
    for (long n = 0; n <= p; ++n) g.set_coefficient(n, f.coefficient(2 * n));
    return g;
}

QExpansion apply_t2(const QExpansion& f, long k) {
    const long p = f.precision() / 2;
    const Rat two_k1(pow_int(Int(2), k - 1));
    QExpansion g(p);
    for (long n = 0; n <= p; ++n) {
        Rat v = f.coefficient(2 * n);
        if (n % 2 == 0 && n > 0) v += two_k1 * f.coefficient(n / 2);
        g.set_coefficient(n, v);
    }
    return g;
}

}  // namespace

IntMatrix hecke_matrix(HeckeOp op, long k, long precision) {
    const int level = (op == HeckeOp::T2Level1) ? 1 : 2;
    const long d = (k >= 4) ? dim_cusp(level, k) : 0;
    if (d == 0) return IntMatrix{};
    if (precision < 2 * d + 10) {
        throw PrecisionError("hecke_matrix needs precision >= 2*dim + 10");
    }

    const auto basis = cusp_basis(level, k, precision);
    IntMatrix m;
    m.n = d;
    m.a.assign(d * d, Int(0));

    for (long i = 0; i < d; ++i) {
        QExpansion g = (op == HeckeOp::U2Level2) ? apply_u2(basis[i]) : apply_t2(basis[i], k);
        // reduced echelon basis: the expansion coefficients can be read off
        // the pivot columns, and the remainder must vanish to full precision
        for (long j = 0; j < d; ++j) {
            const Rat c = g.coefficient(j + 1);
            if (!is_integer(c)) {
                throw ConsistencyError("Hecke matrix entry is not integral");
            }
            m.a[j * d + i] = to_integer(c);
            if (c != 0) g = g - basis[j].truncated(g.precision()).scaled(c);
        }
        if (!g.is_zero()) {
            throw ConsistencyError("Hecke image does not lie in the span of the basis");
        }
    }
    return m;
}

IntMatrix hecke_matrix(HeckeOp op, long k) {
    const int level = (op == HeckeOp::T2Level1) ? 1 : 2;
    const long d = (k >= 4) ? dim_cusp(level, k) : 0;
    return hecke_matrix(op, k, 2 * d + 10);
}

// ---------------------------------------------------------------------------
// Newform counts and the Atkin-Lehner split
// ---------------------------------------------------------------------------

Int hecke_trace_difference(long k) {
    return hecke_matrix(HeckeOp::U2Level2, k).trace() -
           hecke_matrix(HeckeOp::T2Level1, k).trace();
}

std::pair<long, long> al_split_oracle(long r) {
    require_weight(r);
    // trace of the normalized Fricke involution on S_r(Gamma_0(2)):
    // Delta2 A^a Bminus^b has eigenvalue (-1)^(a+b), old pairs contribute 0
    long fricke_trace = 0;
    for (long b = 0; 8 + 4 * b <= r; ++b) {
        const long rem = r - 8 - 4 * b;
        if (rem < 0 || rem % 2 != 0) continue;
        const long a = rem / 2;
        fricke_trace += ((a + b) % 2 == 0) ? 1 : -1;
    }
    const long tau1 = dim_cusp(1, r);
    const long tau2 = dim_cusp(2, r) - 2 * tau1;
    const long plus2 = tau2 + fricke_trace;
    if (plus2 < 0 || plus2 % 2 != 0 || plus2 > 2 * tau2) {
        throw ConsistencyError("Fricke trace incompatible with the newform count");
    }
    return {plus2 / 2, tau2 - plus2 / 2};
}

namespace {

NewformCounts compute_newform_counts(long r) {
    NewformCounts c;
    c.r = r;
    c.tau1 = dim_cusp(1, r);
    const long dim2 = dim_cusp(2, r);
    const long dim4 = dim_cusp(4, r);
    c.dim_gamma0_4 = dim4;
    c.tau2 = dim2 - 2 * c.tau1;
    c.tau4 = dim4 - 3 * c.tau1 - 2 * c.tau2;
    if (c.tau2 < 0 || c.tau4 < 0) {
        throw ConsistencyError("old/new bookkeeping went negative at r=" + std::to_string(r));
    }

    // trace method: tr U_2 - tr T_2 = -2^(r/2-1) (tau+ - tau-)
    Int diff = (r >= 4) ? hecke_trace_difference(r) : Int(0);
    const Int scale = pow_int(Int(2), r / 2 - 1);
    if (!mpz_divisible_p(diff.get_mpz_t(), scale.get_mpz_t())) {
        throw ConsistencyError("trace difference not divisible by 2^(r/2-1)");
    }
    const Int signed_split = -diff / scale;  // tau+ - tau-
    const Int plus2 = signed_split + c.tau2;
    if (plus2 < 0 || plus2 % 2 != 0) {
        throw ConsistencyError("trace method produced a non-integral split");
    }
    c.tau_plus = to_longlong(plus2 / 2);
    c.tau_minus = c.tau2 - c.tau_plus;
    if (c.tau_minus < 0) {
        throw ConsistencyError("trace method produced a negative split");
    }

    // both methods are part of the contract
    const auto oracle = al_split_oracle(r);
    if (oracle != std::make_pair(c.tau_plus, c.tau_minus)) {
        throw ConsistencyError("Atkin-Lehner split: trace method and structure count disagree");
    }
    return c;
}

std::mutex counts_mutex;
std::map<long, NewformCounts> counts_cache;

}  // namespace

NewformCounts newform_counts(long r) {
    require_weight(r);
    if (r > 200) throw UnsupportedWeightError("newform_counts supports r <= 200");
    {
        std::lock_guard<std::mutex> lock(counts_mutex);
        if (auto it = counts_cache.find(r); it != counts_cache.end()) return it->second;
    }
    const NewformCounts c = compute_newform_counts(r);
    std::lock_guard<std::mutex> lock(counts_mutex);
    counts_cache.emplace(r, c);
    return c;
}

}  // namespace parinv::modforms
