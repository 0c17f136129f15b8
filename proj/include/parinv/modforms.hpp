#pragma once

#include <utility>
#include <vector>

#include "parinv/numeric.hpp"
#include "parinv/qexpansion.hpp"

namespace parinv::modforms {

// dim S_k(Gamma_0(N)) for N in {1,2,4} and even k >= 2, by the classical
// closed forms (k = 2 gives the genus, zero here).
long dim_cusp(int level, long k);

// Echelonized integral basis of S_k(Gamma_0(N)), N in {1,2}: basis element i
// has leading term q^(i+1) with unit coefficient.  Level 1 uses the
// Delta^j E4^a E6^b triangular system, level 2 the Delta2 A^a Bminus^b
// monomials.  Requires precision >= 2*dim + 10.
std::vector<QExpansion> cusp_basis(int level, long k, long precision);

enum class HeckeOp {
    T2Level1,  // (T_2 f)_n = a_{2n} + 2^(k-1) a_{n/2} on S_k(SL_2(Z))
    U2Level2,  // (U_2 f)_n = a_{2n} on S_k(Gamma_0(2))
};

struct IntMatrix {
    long n = 0;
    std::vector<Int> a;  // row-major, n*n entries

    const Int& at(long i, long j) const { return a[i * n + j]; }
    Int trace() const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

// Matrix of the operator in the echelon basis; entries are exact integers,
// and the overdetermined solve must be consistent to the full working
// precision (ConsistencyError otherwise).
IntMatrix hecke_matrix(HeckeOp op, long k, long precision);
IntMatrix hecke_matrix(HeckeOp op, long k);  // default precision 2*dim + 10

struct NewformCounts {
    long r = 0;          // even weight
    long tau1 = 0;       // dim S_r(SL_2(Z))
    long tau2 = 0;       // dim S_r(Gamma_0(2))^new
    long tau4 = 0;       // dim S_r(Gamma_0(4))^new
    long tau_plus = 0;   // Atkin-Lehner +1 part of the level-2 new subspace
    long tau_minus = 0;  // Atkin-Lehner -1 part
    long dim_gamma0_4 = 0;  // dim S_r(Gamma_0(4)), full space

    friend bool operator==(const NewformCounts&, const NewformCounts&) = default;
};

// New-subspace dimensions by divisor bookkeeping, with the Atkin-Lehner
// split computed by the U_2/T_2 trace comparison and cross-checked against
// the structure-count oracle.  Disagreement is a hard failure.  Cached;
// 2 <= r <= 200 even.
NewformCounts newform_counts(long r);

// Independent oracle for the split: signed count of the Delta2 A^a Bminus^b
// monomial basis under the normalized Fricke involution (eigenvalues +1, -1,
// -1 respectively), plus tau_plus + tau_minus = tau2.  Old pairs contribute
// trace zero.
std::pair<long, long> al_split_oracle(long r);

// Trace of the level-2 U_2 minus the level-1 T_2 on weight k; always
// divisible by 2^(k/2-1), the quotient being -(tau_plus - tau_minus).
Int hecke_trace_difference(long k);

}  // namespace parinv::modforms
