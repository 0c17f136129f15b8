#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parinv/modforms.hpp"
#include "parinv/packets.hpp"
#include "parinv/symgroup.hpp"

namespace parinv::cohomology {

// Local system weight (lambda1 >= lambda2 >= 0) and the attached elliptic
// weights r1 = lambda1+lambda2+4, r2 = lambda1-lambda2+2 (both even, r1 > r2)
// and Siegel weights (k1, k2) = (lambda1+3, lambda2+3).
struct Weight {
    long lambda1 = 0;
    long lambda2 = 0;

    Weight(long l1, long l2);

    long r1() const { return lambda1 + lambda2 + 4; }
    long r2() const { return lambda1 - lambda2 + 2; }
    long k1() const { return lambda1 + 3; }
    long k2() const { return lambda2 + 3; }
    bool scalar() const { return lambda1 == lambda2; }
    // For lambda1 = lambda2: k = lambda1 + 3 and r = 2k - 2.
    long k() const { return lambda1 + 3; }
    long r() const { return 2 * k() - 2; }
};

struct CohomologyPiece {
    std::string hodge;  // "H30", "H21", "H11"
    symgroup::MultiplicityVector mult;
    long long total_dim = 0;
};

struct EndoLevel2 {
    CohomologyPiece h30;  // also H03 by the displayed isomorphism
    CohomologyPiece h21;  // also H12
};

// The level-2 endoscopic multiplicity formulas, evaluated from the newform
// counts at weights r1 and r2.
EndoLevel2 endo_level2(const Weight& w);
EndoLevel2 endo_level2_from_counts(const modforms::NewformCounts& c1,
                                   const modforms::NewformCounts& c2);

struct IdentityCheck {
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
};

// dim H21 - dim H30 = 5 dim S_{r1}(Gamma_0(4)) dim S_{r2}(Gamma_0(4)),
// the two sides through disjoint code paths.
IdentityCheck endo_identity(const Weight& w);

// ---------------------------------------------------------------------------
// Prime-level endoscopic calculator
// ---------------------------------------------------------------------------

// Caller-supplied multiplicity of an (unordered) pair of local types among
// the weight-(r1, r2) automorphic pairs that are spherical away from the
// fixed prime.
struct PairCount {
    packets::GL2LocalType sigma1;
    packets::GL2LocalType sigma2;
    long long count = 0;
};

struct LabelledContribution {
    std::string row;      // catalogue row
    std::string labels;   // restriction constituents
    long long count = 0;  // pair multiplicity
    long long dim_each = 0;
};

struct PrimeLevelPiece {
    long long total_dim = 0;
    std::vector<LabelledContribution> contributions;
    // Sigma_6 decomposition, available at q = 2 only.
    std::optional<symgroup::MultiplicityVector> mult;
};

struct EndoPrime {
    long q = 0;
    PrimeLevelPiece h30;  // non-generic member at the fixed prime
    PrimeLevelPiece h21;  // generic member
};

EndoPrime endo_prime(long q, const std::vector<PairCount>& counts);

// The pair-count table at q = 2 induced by newform counts: principal series
// for level-1 forms, St / xi_u St for the Atkin-Lehner -1 / +1 level-2
// newforms, the depth-zero cuspidal for level-4 newforms.
std::vector<PairCount> pair_counts_at_two(const modforms::NewformCounts& c1,
                                          const modforms::NewformCounts& c2);

// ---------------------------------------------------------------------------
// Saito-Kurokawa part (lambda1 = lambda2)
// ---------------------------------------------------------------------------

struct SKLevel2 {
    CohomologyPiece h30;  // also H03
    CohomologyPiece h11;  // also H22
};

SKLevel2 sk_level2(const Weight& w);
SKLevel2 sk_level2_from_counts(long k, const modforms::NewformCounts& c);

// dim H11 + dim H30 = 5 dim S_r(Gamma_0(4)).
IdentityCheck sk_identity(const Weight& w);

// ---------------------------------------------------------------------------
// Vanishing and the squarefree-level lift utility
// ---------------------------------------------------------------------------

struct VanishingFlags {
    bool inner_e_vanishes = false;          // lambda1 > lambda2 > 0
    bool endo_h3_vanishes_at_level2 = false;  // lambda1 = lambda2 (S_2(Gamma_0(2)) = 0)
};

VanishingFlags vanishing_flags(const Weight& w);

struct YoshidaResult {
    bool admissible = false;
    std::string reason;  // set when rejected
    long level = 0;      // lcm(N1, N2)
    // vector-valued type Sym^{sym_power} tensor det^{det_power}, when the
    // elliptic weights were supplied
    std::optional<long> sym_power;
    std::optional<long> det_power;
};

// Level bookkeeping for the lift of two newforms of squarefree levels N1, N2
// with gcd(N1, N2) > 1; optional weights r1 > r2 >= 2 (both even) give the
// vector-valued type.
YoshidaResult yoshida_level(long n1, long n2,
                            std::optional<std::pair<long, long>> weights = std::nullopt);

}  // namespace parinv::cohomology
