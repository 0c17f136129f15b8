#include "parinv/cohomology.hpp"

#include <numeric>
#include <stdexcept>

#include "parinv/errors.hpp"
#include "parinv/repdims.hpp"

namespace parinv::cohomology {

using modforms::NewformCounts;
using packets::GL2LocalType;
using packets::Sign;
using symgroup::MultiplicityVector;
using symgroup::Sp4F2Irrep;

Weight::Weight(long l1, long l2) : lambda1(l1), lambda2(l2) {
    if (!(l1 >= l2 && l2 >= 0)) {
        throw std::invalid_argument("weight requires lambda1 >= lambda2 >= 0");
    }
}

// ---------------------------------------------------------------------------
// Level-2 endoscopic part: the displayed bilinear formulas, with the
// composite symbols expanded through the recorded q=2 decompositions.
// ---------------------------------------------------------------------------

EndoLevel2 endo_level2_from_counts(const NewformCounts& c1, const NewformCounts& c2) {
    const long long mixed = c1.tau_plus * c2.tau_minus + c1.tau_minus * c2.tau_plus;
    const long long aligned = c1.tau_plus * c2.tau_plus + c1.tau_minus * c2.tau_minus;
    const long long cusp_cusp = c1.tau4 * c2.tau4;
    const long long st_cusp = c1.tau4 * c2.tau2 + c1.tau2 * c2.tau4;
    const long long ps_cusp = c1.tau1 * c2.tau4 + c1.tau4 * c2.tau1;
    const long long ps_st = c1.tau1 * c2.tau2 + c1.tau2 * c2.tau1;
    const long long ps_ps = c1.tau1 * c2.tau1;

    EndoLevel2 out;
    out.h30.hodge = "H30";
    out.h30.mult.add(Sp4F2Irrep::Theta5, mixed);
    out.h30.mult.add(Sp4F2Irrep::Theta2, aligned);
    out.h30.mult.add(Sp4F2Irrep::Chi9_1, cusp_cusp);
    out.h30.total_dim = out.h30.mult.total_dimension();

    out.h21.hodge = "H21";
    auto& m = out.h21.mult;
    m.add(Sp4F2Irrep::Chi13_1, cusp_cusp);
    m.add(Sp4F2Irrep::Chi12_1, st_cusp);
    m.add_scaled(repdims::decompose_at_q2("theta1+theta4"), aligned);
    m.add_scaled(repdims::decompose_at_q2("theta3+theta4"), mixed);
    m.add_scaled(repdims::decompose_at_q2("chi2(1)"), ps_cusp);    // chi8(1) + chi12(1)
    m.add_scaled(repdims::decompose_at_q2("chi10(0)"), ps_st);     // theta1 + theta3 + theta4
    m.add_scaled(repdims::decompose_at_q2("chi1(0,0)"), ps_ps);    // theta0 + 2 theta1 + ...
    out.h21.total_dim = m.total_dimension();
    return out;
}

EndoLevel2 endo_level2(const Weight& w) {
    return endo_level2_from_counts(modforms::newform_counts(w.r1()),
                                   modforms::newform_counts(w.r2()));
}

IdentityCheck endo_identity(const Weight& w) {
    const EndoLevel2 pieces = endo_level2(w);
    IdentityCheck c;
    c.lhs = pieces.h21.total_dim - pieces.h30.total_dim;
    c.rhs = 5LL * modforms::dim_cusp(4, w.r1()) * modforms::dim_cusp(4, w.r2());
    c.holds = (c.lhs == c.rhs);
    return c;
}

// ---------------------------------------------------------------------------
// Prime level, generic table-driven sum
// ---------------------------------------------------------------------------

namespace {

PrimeLevelPiece prime_piece(long q, const std::vector<PairCount>& counts, Sign sign) {
    PrimeLevelPiece piece;
    const bool at_two = (q == 2);
    if (at_two) piece.mult = MultiplicityVector();
    for (const auto& pc : counts) {
        if (pc.count < 0) throw std::invalid_argument("pair counts must be non-negative");
        if (pc.count == 0) continue;
        const auto out = packets::restrict_endo(pc.sigma1, pc.sigma2, sign, q);
        if (out.is_zero()) continue;
        const long long dim_each = to_longlong(out.dim_at(q));
        piece.total_dim += pc.count * dim_each;
        piece.contributions.push_back({out.row_name, out.summands_str(), pc.count, dim_each});
        if (at_two) {
            MultiplicityVector row_mult;
            for (const auto& [lab, mult] : out.summands) {
                row_mult.add_scaled(repdims::decompose_at_q2(lab), mult);
            }
            piece.mult->add_scaled(row_mult, pc.count);
        }
    }
    return piece;
}

}  // namespace

EndoPrime endo_prime(long q, const std::vector<PairCount>& counts) {
    EndoPrime result;
    result.q = q;
    result.h30 = prime_piece(q, counts, Sign::Minus);
    result.h21 = prime_piece(q, counts, Sign::Plus);
    return result;
}

std::vector<PairCount> pair_counts_at_two(const NewformCounts& c1, const NewformCounts& c2) {
    // local components at the even place and their multiplicities among
    // newforms of the given weight
    struct TypeCount {
        GL2LocalType type;
        long long count;
    };
    auto locals = [](const NewformCounts& c) {
        return std::vector<TypeCount>{
            {GL2LocalType::principal_series({}, {}), c.tau1},
            {GL2LocalType::steinberg(packets::StTwistClass::Plain), c.tau_minus},
            {GL2LocalType::steinberg(packets::StTwistClass::XiU), c.tau_plus},
            {GL2LocalType::cuspidal_depth0(1), c.tau4},
        };
    };
    std::vector<PairCount> pairs;
    for (const auto& t1 : locals(c1)) {
        for (const auto& t2 : locals(c2)) {
            if (t1.count == 0 || t2.count == 0) continue;
            pairs.push_back({t1.type, t2.type, t1.count * t2.count});
        }
    }
    return pairs;
}

// ---------------------------------------------------------------------------
// Saito-Kurokawa part
// ---------------------------------------------------------------------------

SKLevel2 sk_level2_from_counts(long k, const NewformCounts& c) {
    // k even:  H30 = tau+ theta1 + tau- theta2 + tau1 (theta0+theta1+theta2)
    //          H11 = tau4 chi8(1) + tau+ theta5 + tau- theta3
    // k odd: the two formulas swap.
    MultiplicityVector holomorphic_even;
    holomorphic_even.add(Sp4F2Irrep::Theta1, c.tau_plus);
    holomorphic_even.add(Sp4F2Irrep::Theta2, c.tau_minus);
    holomorphic_even.add_scaled(repdims::decompose_at_q2("chi6(0)"), c.tau1);

    MultiplicityVector holomorphic_odd;
    holomorphic_odd.add(Sp4F2Irrep::Chi8_1, c.tau4);
    holomorphic_odd.add(Sp4F2Irrep::Theta5, c.tau_plus);
    holomorphic_odd.add(Sp4F2Irrep::Theta3, c.tau_minus);

    SKLevel2 out;
    out.h30.hodge = "H30";
    out.h11.hodge = "H11";
    out.h30.mult = (k % 2 == 0) ? holomorphic_even : holomorphic_odd;
    out.h11.mult = (k % 2 == 0) ? holomorphic_odd : holomorphic_even;
    out.h30.total_dim = out.h30.mult.total_dimension();
    out.h11.total_dim = out.h11.mult.total_dimension();
    return out;
}

SKLevel2 sk_level2(const Weight& w) {
    if (!w.scalar()) {
        throw std::invalid_argument("the Saito-Kurokawa part is computed for lambda1 = lambda2");
    }
    return sk_level2_from_counts(w.k(), modforms::newform_counts(w.r()));
}

IdentityCheck sk_identity(const Weight& w) {
    const SKLevel2 pieces = sk_level2(w);
    IdentityCheck c;
    c.lhs = pieces.h11.total_dim + pieces.h30.total_dim;
    c.rhs = 5LL * modforms::dim_cusp(4, w.r());
    c.holds = (c.lhs == c.rhs);
    return c;
}

// ---------------------------------------------------------------------------
// Vanishing flags and the squarefree-level lift
// ---------------------------------------------------------------------------

VanishingFlags vanishing_flags(const Weight& w) {
    VanishingFlags f;
    f.inner_e_vanishes = (w.lambda1 > w.lambda2 && w.lambda2 > 0);
    f.endo_h3_vanishes_at_level2 = w.scalar();
    return f;
}

namespace {

bool squarefree(long n) {
    if (n < 1) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
    }
    return true;
}

}  // namespace

YoshidaResult yoshida_level(long n1, long n2, std::optional<std::pair<long, long>> weights) {
    if (!squarefree(n1) || !squarefree(n2)) {
        throw std::invalid_argument("levels must be squarefree positive integers");
    }
    YoshidaResult res;
    if (std::gcd(n1, n2) == 1) {
        res.admissible = false;
        res.reason = "gcd(N1, N2) = 1: no common place of discrete series";
        return res;
    }
    res.admissible = true;
    res.level = std::lcm(n1, n2);
    if (weights) {
        const auto [r1, r2] = *weights;
        if (!(r1 > r2 && r2 >= 2 && r1 % 2 == 0 && r2 % 2 == 0)) {
            throw std::invalid_argument("weights must be even with r1 > r2 >= 2");
        }
        res.sym_power = r2 - 2;
        res.det_power = (r1 - r2) / 2 + 2;
    }
    return res;
}

}  // namespace parinv::cohomology
