#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parinv/errors.hpp"
#include "parinv/packets.hpp"

using namespace parinv;
using namespace parinv::packets;

namespace {

const SmoothChar kUnram{CharRam::Unramified, 0};
const SmoothChar kTame1{CharRam::Tame, 1};
const SmoothChar kWild{CharRam::Wilder, 0};

GL2LocalType ur_ps() { return GL2LocalType::principal_series(kUnram, kUnram); }
GL2LocalType st() { return GL2LocalType::steinberg(); }
GL2LocalType xiu_st() { return GL2LocalType::steinberg(StTwistClass::XiU); }
GL2LocalType xit_st() { return GL2LocalType::steinberg(StTwistClass::XiT); }
GL2LocalType cusp(long l) { return GL2LocalType::cuspidal_depth0(l); }
GL2LocalType deep_cusp() { return GL2LocalType::cuspidal_positive_depth(); }

// a small alphabet for exhaustive property checks
std::vector<GL2LocalType> alphabet() {
    return {ur_ps(),
            GL2LocalType::principal_series(kTame1, kUnram),
            GL2LocalType::principal_series(kWild, kUnram),
            st(),
            xiu_st(),
            xit_st(),
            GL2LocalType::steinberg(StTwistClass::Wilder),
            cusp(1),
            cusp(2),
            deep_cusp()};
}

}  // namespace

TEST_CASE("packet lookup matches the table") {
    // (mu1 St, mu3 x mu4): only the generic member exists
    auto p = endoscopic_packet(st(), ur_ps());
    CHECK(p.plus.exists);
    CHECK(p.plus.description == "mu1 mu3^-1 St >< mu3");
    CHECK(!p.minus.exists);

    // two non-isomorphic cuspidals: both members cuspidal
    p = endoscopic_packet(cusp(1), cusp(2));
    CHECK(p.plus.exists);
    CHECK(p.plus.cuspidal);
    CHECK(p.minus.exists);
    CHECK(p.minus.cuspidal);
    CHECK(p.plus.description == "cuspidal");

    // (xi mu St, mu St): generic member is the delta, the other cuspidal
    p = endoscopic_packet(xiu_st(), st());
    CHECK(p.plus.description == "delta(St nu^1/2 >< mu nu^-1/2)");
    CHECK(p.minus.exists);
    CHECK(p.minus.cuspidal);

    // equal twists: tau(S)/tau(T)
    p = endoscopic_packet(st(), st());
    CHECK(p.plus.description == "tau(S, nu^-1/2 mu)");
    CHECK(p.minus.description == "tau(T, nu^-1/2 mu)");
    CHECK(!p.minus.cuspidal);

    // Pi- exists exactly when both inputs are in the discrete series
    for (const auto& a : alphabet()) {
        for (const auto& b : alphabet()) {
            const auto pk = endoscopic_packet(a, b);
            CHECK(pk.plus.exists);
            CHECK(pk.minus.exists == (a.is_discrete_series() && b.is_discrete_series()));
        }
    }
}

TEST_CASE("packet symmetry") {
    for (const auto& a : alphabet()) {
        for (const auto& b : alphabet()) {
            const auto p1 = endoscopic_packet(a, b);
            const auto p2 = endoscopic_packet(b, a);
            CHECK(p1.plus.description == p2.plus.description);
            CHECK(p1.minus.exists == p2.minus.exists);
            CHECK(p1.minus.description == p2.minus.description);
            for (long q : {2L, 3L}) {
                if (q == 2 && (a == xit_st() || b == xit_st())) continue;
                for (Sign s : {Sign::Plus, Sign::Minus}) {
                    RestrictionOutcome r1, r2;
                    int threw1 = 0, threw2 = 0;
                    try {
                        r1 = restrict_endo(a, b, s, q);
                    } catch (const std::exception&) {
                        threw1 = 1;
                    }
                    try {
                        r2 = restrict_endo(b, a, s, q);
                    } catch (const std::exception&) {
                        threw2 = 1;
                    }
                    CHECK(threw1 == threw2);
                    if (!threw1) {
                        CHECK(r1.summands == r2.summands);
                        CHECK(r1.dim_poly == r2.dim_poly);
                    }
                }
            }
        }
    }
}

TEST_CASE("restrict_endo worked rows") {
    // (St, St, -) at q=2: theta2 of dimension 5
    auto out = restrict_endo(st(), st(), Sign::Minus, 2);
    CHECK(out.summands_str() == "theta2");
    CHECK(out.dim_at(2) == 5);

    // positive-depth cuspidal kills the invariants at any q
    for (long q : {2L, 3L, 4L, 5L}) {
        CHECK(restrict_endo(deep_cusp(), st(), Sign::Plus, q).is_zero());
    }

    // two non-isomorphic cuspidals, sign -, odd q: printed zero row
    CHECK(restrict_endo(cusp(1), cusp(2), Sign::Minus, 3).is_zero());

    // (St, St, +) at q=2: theta1 + theta4, dimension 25
    out = restrict_endo(st(), st(), Sign::Plus, 2);
    CHECK(out.summands_str() == "theta1 + theta4");
    CHECK(out.dim_at(2) == 25);

    // (St, xiu St, +): theta3 + theta4 (21 at q=2)
    out = restrict_endo(st(), xiu_st(), Sign::Plus, 2);
    CHECK(out.summands_str() == "theta3 + theta4");
    CHECK(out.dim_at(2) == 21);

    // unramified pair at q=2: chi1(0,0), 45 = (q+1)^2 (q^2+1)
    out = restrict_endo(ur_ps(), ur_ps(), Sign::Plus, 2);
    CHECK(out.summands_str() == "chi1(0,0)");
    CHECK(out.dim_at(2) == 45);

    // Pi- does not exist for Borel-induced input
    out = restrict_endo(ur_ps(), st(), Sign::Minus, 2);
    CHECK(out.is_zero());
    CHECK(!out.member_exists);

    // both cuspidal at q=2 are isomorphic (one depth-zero cuspidal only)
    out = restrict_endo(cusp(1), cusp(2), Sign::Plus, 2);
    CHECK(out.summands_str() == "chi13(1)");
    CHECK(out.dim_at(2) == 10);
    out = restrict_endo(cusp(1), cusp(2), Sign::Minus, 2);
    CHECK(out.summands_str() == "chi9(1)");
    CHECK(out.dim_at(2) == 5);

    // at q=3 the parameters 1 and 3 are conjugate (l ~ q l), so the pair is
    // isomorphic; 1 and 5 are genuinely distinct with equal central character
    out = restrict_endo(cusp(1), cusp(3), Sign::Plus, 3);
    CHECK(out.row_name == "(rho1, rho2 ~ rho1, +)");
    CHECK(out.summands_str() == "chi8'(1)");
    out = restrict_endo(cusp(1), cusp(5), Sign::Plus, 3);
    CHECK(out.row_name == "(rho1, rho2 !~ rho1, +)");
    CHECK(out.summands_str() == "X5(1,2)");
    CHECK(out.dim_at(3) == 40);
    out = restrict_endo(cusp(1), cusp(5), Sign::Minus, 3);
    CHECK(out.is_zero());

    // (mu St, mu rho2) at q=2: chi12(1) of dimension 10
    out = restrict_endo(st(), cusp(1), Sign::Plus, 2);
    CHECK(out.summands_str() == "chi12(1)");
    CHECK(out.dim_at(2) == 10);

    // odd-q labels are the Shinoda column
    out = restrict_endo(st(), st(), Sign::Minus, 3);
    CHECK(out.summands_str() == "theta3'(0)");
    CHECK(out.dim_at(3) == 15);
    out = restrict_endo(st(), xit_st(), Sign::Plus, 3);
    CHECK(out.summands_str() == "tau3(0)");
    CHECK(out.dim_at(3) == 81 + 9);
    CHECK(restrict_endo(st(), xit_st(), Sign::Minus, 3).is_zero());
}

TEST_CASE("restrict_endo input validation") {
    CHECK_THROWS_AS(restrict_endo(st(), xit_st(), Sign::Plus, 2), InconsistentInputError);
    CHECK_THROWS_AS(restrict_endo(st(), st(), Sign::Plus, 6), std::invalid_argument);
    CHECK_THROWS_AS(restrict_endo(st(), st(), Sign::Plus, 1), std::invalid_argument);
    // non-regular cuspidal parameter: l = 0 mod q+1
    CHECK_THROWS_AS(restrict_endo(cusp(3), st(), Sign::Plus, 2), std::invalid_argument);
    // cuspidal with nontrivial central character has no kappa^{-1}
    CHECK_THROWS_AS(restrict_endo(cusp(1), st(), Sign::Plus, 4), NotInImageError);
    CHECK(restrict_endo(cusp(3), st(), Sign::Plus, 4).summands_str() == "chi12(1)");
}

TEST_CASE("restrict dimensions agree with the dimension catalogue") {
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
        for (const auto& a : alphabet()) {
            for (const auto& b : alphabet()) {
                if (q % 2 == 0 && (a == xit_st() || b == xit_st())) continue;
                for (Sign s : {Sign::Plus, Sign::Minus}) {
                    RestrictionOutcome out;
                    try {
                        out = restrict_endo(a, b, s, q);
                    } catch (const NotInImageError&) {
                        continue;  // nontrivial central character rows
                    } catch (const std::invalid_argument&) {
                        continue;  // non-regular parameters at this q
                    }
                    if (out.is_zero()) {
                        CHECK(out.dim_poly.is_zero());
                        continue;
                    }
                    // single-label outcomes must match the printed polynomial
                    if (out.summands.size() == 1 && out.summands[0].second == 1) {
                        CHECK(repdims::evaluate_dim(out.summands[0].first, q) == out.dim_at(q));
                    }
                    // zero-propagation: nonzero outcome needs K^(1) invariants on both sides
                    CHECK(a.has_k1_invariants());
                    CHECK(b.has_k1_invariants());
                }
            }
        }
    }
}

TEST_CASE("restrict_sk worked rows") {
    // sigma = St in S at q=2: theta2, dimension 5
    auto out = restrict_sk({st(), true}, 2);
    CHECK(out.summands_str() == "theta2");
    CHECK(out.dim_at(2) == 5);

    // depth-zero cuspidal in S: zero at every q
    for (long q : {2L, 3L, 5L}) CHECK(restrict_sk({cusp(1), true}, q).is_zero());

    // unramified mu x mu^-1, not in S, q=2: chi6(0) of dimension 15
    out = restrict_sk({GL2LocalType::principal_series_self_dual(kUnram), false}, 2);
    CHECK(out.summands_str() == "chi6(0)");
    CHECK(out.dim_at(2) == 15);

    // remaining even-q rows
    CHECK(restrict_sk({st(), false}, 2).summands_str() == "theta3");
    CHECK(restrict_sk({xiu_st(), false}, 2).summands_str() == "theta1");
    CHECK(restrict_sk({xiu_st(), false}, 2).dim_at(2) == 9);
    CHECK(restrict_sk({xiu_st(), true}, 2).summands_str() == "theta5");
    CHECK(restrict_sk({xiu_st(), true}, 2).dim_at(2) == 1);
    CHECK(restrict_sk({cusp(1), false}, 2).summands_str() == "chi8(1)");
    CHECK(restrict_sk({cusp(1), false}, 2).dim_at(2) == 5);

    // odd q rows
    CHECK(restrict_sk({st(), false}, 3).summands_str() == "theta4'(0)");
    CHECK(restrict_sk({xit_st(), false}, 3).summands_str() == "tau2(0)");
    CHECK(restrict_sk({xit_st(), false}, 3).dim_at(3) == 30);
    CHECK(restrict_sk({xit_st(), true}, 3).is_zero());

    // sigma_S = St with a principal series is inconsistent
    CHECK_THROWS_AS(restrict_sk({ur_ps(), true}, 2), InconsistentInputError);

    // wilder ramification: zero
    CHECK(restrict_sk({GL2LocalType::steinberg(StTwistClass::Wilder), false}, 2).is_zero());
    CHECK(restrict_sk({deep_cusp(), false}, 2).is_zero());
}

TEST_CASE("parity condition") {
    CHECK(sk_parity_admissible(1, -1));
    CHECK(!sk_parity_admissible(0, -1));
    CHECK(sk_parity_admissible(0, 1));
    CHECK(sk_parity_admissible(2, 1));
    CHECK_THROWS_AS(sk_parity_admissible(0, 0), std::invalid_argument);

    // epsilon(1/2) = (-1)^(k-1) prod eps_p; k=10 even with eps_2 = -1 gives +1
    CHECK(epsilon_from_weight_al(10, {-1}) == 1);
    CHECK(epsilon_from_weight_al(10, {}) == -1);
    CHECK(epsilon_from_weight_al(3, {1, -1}) == -1);
    CHECK_THROWS_AS(epsilon_from_weight_al(4, {0}), std::invalid_argument);
}

TEST_CASE("invariance predicates") {
    auto p = invariance_predicates(ur_ps(), ur_ps(), Sign::Plus);
    CHECK(p.spherical);
    CHECK(p.has_k);
    CHECK(p.has_k_prime);

    p = invariance_predicates(st(), st(), Sign::Plus);
    CHECK(!p.spherical);
    CHECK(p.has_k);

    p = invariance_predicates(deep_cusp(), st(), Sign::Plus);
    CHECK(!p.spherical);
    CHECK(!p.has_k);
    CHECK(!p.has_k_prime);

    // has_k_prime == has_k across the alphabet, and spherical only for
    // unramified principal series pairs with the generic member
    for (const auto& a : alphabet()) {
        for (const auto& b : alphabet()) {
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                const auto pr = invariance_predicates(a, b, s);
                CHECK(pr.has_k == pr.has_k_prime);
                if (pr.spherical) {
                    CHECK(s == Sign::Plus);
                    CHECK(a.is_spherical());
                    CHECK(b.is_spherical());
                }
                if (s == Sign::Plus && a.has_k1_invariants() && b.has_k1_invariants()) {
                    CHECK(pr.has_k);  // no zero rows with sign +
                }
            }
        }
    }
}

TEST_CASE("level-4 cuspidal datum") {
    const auto d = level4_cuspidal_datum();
    CHECK(d.q == 2);
    CHECK(d.dim_invariants == 1);  // q - 1 at q = 2
    CHECK(d.epsilon == -1);
    CHECK(d.l_factor_is_one);
}
