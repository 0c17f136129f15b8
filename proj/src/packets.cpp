#include "parinv/packets.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "parinv/errors.hpp"

namespace parinv::packets {

using repdims::Family;
using repdims::RepLabel;
using repdims::T3Shape;
using repdims::T4Shape;

// ---------------------------------------------------------------------------
// GL2LocalType
// ---------------------------------------------------------------------------

GL2LocalType GL2LocalType::principal_series(SmoothChar c1, SmoothChar c2) {
    GL2LocalType t;
    t.kind_ = Kind::PrincipalSeries;
    t.c1_ = c1;
    t.c2_ = c2;
    return t;
}

GL2LocalType GL2LocalType::principal_series_self_dual(SmoothChar mu) {
    SmoothChar inv = mu;
    inv.residue_index = -mu.residue_index;
    return principal_series(mu, inv);
}

GL2LocalType GL2LocalType::steinberg(StTwistClass cls, long residue_index) {
    GL2LocalType t;
    t.kind_ = Kind::Steinberg;
    t.twist_ = cls;
    t.twist_index_ = residue_index;
    return t;
}

GL2LocalType GL2LocalType::cuspidal_depth0(long l) {
    GL2LocalType t;
    t.kind_ = Kind::Cuspidal;
    t.depth0_ = true;
    t.cusp_l_ = l;
    return t;
}

GL2LocalType GL2LocalType::cuspidal_positive_depth() {
    GL2LocalType t;
    t.kind_ = Kind::Cuspidal;
    t.depth0_ = false;
    t.cusp_l_ = 0;
    return t;
}

bool GL2LocalType::has_k1_invariants() const {
    switch (kind_) {
        case Kind::PrincipalSeries:
            return c1_.ram != CharRam::Wilder && c2_.ram != CharRam::Wilder;
        case Kind::Steinberg:
            return twist_ != StTwistClass::Wilder;
        case Kind::Cuspidal:
            return depth0_;
    }
    return false;
}

bool GL2LocalType::has_k0_invariants() const {
    // level <= p: unramified principal series, or an unramified twist of the
    // Steinberg representation
    if (kind_ == Kind::PrincipalSeries) return is_spherical();
    if (kind_ == Kind::Steinberg) {
        return (twist_ == StTwistClass::Plain || twist_ == StTwistClass::XiU) &&
               twist_index_ == 0;
    }
    return false;
}

bool GL2LocalType::is_spherical() const {
    return kind_ == Kind::PrincipalSeries && c1_.ram == CharRam::Unramified &&
           c2_.ram == CharRam::Unramified;
}

namespace {

std::string char_str(const SmoothChar& c) {
    switch (c.ram) {
        case CharRam::Unramified:
            return "ur(" + std::to_string(c.residue_index) + ")";
        case CharRam::Tame:
            return "tame(" + std::to_string(c.residue_index) + ")";
        case CharRam::Wilder:
            return "wild";
    }
    return "?";
}

}  // namespace

std::string GL2LocalType::str() const {
    switch (kind_) {
        case Kind::PrincipalSeries:
            return "ps[" + char_str(c1_) + " x " + char_str(c2_) + "]";
        case Kind::Steinberg:
            switch (twist_) {
                case StTwistClass::Plain:
                    return twist_index_ ? "st[tw=" + std::to_string(twist_index_) + "]" : "st";
                case StTwistClass::XiU:
                    return "xiu.st";
                case StTwistClass::XiT:
                    return "xit.st";
                case StTwistClass::Wilder:
                    return "wild.st";
            }
            return "st?";
        case Kind::Cuspidal:
            return depth0_ ? "cusp[l=" + std::to_string(cusp_l_) + "]" : "cusp[deep]";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Pair classification
// ---------------------------------------------------------------------------

namespace {

int kind_rank(const GL2LocalType& t) {
    switch (t.kind()) {
        case GL2LocalType::Kind::Cuspidal:
            return 0;
        case GL2LocalType::Kind::Steinberg:
            return 1;
        case GL2LocalType::Kind::PrincipalSeries:
            return 2;
    }
    return 3;
}

int twist_rank(StTwistClass c) {
    switch (c) {
        case StTwistClass::Plain:
            return 0;
        case StTwistClass::XiU:
            return 1;
        case StTwistClass::XiT:
            return 2;
        case StTwistClass::Wilder:
            return 3;
    }
    return 4;
}

std::tuple<int, int, long, long, long, long> sort_key(const GL2LocalType& t) {
    return {kind_rank(t),
            t.kind() == GL2LocalType::Kind::Steinberg ? twist_rank(t.twist_class()) : 0,
            t.kind() == GL2LocalType::Kind::Steinberg ? t.twist_index() : 0,
            t.kind() == GL2LocalType::Kind::Cuspidal ? t.cuspidal_param() : 0,
            static_cast<long>(t.char1().ram) * 1000 + t.char1().residue_index,
            static_cast<long>(t.char2().ram) * 1000 + t.char2().residue_index};
}

// Deterministic unordered-pair normalization; the packet of (sigma_1,
// sigma_2) and of the switched pair coincide, so both orders must map to
// the same row.
std::pair<GL2LocalType, GL2LocalType> normalize(const GL2LocalType& a, const GL2LocalType& b) {
    if (sort_key(b) < sort_key(a)) return {b, a};
    return {a, b};
}

// Ratio class of two Steinberg twist tags.
StTwistClass twist_ratio(StTwistClass a, StTwistClass b) {
    if (a == StTwistClass::Wilder || b == StTwistClass::Wilder) {
        return a == b ? StTwistClass::Plain : StTwistClass::Wilder;
    }
    if (a == b) return StTwistClass::Plain;
    const bool has_xit = (a == StTwistClass::XiT || b == StTwistClass::XiT);
    return has_xit ? StTwistClass::XiT : StTwistClass::XiU;
}

struct PairClass {
    T3Shape shape;
    GL2LocalType first, second;  // normalized order, matching the row template
};

// Shape of a normalized pair.  When q is known, cuspidal parameters are
// compared up to the conjugation l ~ q l; otherwise literally (q-free
// callers are expected to pass canonical parameters).
PairClass classify(const GL2LocalType& a, const GL2LocalType& b, std::optional<long> q) {
    auto [s1, s2] = normalize(a, b);
    using K = GL2LocalType::Kind;
    const K k1 = s1.kind(), k2 = s2.kind();

    auto canon = [&](long l) { return q ? repdims::canonical_cuspidal_param(l, *q) : l; };

    if (k1 == K::PrincipalSeries && k2 == K::PrincipalSeries) return {T3Shape::PsPs, s1, s2};
    if (k1 == K::Steinberg && k2 == K::PrincipalSeries) return {T3Shape::PsSt, s1, s2};
    if (k1 == K::Cuspidal && k2 == K::PrincipalSeries) return {T3Shape::PsCusp, s1, s2};
    if (k1 == K::Cuspidal && k2 == K::Steinberg) return {T3Shape::StCusp, s1, s2};
    if (k1 == K::Steinberg && k2 == K::Steinberg) {
        switch (twist_ratio(s1.twist_class(), s2.twist_class())) {
            case StTwistClass::Plain:
                return {T3Shape::StStSame, s1, s2};
            case StTwistClass::XiU:
                return {T3Shape::StStXiU, s1, s2};
            case StTwistClass::XiT:
                return {T3Shape::StStXiT, s1, s2};
            case StTwistClass::Wilder:
                break;  // unreachable: wilder twists have no K^(1) invariants
        }
        return {T3Shape::StStSame, s1, s2};
    }
    // cuspidal pair
    const bool iso = canon(s1.cuspidal_param()) == canon(s2.cuspidal_param());
    return {iso ? T3Shape::CuspSame : T3Shape::CuspDiff, s1, s2};
}

void validate_q_for(const GL2LocalType& t, long q) {
    if (q < 2 || !is_prime_power(q)) {
        throw std::invalid_argument("q must be a prime power >= 2");
    }
    if (q % 2 == 0 && t.kind() == GL2LocalType::Kind::Steinberg &&
        t.twist_class() == StTwistClass::XiT) {
        throw InconsistentInputError(
            "tamely ramified quadratic twists do not exist for even residue characteristic");
    }
    if (t.kind() == GL2LocalType::Kind::Cuspidal && t.cuspidal_is_depth0()) {
        if (mod_reduce(t.cuspidal_param(), q + 1) == 0) {
            throw std::invalid_argument("cuspidal parameter must be regular (l != q l)");
        }
    }
}

RestrictionOutcome zero_outcome(std::string reason, bool member_exists = true) {
    RestrictionOutcome out;
    out.dim_poly = Poly();
    out.member_exists = member_exists;
    out.row_name = std::move(reason);
    return out;
}

RepLabel label(Family f, std::vector<long> params = {}) { return RepLabel{f, std::move(params)}; }

}  // namespace

// ---------------------------------------------------------------------------
// Packets
// ---------------------------------------------------------------------------

EndoPacket endoscopic_packet(const GL2LocalType& a, const GL2LocalType& b) {
    const auto cls = classify(a, b, std::nullopt);
    EndoPacket p;
    switch (cls.shape) {
        case T3Shape::PsPs:
            p.plus = {true, false, "mu1 mu3^-1 x mu2 mu3^-1 >< mu3"};
            break;
        case T3Shape::PsSt:
            p.plus = {true, false, "mu1 mu3^-1 St >< mu3"};
            break;
        case T3Shape::PsCusp:
            p.plus = {true, false, "mu3^-1 rho1 >< mu3"};
            break;
        case T3Shape::StStSame:
            p.plus = {true, false, "tau(S, nu^-1/2 mu)"};
            p.minus = {true, false, "tau(T, nu^-1/2 mu)"};
            break;
        case T3Shape::StStXiU:
        case T3Shape::StStXiT:
            p.plus = {true, false, "delta(St nu^1/2 >< mu nu^-1/2)"};
            p.minus = {true, true, "cuspidal"};
            break;
        case T3Shape::StCusp:
            p.plus = {true, false, "delta(mu^-1 nu^1/2 rho1 >< mu nu^-1/2)"};
            p.minus = {true, true, "cuspidal"};
            break;
        case T3Shape::CuspSame:
            p.plus = {true, false, "tau(S, rho1)"};
            p.minus = {true, false, "tau(T, rho1)"};
            break;
        case T3Shape::CuspDiff:
            p.plus = {true, true, "cuspidal"};
            p.minus = {true, true, "cuspidal"};
            break;
    }
    return p;
}

// ---------------------------------------------------------------------------
// restrict_endo
// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<RepLabel, long>> even_t3_labels(const PairClass& cls, int sign, long q) {
    const auto& s1 = cls.first;
    const auto& s2 = cls.second;
    const long qm = q - 1;  // modulus of residue character indices
    switch (cls.shape) {
        case T3Shape::PsPs: {
            // normalized order: (mu1 x mu2, mu3 x mu4)
            const long kk1 = s1.char1().residue_index, kk2 = s1.char2().residue_index;
            const long kk3 = s2.char1().residue_index;
            return {{label(Family::EChi1,
                           {mod_reduce(kk1 - kk3, qm), mod_reduce(kk2 - kk3, qm)}),
                     1}};
        }
        case T3Shape::PsSt: {
            // normalized order (St, PS); the table's (mu1 x mu2, mu3 St)
            const long kk3 = s1.twist_index();
            const long kk1 = s2.char1().residue_index;
            return {{label(Family::EChi10, {mod_reduce(kk3 - kk1, qm)}), 1}};
        }
        case T3Shape::StStSame:
            if (sign > 0) return {{label(Family::ETheta1), 1}, {label(Family::ETheta4), 1}};
            return {{label(Family::ETheta2), 1}};
        case T3Shape::StStXiU:
            if (sign > 0) return {{label(Family::ETheta3), 1}, {label(Family::ETheta4), 1}};
            return {{label(Family::ETheta5), 1}};
        case T3Shape::PsCusp: {
            const long l2 = repdims::canonical_cuspidal_param(s1.cuspidal_param(), q);
            return {{label(Family::EChi2, {l2}), 1}};
        }
        case T3Shape::StCusp: {
            const long l2 = repdims::canonical_cuspidal_param(s1.cuspidal_param(), q);
            return {{label(Family::EChi12, {repdims::kappa_inv_or_throw(l2, q)}), 1}};
        }
        case T3Shape::CuspSame: {
            const long l1 = repdims::canonical_cuspidal_param(s1.cuspidal_param(), q);
            const Family f = sign > 0 ? Family::EChi13 : Family::EChi9;
            return {{label(f, {repdims::kappa_star(l1, q)}), 1}};
        }
        case T3Shape::CuspDiff: {
            const long l1 = repdims::canonical_cuspidal_param(s1.cuspidal_param(), q);
            const long l2 = repdims::canonical_cuspidal_param(s2.cuspidal_param(), q);
            const auto par = repdims::table3_parameters(l1, l2, q);
            return {{label(Family::EChi4, {par.ktilde1, par.ktilde2}), 1}};
        }
        case T3Shape::StStXiT:
            break;  // unreachable at even q
    }
    throw std::logic_error("even-q label requested for an impossible row");
}

std::vector<std::pair<RepLabel, long>> odd_t3_labels(const PairClass& cls, int sign, long q) {
    const auto& s1 = cls.first;
    const auto& s2 = cls.second;
    const long qm = q - 1;
    switch (cls.shape) {
        case T3Shape::PsPs: {
            // X1(mu3/mu1, mu4/mu1, mu1) with (mu1, mu2) the first input
            const long kk1 = s1.char1().residue_index;
            const long kk3 = s2.char1().residue_index, kk4 = s2.char2().residue_index;
            return {{label(Family::OX1, {mod_reduce(kk3 - kk1, qm), mod_reduce(kk4 - kk1, qm),
                                         mod_reduce(kk1, qm)}),
                     1}};
        }
        case T3Shape::PsSt: {
            const long kk3 = s1.twist_index();
            const long kk1 = s2.char1().residue_index;
            return {{label(Family::OChi4, {mod_reduce(kk3 - kk1, qm), mod_reduce(kk1, qm)}), 1}};
        }
        case T3Shape::StStSame: {
            const long k = mod_reduce(s1.twist_index(), qm);
            if (sign > 0)
                return {{label(Family::OTheta1, {k}), 1}, {label(Family::OTheta5, {k}), 1}};
            return {{label(Family::OTheta3, {k}), 1}};
        }
        case T3Shape::StStXiU: {
            const long k = mod_reduce(s1.twist_index(), qm);
            if (sign > 0)
                return {{label(Family::OTheta4, {k}), 1}, {label(Family::OTheta5, {k}), 1}};
            return {{label(Family::OTheta2, {k}), 1}};
        }
        case T3Shape::StStXiT:
            return {{label(Family::OTau3, {mod_reduce(s1.twist_index(), qm)}), 1}};
        case T3Shape::PsCusp: {
            const long l2 = repdims::canonical_cuspidal_param(s1.cuspidal_param(), q);
            const long kk1 = s2.char1().residue_index;
            return {{label(Family::OX2, {l2, mod_reduce(kk1, qm)}), 1}};
        }
        case T3Shape::StCusp: {
            const long l2 = repdims::canonical_cuspidal_param(s1.cuspidal_param(), q);
            const long kk1 = mod_reduce(s2.twist_index(), qm);
            return {{label(Family::OChi6, {repdims::kappa_inv_or_throw(l2, q), kk1}), 1}};
        }
        case T3Shape::CuspSame: {
            const long l1 = repdims::canonical_cuspidal_param(s1.cuspidal_param(), q);
            const Family f = sign > 0 ? Family::OChi8 : Family::OChi7;
            return {{label(f, {l1}), 1}};
        }
        case T3Shape::CuspDiff: {
            const long l1 = repdims::canonical_cuspidal_param(s1.cuspidal_param(), q);
            const long l2 = repdims::canonical_cuspidal_param(s2.cuspidal_param(), q);
            return {{label(Family::OX5, {l1, repdims::kappa_inv_or_throw(l2 - l1, q)}), 1}};
        }
    }
    throw std::logic_error("odd-q label requested for an impossible row");
}

}  // namespace

RestrictionOutcome restrict_endo(const GL2LocalType& a, const GL2LocalType& b, Sign sign,
                                 long q) {
    validate_q_for(a, q);
    validate_q_for(b, q);

    if (!a.has_k1_invariants() || !b.has_k1_invariants()) {
        return zero_outcome("(no K^(1) invariants)");
    }

    const auto cls = classify(a, b, q);

    const bool member_exists =
        sign == Sign::Plus || (a.is_discrete_series() && b.is_discrete_series());
    if (!member_exists) {
        return zero_outcome("(no Pi- member: Borel-induced input)", false);
    }

    const auto& row = repdims::table3_row(cls.shape, sign_value(sign));
    if (row.zero) return zero_outcome(row.row_name);

    RestrictionOutcome out;
    out.row_name = row.row_name;
    out.dim_poly = row.dim;
    out.summands = (q % 2 == 0) ? even_t3_labels(cls, sign_value(sign), q)
                                : odd_t3_labels(cls, sign_value(sign), q);
    return out;
}

// ---------------------------------------------------------------------------
// restrict_sk
// ---------------------------------------------------------------------------

RestrictionOutcome restrict_sk(const SKLocalInput& input, long q) {
    validate_q_for(input.sigma, q);

    if (input.in_s && !input.sigma.is_discrete_series()) {
        throw InconsistentInputError(
            "sigma_{S,v} = St requires a discrete-series local component");
    }
    if (!input.sigma.has_k1_invariants()) {
        return zero_outcome("(no K^(1) invariants)");
    }

    using K = GL2LocalType::Kind;
    T4Shape shape = T4Shape::Ps;
    switch (input.sigma.kind()) {
        case K::PrincipalSeries:
            shape = T4Shape::Ps;
            break;
        case K::Steinberg:
            switch (input.sigma.twist_class()) {
                case StTwistClass::Plain:
                    shape = T4Shape::St;
                    break;
                case StTwistClass::XiU:
                    shape = T4Shape::StXiU;
                    break;
                case StTwistClass::XiT:
                    shape = T4Shape::StXiT;
                    break;
                case StTwistClass::Wilder:
                    return zero_outcome("(no K^(1) invariants)");
            }
            break;
        case K::Cuspidal:
            shape = T4Shape::Cusp;
            break;
    }

    const auto& row = repdims::table4_row(shape, input.in_s);
    if (row.zero) return zero_outcome(row.row_name);

    RestrictionOutcome out;
    out.row_name = row.row_name;
    out.dim_poly = row.dim;

    const long qm = q - 1;
    const bool even = (q % 2 == 0);
    switch (shape) {
        case T4Shape::Ps: {
            const long k = mod_reduce(input.sigma.char1().residue_index, qm);
            if (even) {
                out.summands = {{label(Family::EChi6, {k}), 1}};
            } else {
                out.summands = {{label(Family::OChi3, {k, mod_reduce(-k, qm)}), 1}};
            }
            break;
        }
        case T4Shape::St:
            if (even) {
                out.summands = {{label(input.in_s ? Family::ETheta2 : Family::ETheta3), 1}};
            } else {
                out.summands = {{label(input.in_s ? Family::OTheta3 : Family::OTheta4, {0}), 1}};
            }
            break;
        case T4Shape::StXiU:
            if (even) {
                out.summands = {{label(input.in_s ? Family::ETheta5 : Family::ETheta1), 1}};
            } else {
                out.summands = {{label(input.in_s ? Family::OTheta2 : Family::OTheta1, {0}), 1}};
            }
            break;
        case T4Shape::StXiT:
            // only the sigma_S = 1 row is nonzero, and only for odd q
            out.summands = {{label(Family::OTau2, {0}), 1}};
            break;
        case T4Shape::Cusp: {
            const long l = repdims::canonical_cuspidal_param(input.sigma.cuspidal_param(), q);
            const long omega = repdims::kappa_inv_or_throw(l, q);
            if (even) {
                out.summands = {{label(Family::EChi8, {omega}), 1}};
            } else {
                out.summands = {{label(Family::OChi5, {omega, 0}), 1}};
            }
            break;
        }
    }
    return out;
}

std::string RestrictionOutcome::summands_str() const {
    if (summands.empty()) return "0";
    std::string s;
    for (const auto& [lab, mult] : summands) {
        if (!s.empty()) s += " + ";
        if (mult != 1) s += std::to_string(mult) + "*";
        s += lab.str();
    }
    return s;
}

// ---------------------------------------------------------------------------
// Predicates and constants
// ---------------------------------------------------------------------------

bool sk_parity_admissible(int size_of_s, int epsilon_central) {
    if (epsilon_central != 1 && epsilon_central != -1) {
        throw std::invalid_argument("epsilon must be +1 or -1");
    }
    if (size_of_s < 0) throw std::invalid_argument("#S must be non-negative");
    return (size_of_s % 2 == 0 ? 1 : -1) == epsilon_central;
}

int epsilon_from_weight_al(long k, const std::vector<int>& al_signs) {
    int eps = (k % 2 == 0) ? -1 : 1;  // (-1)^(k-1)
    for (int s : al_signs) {
        if (s != 1 && s != -1) throw std::invalid_argument("Atkin-Lehner signs are +1/-1");
        eps *= s;
    }
    return eps;
}

InvariancePredicates invariance_predicates(const GL2LocalType& s1, const GL2LocalType& s2,
                                           Sign sign) {
    InvariancePredicates p;
    p.spherical = sign == Sign::Plus && s1.is_spherical() && s2.is_spherical();

    bool has_k = s1.has_k1_invariants() && s2.has_k1_invariants();
    if (has_k && sign == Sign::Minus &&
        !(s1.is_discrete_series() && s2.is_discrete_series())) {
        has_k = false;  // the packet has no non-generic member
    }
    if (has_k) {
        const auto cls = classify(s1, s2, std::nullopt);
        has_k = !repdims::table3_row(cls.shape, sign_value(sign)).zero;
    }
    p.has_k = has_k;
    p.has_k_prime = has_k;
    return p;
}

Level4Datum level4_cuspidal_datum() { return Level4Datum{}; }

}  // namespace parinv::packets
