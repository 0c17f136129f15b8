#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parinv/poly.hpp"
#include "parinv/repdims.hpp"

namespace parinv::packets {

// ---------------------------------------------------------------------------
// Input alphabet: classification of a local GL(2) representation by exactly
// the data the restriction tables depend on.
// ---------------------------------------------------------------------------

// Ramification of a smooth character restricted to the unit group.
enum class CharRam { Unramified, Tame, Wilder };

struct SmoothChar {
    CharRam ram = CharRam::Unramified;
    // Index of the induced residue-field character in Z/(q-1); 0 means the
    // trivial one.  Stored unreduced, reduced once q is known.  Meaningless
    // for Wilder.
    long residue_index = 0;

    friend bool operator==(const SmoothChar&, const SmoothChar&) = default;
};

// Twist class of mu.St relative to an unramified base twist: mu itself
// unramified (Plain), mu = xi_u * unramified (XiU), mu = xi_t * at-most-tame
// (XiT, odd residue characteristic only), anything wilder.
enum class StTwistClass { Plain, XiU, XiT, Wilder };

class GL2LocalType {
public:
    enum class Kind { PrincipalSeries, Steinberg, Cuspidal };

    static GL2LocalType principal_series(SmoothChar c1, SmoothChar c2);
    // mu x mu^-1 (trivial central character), the principal-series shape of
    // a PGL(2) representation.
    static GL2LocalType principal_series_self_dual(SmoothChar mu);
    static GL2LocalType steinberg(StTwistClass cls = StTwistClass::Plain,
                                  long residue_index = 0);
    // Depth-zero supercuspidal attached to the character index l of the
    // quadratic extension's unit group, l in Z/(q^2-1), regular (l not
    // divisible by q+1), unique up to l ~ q l.
    static GL2LocalType cuspidal_depth0(long l);
    static GL2LocalType cuspidal_positive_depth();

    Kind kind() const { return kind_; }
    const SmoothChar& char1() const { return c1_; }
    const SmoothChar& char2() const { return c2_; }
    StTwistClass twist_class() const { return twist_; }
    long twist_index() const { return twist_index_; }
    long cuspidal_param() const { return cusp_l_; }
    bool cuspidal_is_depth0() const { return depth0_; }

    // Nonzero invariants under the first principal congruence subgroup of
    // GL(2,o_v).
    bool has_k1_invariants() const;
    // Nonzero invariants under the Iwahori-type subgroup K_0^(1)(p): level <= p.
    bool has_k0_invariants() const;
    bool is_spherical() const;
    bool is_discrete_series() const { return kind_ != Kind::PrincipalSeries; }

    std::string str() const;

    friend bool operator==(const GL2LocalType&, const GL2LocalType&) = default;

private:
    Kind kind_ = Kind::PrincipalSeries;
    SmoothChar c1_, c2_;                       // principal series
    StTwistClass twist_ = StTwistClass::Plain;  // Steinberg
    long twist_index_ = 0;
    bool depth0_ = true;                       // cuspidal
    long cusp_l_ = 1;
};

// ---------------------------------------------------------------------------
// Local endoscopic L-packets
// ---------------------------------------------------------------------------

enum class Sign : int { Plus = +1, Minus = -1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }

struct PacketMember {
    bool exists = false;
    bool cuspidal = false;
    std::string description;  // symbolic name, empty when absent
};

struct EndoPacket {
    PacketMember plus;
    PacketMember minus;
};

// The packet attached to the unordered pair (sigma_1, sigma_2); total on the
// type alphabet.  Central character compatibility is the caller's concern.
EndoPacket endoscopic_packet(const GL2LocalType& s1, const GL2LocalType& s2);

// ---------------------------------------------------------------------------
// Parahoric restriction
// ---------------------------------------------------------------------------

struct RestrictionOutcome {
    // Irreducible (or opaque odd-q) constituents with multiplicities; empty
    // for the zero outcome.
    std::vector<std::pair<repdims::RepLabel, long>> summands;
    Poly dim_poly;
    bool member_exists = true;  // false when the requested packet member is absent
    std::string row_name;       // matched catalogue row, or a zero-reason tag

    bool is_zero() const { return summands.empty(); }
    Int dim_at(long q) const { return dim_poly.evaluate_integer(q); }
    std::string summands_str() const;
};

// K(p)-invariants of Pi_sign(sigma_1, sigma_2) as a representation of
// GSp(4,F_q): the matching table row with transported parameters, or the
// zero outcome when either input has no K^(1)-invariants (or the member
// does not exist).
RestrictionOutcome restrict_endo(const GL2LocalType& s1, const GL2LocalType& s2, Sign sign,
                                 long q);

// ---------------------------------------------------------------------------
// Saito-Kurokawa lifts
// ---------------------------------------------------------------------------

struct SKLocalInput {
    GL2LocalType sigma;  // trivial central character assumed
    bool in_s = false;   // sigma_{S,v} = St instead of the trivial representation
};

RestrictionOutcome restrict_sk(const SKLocalInput& input, long q);

// (-1)^{#S} = epsilon(1/2) admissibility.
bool sk_parity_admissible(int size_of_s, int epsilon_central);

// epsilon(1/2) = (-1)^{k-1} * prod of Atkin-Lehner signs, for a weight-(2k-2)
// newform with the given signs at the primes dividing the level.
int epsilon_from_weight_al(long k, const std::vector<int>& al_signs);

// ---------------------------------------------------------------------------
// Invariance predicates
// ---------------------------------------------------------------------------

struct InvariancePredicates {
    bool spherical = false;   // nonzero GSp(4,o_v)-fixed vector
    bool has_k = false;       // nonzero K(p)-invariants
    bool has_k_prime = false; // nonzero invariants under the modified subgroup
};

InvariancePredicates invariance_predicates(const GL2LocalType& s1, const GL2LocalType& s2,
                                           Sign sign);

// The unique level-4 cuspidal GL(2,Q_2) datum: one-dimensional invariants
// under the first principal congruence subgroup (q - 1 at q = 2), epsilon
// factor -1, trivial L-factor.
struct Level4Datum {
    long q = 2;
    long dim_invariants = 1;
    int epsilon = -1;
    bool l_factor_is_one = true;
};

Level4Datum level4_cuspidal_datum();

}  // namespace parinv::packets
