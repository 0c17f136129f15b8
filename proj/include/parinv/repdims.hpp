#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parinv/numeric.hpp"
#include "parinv/poly.hpp"
#include "parinv/symgroup.hpp"

namespace parinv::repdims {

// Label families for irreducible (or printed-composite) representations of
// GSp(4,F_q) / Sp(4,F_q) appearing in the restriction tables.  Even-q labels
// follow Enomoto's notation for Sp(4,F_q); odd-q labels follow Shinoda's for
// GSp(4,F_q) and are carried as opaque names (dimension data only).  Odd-q
// families whose base name collides with an even-q one are primed in string
// form ("chi6'", "theta3'").
enum class Family : int {
    // even q
    ETheta0,
    ETheta1,
    ETheta2,
    ETheta3,
    ETheta4,
    ETheta5,
    EChi1,
    EChi2,
    EChi4,
    EChi5,
    EChi6,
    EChi8,
    EChi9,
    EChi10,
    EChi12,
    EChi13,
    // odd q
    OX1,
    OX2,
    OX5,
    OChi3,
    OChi4,
    OChi5,
    OChi6,
    OChi7,
    OChi8,
    OTau2,
    OTau3,
    OTheta1,
    OTheta2,
    OTheta3,
    OTheta4,
    OTheta5,
};

const char* family_name(Family f);
bool family_is_even_q(Family f);
std::optional<Family> family_by_name(const std::string& name);

struct RepLabel {
    Family family;
    std::vector<long> params;  // character indices, already reduced to canonical residues

    std::string str() const;  // "chi12(1)", "theta2", "X1(0,1,0)"
    friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

// Parses "chi12(1)" / "theta2" / "X1(0,1,0)".  Throws CatalogueError on
// unknown names.
RepLabel parse_label(const std::string& s);

// --------------------------------------------------------------------------
// Dimension polynomials (the printed dim column).
// --------------------------------------------------------------------------

// Polynomial for a single catalogued label family; CatalogueError when the
// tables print no dimension for it (theta0, theta4, chi5 at even q, theta5'
// at odd q appear only inside decompositions or composite rows).
Poly dim_polynomial(Family f);
Poly dim_polynomial(const RepLabel& label);

// Label expression: a single label or a printed composite row such as
// "theta1+theta4".  Composites are resolved against the printed row totals
// first, then as a sum of known single labels.
Poly dim_polynomial(const std::string& label_expr);

Int evaluate_dim(const RepLabel& label, long q);
Int evaluate_dim(const std::string& label_expr, long q);

// --------------------------------------------------------------------------
// q = 2 decompositions into Sp(4,F_2) ~ Sigma_6 irreducibles.
// --------------------------------------------------------------------------

// Irreducible labels at q=2 give unit vectors; the recorded reducible
// specializations are chi1(0,0), chi10(0), chi2(1), chi6(0).  Anything else
// (including labels that cannot occur at q=2) raises CatalogueError.
symgroup::MultiplicityVector decompose_at_q2(const RepLabel& label);
symgroup::MultiplicityVector decompose_at_q2(const std::string& label_expr);

// --------------------------------------------------------------------------
// Character-index normalization maps (even q).
// --------------------------------------------------------------------------

// kappa: Z/(q+1) -> Z/(q^2-1), x -> (q-1)x.  Injective.
long kappa(long x, long q);
// kappa*: Z/(q^2-1) ->> Z/(q+1), reduction.
long kappa_star(long x, long q);
// Inverse of kappa where defined (l a multiple of q-1 in Z/(q^2-1)).
std::optional<long> kappa_inv(long l, long q);
long kappa_inv_or_throw(long l, long q);  // NotInImageError outside the image

// Smaller representative of {l, q*l} in Z/(q^2-1); cuspidal parameters are
// unique up to this conjugation.
long canonical_cuspidal_param(long l, long q);

struct Table3Params {
    std::optional<long> kappa_inv_l1;
    std::optional<long> kappa_inv_l2;
    long kappa_star_sum = 0;   // kappa*(l1+l2)
    long kappa_star_diff = 0;  // kappa*(l1-l2)
    long ktilde1 = 0;          // (q+2)/2 * kappa*(l1+l2) mod q+1
    long ktilde2 = 0;          // (q+2)/2 * kappa*(l1-l2) mod q+1
};

Table3Params table3_parameters(long l1, long l2, long q);

// --------------------------------------------------------------------------
// Row catalogue shared with the packet lookup.
// --------------------------------------------------------------------------

// Unordered input shape of a pair (sigma_1, sigma_2) of GL(2) types with
// nonzero first-principal-congruence invariants.
enum class T3Shape : int {
    PsPs,       // two principal series
    PsSt,       // principal series x twist of Steinberg
    PsCusp,     // principal series x depth-zero cuspidal
    StStSame,   // equal Steinberg twists
    StStXiU,    // Steinberg twists differing by the unramified quadratic character
    StStXiT,    // ... by a tamely ramified quadratic character (odd q only)
    StCusp,     // Steinberg twist x depth-zero cuspidal
    CuspSame,   // isomorphic depth-zero cuspidals
    CuspDiff,   // non-isomorphic depth-zero cuspidals
};

struct T3Row {
    T3Shape shape;
    int sign;                   // +1 or -1
    Poly dim;                   // dim of the K(p)-invariants
    bool zero;                  // printed zero row
    bool even_q_defined;        // xi_t rows exist only for odd q
    std::string even_q2_label;  // label expression at q=2; empty if not realizable
    std::string row_name;       // display, e.g. "(mu1 St, mu1 xi_u St, -)"
};

const std::vector<T3Row>& table3_rows();
const T3Row& table3_row(T3Shape shape, int sign);

enum class T4Shape : int {
    Ps,     // mu x mu^-1
    St,     // Steinberg
    StXiU,  // xi_u St
    StXiT,  // xi_t St (odd q only)
    Cusp,   // depth-zero cuspidal
};

struct T4Row {
    T4Shape shape;
    bool in_s;                  // sigma_{S,v} = St rather than the trivial representation
    Poly dim;
    bool zero;
    bool even_q_defined;
    std::string even_q2_label;
    std::string pi_descriptor;  // the GSp(4) representation being restricted
    std::string row_name;
};

const std::vector<T4Row>& table4_rows();
const T4Row& table4_row(T4Shape shape, bool in_s);

// Versioned JSON dump of the row catalogue (the shipped data file must
// match this byte for byte).
std::string catalogue_json();

}  // namespace parinv::repdims
