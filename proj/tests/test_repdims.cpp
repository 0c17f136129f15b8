#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "parinv/errors.hpp"
#include "parinv/repdims.hpp"

using namespace parinv;
using namespace parinv::repdims;
using symgroup::Sp4F2Irrep;

TEST_CASE("label parsing and printing") {
    const RepLabel l = parse_label("chi12(1)");
    CHECK(l.family == Family::EChi12);
    CHECK(l.params == std::vector<long>{1});
    CHECK(l.str() == "chi12(1)");

    CHECK(parse_label("theta2").params.empty());
    CHECK(parse_label("X1(0,1,0)").params == std::vector<long>{0, 1, 0});
    CHECK(parse_label("chi6'(2,1)").family == Family::OChi6);
    CHECK_THROWS_AS(parse_label("chi77"), CatalogueError);
}

TEST_CASE("dimension polynomials match printed table entries") {
    const Poly q = Poly::variable();

    // (q+1)^2 (q^2+1), evaluates to 45 at q=2
    CHECK(dim_polynomial("chi1") == (q + 1).pow(2) * (q.pow(2) + 1));
    CHECK(evaluate_dim("chi1(0,0)", 2) == 45);
    CHECK(dim_polynomial(Family::OX1) == dim_polynomial(Family::EChi1));

    // q(q^2+1)/2 at q=3 is 15
    CHECK(evaluate_dim("theta3'(0)", 3) == 15);
    CHECK(table3_row(T3Shape::StStSame, -1).dim.evaluate_integer(3) == 15);

    // the printed zero rows
    CHECK(table3_row(T3Shape::StStXiT, -1).dim.is_zero());
    CHECK(table3_row(T3Shape::StCusp, -1).dim.is_zero());
    CHECK(table3_row(T3Shape::CuspDiff, -1).dim.is_zero());

    // evaluate_dim examples at q=2
    CHECK(table3_row(T3Shape::CuspSame, +1).dim.evaluate_integer(2) == 10);
    CHECK(table3_row(T3Shape::CuspDiff, +1).dim.evaluate_integer(2) == 5);
    CHECK(table4_row(T4Shape::St, true).dim.evaluate_integer(2) == 5);

    // composite rows resolve to the printed totals
    CHECK(dim_polynomial("theta1+theta4") == q.pow(4) + q * (q + 1).pow(2) / Rat(2));
    CHECK(dim_polynomial("theta4'(0)+theta5'(0)") == q.pow(4) + q * (q.pow(2) + 1) / Rat(2));

    // labels with no printed dimension
    CHECK_THROWS_AS(dim_polynomial("theta4"), CatalogueError);
    CHECK_THROWS_AS(dim_polynomial("theta0"), CatalogueError);
    CHECK_THROWS_AS(dim_polynomial("chi5(1)"), CatalogueError);
    CHECK_THROWS_AS(evaluate_dim("nonsense", 2), CatalogueError);
}

TEST_CASE("all dimension polynomials are integral and non-negative for 2 <= q <= 64") {
    for (const auto& row : table3_rows()) {
        for (long q = 2; q <= 64; ++q) {
            const Int v = row.dim.evaluate_integer(q);  // throws if non-integral
            if (row.zero) {
                CHECK(v == 0);
            } else {
                CHECK(v > 0);
            }
        }
    }
    for (const auto& row : table4_rows()) {
        for (long q = 2; q <= 64; ++q) {
            const Int v = row.dim.evaluate_integer(q);
            if (row.zero) {
                CHECK(v == 0);
            } else {
                CHECK(v > 0);
            }
        }
    }
}

TEST_CASE("q=2 specializations sum to the printed dimension") {
    // every row realizable at q=2 decomposes with matching total dimension
    int checked = 0;
    for (const auto& row : table3_rows()) {
        if (!row.even_q_defined) continue;
        if (row.zero) {
            CHECK(row.even_q2_label.empty());
            ++checked;
            continue;
        }
        if (row.even_q2_label.empty()) {
            // only the two-distinct-cuspidals row: GL(2,F_2) has one cuspidal
            CHECK(row.shape == T3Shape::CuspDiff);
            continue;
        }
        const auto mult = decompose_at_q2(row.even_q2_label);
        CHECK(mult.total_dimension() == to_longlong(row.dim.evaluate_integer(2)));
        ++checked;
    }
    CHECK(checked == 12);  // 13 even-q rows minus the q=2-impossible CuspDiff(+) row

    for (const auto& row : table4_rows()) {
        if (!row.even_q_defined || row.zero) continue;
        REQUIRE(!row.even_q2_label.empty());
        const auto mult = decompose_at_q2(row.even_q2_label);
        CHECK(mult.total_dimension() == to_longlong(row.dim.evaluate_integer(2)));
    }

    // the worked identities
    CHECK(decompose_at_q2("theta1+theta4").total_dimension() == 25);
    CHECK(decompose_at_q2("theta3+theta4").total_dimension() == 21);
    CHECK(decompose_at_q2("chi10(0)").total_dimension() == 30);
    CHECK(decompose_at_q2("chi1(0,0)").total_dimension() == 45);
    CHECK(decompose_at_q2("chi6(0)").total_dimension() == 15);
    CHECK(decompose_at_q2("chi2(1)").total_dimension() == 15);
    CHECK(evaluate_dim("chi2(1)", 2) == 15);  // q^4 - 1 at q = 2
}

TEST_CASE("recorded q=2 decompositions") {
    auto v = decompose_at_q2(parse_label("chi1(0,0)"));
    CHECK(v[Sp4F2Irrep::Theta0] == 1);
    CHECK(v[Sp4F2Irrep::Theta1] == 2);
    CHECK(v[Sp4F2Irrep::Theta2] == 1);
    CHECK(v[Sp4F2Irrep::Theta3] == 1);
    CHECK(v[Sp4F2Irrep::Theta4] == 1);
    CHECK(v.total_dimension() == 45);

    v = decompose_at_q2(parse_label("chi6(0)"));
    CHECK(v.str() == "theta0 + theta1 + theta2");
    CHECK(v.total_dimension() == 15);

    v = decompose_at_q2(parse_label("chi2(1)"));
    CHECK(v[Sp4F2Irrep::Chi8_1] == 1);
    CHECK(v[Sp4F2Irrep::Chi12_1] == 1);
    CHECK(v.total_dimension() == 15);

    // irreducibles give unit vectors
    CHECK(decompose_at_q2(parse_label("chi13(1)")) ==
          symgroup::MultiplicityVector::unit(Sp4F2Irrep::Chi13_1));

    // no recorded decomposition: wrong parameters or q=2-impossible labels
    CHECK_THROWS_AS(decompose_at_q2(parse_label("chi6(1)")), CatalogueError);
    CHECK_THROWS_AS(decompose_at_q2(parse_label("chi4(1,2)")), CatalogueError);
    CHECK_THROWS_AS(decompose_at_q2(parse_label("X1(0,0,0)")), CatalogueError);
}

TEST_CASE("paired-row difference law") {
    // dim Pi+ - dim Pi- = (q^2+1) d1 d2, with d = q for a Steinberg twist and
    // d = q-1 for a depth-zero cuspidal, as a polynomial identity.
    const Poly q = Poly::variable();
    const Poly st = q;
    const Poly cusp = q - 1;
    const struct {
        T3Shape shape;
        Poly d1, d2;
    } pairs[] = {
        {T3Shape::StStSame, st, st},   {T3Shape::StStXiU, st, st},
        {T3Shape::StStXiT, st, st},    {T3Shape::StCusp, st, cusp},
        {T3Shape::CuspSame, cusp, cusp}, {T3Shape::CuspDiff, cusp, cusp},
    };
    for (const auto& pr : pairs) {
        const Poly diff = table3_row(pr.shape, +1).dim - table3_row(pr.shape, -1).dim;
        CHECK(diff == (q.pow(2) + 1) * pr.d1 * pr.d2);
    }
    // at q=2 the prefactor q^2+1 is 5
    const Poly diff = table3_row(T3Shape::StStSame, +1).dim - table3_row(T3Shape::StStSame, -1).dim;
    CHECK(Poly::divide_exact(diff, Poly::variable().pow(2)).evaluate_integer(2) == 5);
}

TEST_CASE("parameter normalization maps") {
    // kappa is multiplication by q-1; at q=2 it is the identity on Z/3
    CHECK(kappa(1, 2) == 1);
    CHECK(kappa(2, 2) == 2);

    // q=2, l1=1, l2=2
    const auto p = table3_parameters(1, 2, 2);
    CHECK(p.kappa_star_sum == 0);
    CHECK(p.ktilde1 == 0);
    CHECK(p.kappa_star_diff == 2);
    CHECK(p.ktilde2 == 1);  // 2*2 mod 3
    CHECK(p.kappa_inv_l1 == 1);
    CHECK(p.kappa_inv_l2 == 2);

    // q=4: kappa* reduces mod 5
    CHECK(kappa_star(5, 4) == 0);

    // image of kappa at q=4 is the multiples of 3 in Z/15
    CHECK(kappa(1, 4) == 3);
    CHECK(kappa_inv(3, 4) == 1);
    CHECK(!kappa_inv(5, 4).has_value());
    CHECK_THROWS_AS(kappa_inv_or_throw(5, 4), NotInImageError);
    CHECK(kappa_inv_or_throw(12, 4) == 4);

    // kappa_inv inverts kappa
    for (long x = 0; x <= 4; ++x) CHECK(kappa_inv(kappa(x, 4), 4) == x);

    // cuspidal parameter conjugation l ~ q l
    CHECK(canonical_cuspidal_param(2, 2) == 1);  // {2, 4 mod 3 = 1}
    CHECK(canonical_cuspidal_param(1, 2) == 1);
    CHECK(canonical_cuspidal_param(13, 4) == 7);  // {13, 52 mod 15 = 7}
    CHECK(canonical_cuspidal_param(7, 4) == 7);

    CHECK_THROWS_AS(table3_parameters(0, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(kappa(1, 6), std::invalid_argument);
}

TEST_CASE("catalogue dump is valid versioned JSON and matches the shipped file") {
    const std::string dumped = catalogue_json();
    const auto doc = nlohmann::json::parse(dumped);
    CHECK(doc.at("version") == 1);
    CHECK(doc.at("packet_restrictions").size() == 15);
    CHECK(doc.at("sk_restrictions").size() == 9);

    std::ifstream in(std::string(PARINV_SOURCE_DIR) + "/data/rep_catalogue.json");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == dumped);
}
