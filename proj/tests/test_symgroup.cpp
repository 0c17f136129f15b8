#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "parinv/symgroup.hpp"

using namespace parinv;
using namespace parinv::symgroup;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(1) == std::vector<Partition>{P({1})});

    const auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == P({4}));
    CHECK(p4[1] == P({3, 1}));
    CHECK(p4[2] == P({2, 2}));
    CHECK(p4[3] == P({2, 1, 1}));
    CHECK(p4[4] == P({1, 1, 1, 1}));

    // reverse lexicographic: strictly decreasing part lists
    const auto p6 = partitions_of(6);
    for (size_t i = 1; i < p6.size(); ++i) CHECK(p6[i - 1] > p6[i]);
    CHECK(p6.front() == P({6}));
    CHECK(p6.back() == P({1, 1, 1, 1, 1, 1}));

    CHECK_THROWS_AS(partitions_of(0), std::out_of_range);
    CHECK_THROWS_AS(partitions_of(21), std::out_of_range);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
    CHECK(P({3, 2, 1}).str() == "[3,2,1]");
}

TEST_CASE("hook length dimensions") {
    CHECK(irrep_dimension(P({4, 2})) == 9);
    CHECK(irrep_dimension(P({3, 2, 1})) == 16);
    CHECK(irrep_dimension(P({1, 1, 1, 1, 1, 1})) == 1);
    CHECK(irrep_dimension(P({6})) == 1);
    CHECK(irrep_dimension(P({5, 1})) == 5);
    CHECK(irrep_dimension(P({3, 3})) == 5);
    CHECK(irrep_dimension(P({4, 1, 1})) == 10);

    long long sum_sq = 0;
    for (const auto& lam : partitions_of(6)) {
        const long long d = irrep_dimension(lam);
        sum_sq += d * d;
    }
    CHECK(sum_sq == 720);
}

TEST_CASE("character values") {
    const auto mus = partitions_of(6);

    // trivial representation
    for (const auto& mu : mus) CHECK(character_value(P({6}), mu) == 1);

    // dimension at the identity class
    CHECK(character_value(P({5, 1}), P({1, 1, 1, 1, 1, 1})) == 5);
    for (const auto& lam : mus) {
        CHECK(character_value(lam, P({1, 1, 1, 1, 1, 1})) == irrep_dimension(lam));
    }

    // sign character: (-1)^(6 - #parts)
    for (const auto& mu : mus) {
        const long long expect = ((6 - mu.parts().size()) % 2 == 0) ? 1 : -1;
        CHECK(character_value(P({1, 1, 1, 1, 1, 1}), mu) == expect);
    }

    CHECK_THROWS_AS(character_value(P({3, 2}), P({6})), std::invalid_argument);
}

TEST_CASE("character table orthogonality") {
    const auto classes = partitions_of(6);
    const auto irreps = partitions_of(6);
    const Int order = factorial(6);

    std::vector<Int> sizes;
    Int size_total = 0;
    for (const auto& mu : classes) {
        sizes.push_back(class_size(mu));
        size_total += sizes.back();
    }
    CHECK(size_total == order);

    // row orthogonality: sum_mu |C_mu| chi_a(mu) chi_b(mu) = |G| [a=b]
    for (const auto& a : irreps) {
        for (const auto& b : irreps) {
            Int sum = 0;
            for (size_t c = 0; c < classes.size(); ++c) {
                sum += sizes[c] * make_int(character_value(a, classes[c])) *
                       make_int(character_value(b, classes[c]));
            }
            CHECK(sum == (a == b ? order : Int(0)));
        }
    }

    // column orthogonality: sum_lambda chi(mu) chi(nu) = |G|/|C_mu| [mu=nu]
    for (size_t i = 0; i < classes.size(); ++i) {
        for (size_t j = 0; j < classes.size(); ++j) {
            Int sum = 0;
            for (const auto& lam : irreps) {
                sum += make_int(character_value(lam, classes[i])) *
                       make_int(character_value(lam, classes[j]));
            }
            CHECK(sum == (i == j ? order / sizes[i] : Int(0)));
        }
    }
}

TEST_CASE("sp4f2 dictionary") {
    const auto& dict = sp4f2_dictionary();
    REQUIRE(dict.size() == 11);

    CHECK(dictionary_entry(Sp4F2Irrep::Theta4).partition == P({3, 2, 1}));
    CHECK(dictionary_entry(Sp4F2Irrep::Theta4).dim == 16);
    CHECK(dictionary_entry(Sp4F2Irrep::Chi12_1).partition == P({4, 1, 1}));
    CHECK(dictionary_entry(Sp4F2Irrep::Chi12_1).dim == 10);
    CHECK(dictionary_entry(Sp4F2Irrep::Theta0).partition == P({6}));
    CHECK(dictionary_entry(Sp4F2Irrep::Theta0).dim == 1);

    // dimensions agree with the hook length formula, partitions are a bijection
    std::set<Partition> seen;
    std::multiset<long long> dims;
    for (const auto& e : dict) {
        CHECK(e.dim == irrep_dimension(e.partition));
        seen.insert(e.partition);
        dims.insert(e.dim);
    }
    CHECK(seen.size() == 11);
    CHECK(dims == std::multiset<long long>{1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16});

    CHECK(irrep_by_name("chi8(1)") == Sp4F2Irrep::Chi8_1);
    CHECK(!irrep_by_name("chi8").has_value());
}

TEST_CASE("multiplicity vector dimension bookkeeping") {
    MultiplicityVector v;
    v.add(Sp4F2Irrep::Theta1, 2);
    v.add(Sp4F2Irrep::Chi13_1, 1);
    CHECK(v.total_dimension() == 2 * 9 + 10);
    CHECK(v.str() == "2*theta1 + chi13(1)");
    CHECK(MultiplicityVector().str() == "0");
    CHECK_THROWS_AS(v.add(Sp4F2Irrep::Theta1, -5), std::invalid_argument);
}

TEST_CASE("decompose class functions") {
    // regular representation: 720 at the identity, 0 elsewhere
    const auto classes = partitions_of(6);
    ClassFunction reg(classes.size(), 0);
    for (size_t c = 0; c < classes.size(); ++c) {
        if (classes[c] == P({1, 1, 1, 1, 1, 1})) reg[c] = 720;
    }
    auto res = decompose(reg);
    REQUIRE(res.ok);
    for (const auto& e : sp4f2_dictionary()) CHECK(res.mult[e.label] == e.dim);

    // an irreducible decomposes to a unit vector
    res = decompose(character_of(P({6})));
    REQUIRE(res.ok);
    CHECK(res.mult == MultiplicityVector::unit(Sp4F2Irrep::Theta0));

    // linearity: chi_[6] + 2 chi_[4,2] -> theta0 + 2 theta1
    ClassFunction mix = character_of(P({6}));
    const ClassFunction c42 = character_of(P({4, 2}));
    for (size_t c = 0; c < mix.size(); ++c) mix[c] += 2 * c42[c];
    res = decompose(mix);
    REQUIRE(res.ok);
    MultiplicityVector expect;
    expect.add(Sp4F2Irrep::Theta0, 1);
    expect.add(Sp4F2Irrep::Theta1, 2);
    CHECK(res.mult == expect);

    // non-character input fails and reports the offending inner products
    ClassFunction bogus(classes.size(), 0);
    bogus[0] = 1;  // value 1 on class [6] only: inner products are not integral
    res = decompose(bogus);
    CHECK(!res.ok);
    CHECK(!res.offending.empty());
}

TEST_CASE("decompose round trip on random multiplicities") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long long> dist(0, 7);
    for (int trial = 0; trial < 25; ++trial) {
        MultiplicityVector v;
        for (int i = 0; i < kNumSp4F2Irreps; ++i) {
            v.add(static_cast<Sp4F2Irrep>(i), dist(rng));
        }
        const ClassFunction phi = synthesize(v);
        const auto res = decompose(phi);
        REQUIRE(res.ok);
        CHECK(res.mult == v);
        CHECK(synthesize(res.mult) == phi);
    }
}
