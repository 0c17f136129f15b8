#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parinv/numeric.hpp"
#include "parinv/partition.hpp"

namespace parinv::symgroup {

// chi_lambda(mu) for partitions of the same n, by the Murnaghan-Nakayama
// recursion (memoized, thread-safe).  Values of Sigma_n characters fit in
// long long for n <= 20.
long long character_value(const Partition& lambda, const Partition& mu);

// n! / product of hook lengths.
Int irrep_dimension_big(const Partition& lambda);
long long irrep_dimension(const Partition& lambda);

// Size of the conjugacy class with cycle type mu in Sigma_n.
Int class_size(const Partition& mu);

// ---------------------------------------------------------------------------
// Sp(4,F_2) ~ Sigma_6.
//
// The eleven irreducible representations, in the fixed catalogue order used
// everywhere (serialization, multiplicity vectors, class functions).
// ---------------------------------------------------------------------------

enum class Sp4F2Irrep : int {
    Theta0 = 0,
    Theta1,
    Theta2,
    Theta3,
    Theta4,
    Theta5,
    Chi5_1,
    Chi8_1,
    Chi9_1,
    Chi12_1,
    Chi13_1,
};

inline constexpr int kNumSp4F2Irreps = 11;

const char* irrep_name(Sp4F2Irrep r);  // "theta0", ..., "chi13(1)"
std::optional<Sp4F2Irrep> irrep_by_name(const std::string& name);

struct DictEntry {
    Sp4F2Irrep label;
    Partition partition;
    long long dim;
};

// The fixed bijection between the Sp(4,F_2) labels and partitions of 6,
// with dimensions.  Well known to be canonical only up to the outer
// automorphism of Sigma_6; this is the one convention used throughout.
const std::array<DictEntry, kNumSp4F2Irreps>& sp4f2_dictionary();

const DictEntry& dictionary_entry(Sp4F2Irrep r);
std::optional<Sp4F2Irrep> irrep_of_partition(const Partition& lambda);

// Non-negative multiplicities over the eleven Sp(4,F_2) irreducibles.
class MultiplicityVector {
public:
    MultiplicityVector() { counts_.fill(0); }

    static MultiplicityVector unit(Sp4F2Irrep r);

    long long operator[](Sp4F2Irrep r) const { return counts_[static_cast<int>(r)]; }
    void add(Sp4F2Irrep r, long long m);
    void add_scaled(const MultiplicityVector& other, long long scale);

    bool is_zero() const;
    long long total_dimension() const;  // sum of mult * dim

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
    friend MultiplicityVector operator+(MultiplicityVector a, const MultiplicityVector& b) {
        a.add_scaled(b, 1);
        return a;
    }

    std::string str() const;  // "theta1 + 2*theta3" style, catalogue order

private:
    std::array<long long, kNumSp4F2Irreps> counts_;
};

// Integer class function on Sigma_6, indexed by partitions_of(6) order
// (cycle types, reverse lexicographic).
using ClassFunction = std::vector<long long>;

inline constexpr int kNumSigma6Classes = 11;

ClassFunction character_of(Sp4F2Irrep r);
ClassFunction character_of(const Partition& lambda);
ClassFunction synthesize(const MultiplicityVector& mult);

struct DecomposeResult {
    bool ok = false;
    MultiplicityVector mult;
    // For failed decompositions: the (partition, inner product) pairs that
    // were negative or non-integral.
    std::vector<std::pair<Partition, Rat>> offending;
};

// Inner-product decomposition of a Sigma_6 class function into irreducible
// multiplicities.  Fails (ok = false) if any multiplicity is negative or
// non-integral.
DecomposeResult decompose(const ClassFunction& phi);

}  // namespace parinv::symgroup
