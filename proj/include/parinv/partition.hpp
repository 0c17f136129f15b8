#pragma once

#include <compare>
#include <string>
#include <vector>

namespace parinv::symgroup {

// Integer partition in canonical form: weakly decreasing positive parts,
// no trailing zeros.
class Partition {
public:
    Partition() = default;  // the empty partition of 0
    explicit Partition(std::vector<int> parts);

    int n() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    // Number of parts equal to m.
    int multiplicity(int m) const;

    std::string str() const;  // "[3,2,1]", exponent-free

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on the part lists; with parts descending this makes
    // `>` the canonical enumeration order (reverse lexicographic).
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// All partitions of n in reverse lexicographic order ([n] first, [1^n] last).
// Guarded to 1 <= n <= 20.
std::vector<Partition> partitions_of(int n);

}  // namespace parinv::symgroup
