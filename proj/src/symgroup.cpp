#include "parinv/symgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "parinv/errors.hpp"

namespace parinv::symgroup {

namespace {

// Murnaghan-Nakayama on beta-sets.  Removing a border strip of length t from
// lambda means replacing one first-column hook length b by b - t, provided
// b - t >= 0 and is not already a hook length; the sign is (-1)^(number of
// hook lengths strictly between).
long long mn_recurse(const std::vector<int>& lam, const std::vector<int>& mu, size_t mi,
                     std::map<std::pair<std::vector<int>, size_t>, long long>& memo,
                     const std::vector<int>& mu_full) {
    (void)mu_full;
    if (mi == mu.size()) {
        return lam.empty() ? 1 : 0;
    }
    auto key = std::make_pair(lam, mi);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }

    const int t = mu[mi];
    const int k = static_cast<int>(lam.size());
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lam[i] + (k - 1 - i);  // strictly decreasing

    long long total = 0;
    for (int i = 0; i < k; ++i) {
        const int b = beta[i] - t;
        if (b < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            if (beta[j] == b) occupied = true;
            if (beta[j] > b && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;

        std::vector<int> nbeta = beta;
        nbeta[i] = b;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nlam;
        nlam.reserve(k);
        for (int j = 0; j < k; ++j) {
            int part = nbeta[j] - (k - 1 - j);
            if (part > 0) nlam.push_back(part);
        }
        const long long sub = mn_recurse(nlam, mu, mi + 1, memo, mu_full);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

struct MnCache {
    std::mutex mtx;
    // Keyed by the full cycle type; inner memo keyed by (lambda, position).
    std::map<std::vector<int>, std::map<std::pair<std::vector<int>, size_t>, long long>> per_mu;
};

MnCache& mn_cache() {
    static MnCache cache;
    return cache;
}

}  // namespace

long long character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) {
        throw std::invalid_argument("character_value: partitions of different integers");
    }
    auto& cache = mn_cache();
    std::lock_guard<std::mutex> lock(cache.mtx);
    auto& memo = cache.per_mu[mu.parts()];
    return mn_recurse(lambda.parts(), mu.parts(), 0, memo, mu.parts());
}

Int irrep_dimension_big(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const int rows = static_cast<int>(parts.size());
    // conjugate partition
    std::vector<int> conj;
    if (rows > 0) {
        conj.assign(parts[0], 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < parts[i]; ++j) ++conj[j];
    }
    Int hooks = 1;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < parts[i]; ++j) {
            hooks *= (parts[i] - j) + (conj[j] - i) - 1;
        }
    }
    Int dim = factorial(static_cast<unsigned>(lambda.n()));
    if (!mpz_divisible_p(dim.get_mpz_t(), hooks.get_mpz_t())) {
        throw ConsistencyError("hook product does not divide n!");
    }
    return dim / hooks;
}

long long irrep_dimension(const Partition& lambda) {
    return to_longlong(irrep_dimension_big(lambda));
}

Int class_size(const Partition& mu) {
    Int z = 1;
    int prev = -1;
    int run = 0;
    auto flush = [&](int m, int count) {
        if (m <= 0 || count == 0) return;
        z *= pow_int(Int(m), static_cast<unsigned long>(count));
        z *= factorial(static_cast<unsigned>(count));
    };
    for (int p : mu.parts()) {
        if (p == prev) {
            ++run;
        } else {
            flush(prev, run);
            prev = p;
            run = 1;
        }
    }
    flush(prev, run);
    return factorial(static_cast<unsigned>(mu.n())) / z;
}

// ---------------------------------------------------------------------------
// Sp(4,F_2) dictionary
// ---------------------------------------------------------------------------

namespace {

const char* const kIrrepNames[kNumSp4F2Irreps] = {
    "theta0", "theta1", "theta2", "theta3", "theta4", "theta5",
    "chi5(1)", "chi8(1)", "chi9(1)", "chi12(1)", "chi13(1)",
};

std::array<DictEntry, kNumSp4F2Irreps> make_dictionary() {
    using P = std::vector<int>;
    return {{
        {Sp4F2Irrep::Theta0, Partition(P{6}), 1},
        {Sp4F2Irrep::Theta1, Partition(P{4, 2}), 9},
        {Sp4F2Irrep::Theta2, Partition(P{2, 2, 2}), 5},
        {Sp4F2Irrep::Theta3, Partition(P{5, 1}), 5},
        {Sp4F2Irrep::Theta4, Partition(P{3, 2, 1}), 16},
        {Sp4F2Irrep::Theta5, Partition(P{1, 1, 1, 1, 1, 1}), 1},
        {Sp4F2Irrep::Chi5_1, Partition(P{2, 2, 1, 1}), 9},
        {Sp4F2Irrep::Chi8_1, Partition(P{3, 3}), 5},
        {Sp4F2Irrep::Chi9_1, Partition(P{2, 1, 1, 1, 1}), 5},
        {Sp4F2Irrep::Chi12_1, Partition(P{4, 1, 1}), 10},
        {Sp4F2Irrep::Chi13_1, Partition(P{3, 1, 1, 1}), 10},
    }};
}

}  // namespace

const char* irrep_name(Sp4F2Irrep r) { return kIrrepNames[static_cast<int>(r)]; }

std::optional<Sp4F2Irrep> irrep_by_name(const std::string& name) {
    for (int i = 0; i < kNumSp4F2Irreps; ++i) {
        if (name == kIrrepNames[i]) return static_cast<Sp4F2Irrep>(i);
    }
    return std::nullopt;
}

const std::array<DictEntry, kNumSp4F2Irreps>& sp4f2_dictionary() {
    static const auto dict = make_dictionary();
    return dict;
}

const DictEntry& dictionary_entry(Sp4F2Irrep r) {
    return sp4f2_dictionary()[static_cast<int>(r)];
}

std::optional<Sp4F2Irrep> irrep_of_partition(const Partition& lambda) {
    for (const auto& e : sp4f2_dictionary()) {
        if (e.partition == lambda) return e.label;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Multiplicity vectors and decomposition
// ---------------------------------------------------------------------------

MultiplicityVector MultiplicityVector::unit(Sp4F2Irrep r) {
    MultiplicityVector v;
    v.add(r, 1);
    return v;
}

void MultiplicityVector::add(Sp4F2Irrep r, long long m) {
    long long& c = counts_[static_cast<int>(r)];
    c += m;
    if (c < 0) throw std::invalid_argument("multiplicity went negative");
}

void MultiplicityVector::add_scaled(const MultiplicityVector& other, long long scale) {
    for (int i = 0; i < kNumSp4F2Irreps; ++i) {
        counts_[i] += scale * other.counts_[i];
        if (counts_[i] < 0) throw std::invalid_argument("multiplicity went negative");
    }
}

bool MultiplicityVector::is_zero() const {
    for (long long c : counts_)
        if (c != 0) return false;
    return true;
}

long long MultiplicityVector::total_dimension() const {
    long long total = 0;
    for (int i = 0; i < kNumSp4F2Irreps; ++i) {
        total += counts_[i] * sp4f2_dictionary()[i].dim;
    }
    return total;
}

std::string MultiplicityVector::str() const {
    std::string s;
    for (int i = 0; i < kNumSp4F2Irreps; ++i) {
        if (counts_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (counts_[i] != 1) s += std::to_string(counts_[i]) + "*";
        s += kIrrepNames[i];
    }
    return s.empty() ? "0" : s;
}

ClassFunction character_of(const Partition& lambda) {
    if (lambda.n() != 6) throw std::invalid_argument("character_of: partition of 6 expected");
    ClassFunction values;
    for (const auto& mu : partitions_of(6)) {
        values.push_back(character_value(lambda, mu));
    }
    return values;
}

ClassFunction character_of(Sp4F2Irrep r) { return character_of(dictionary_entry(r).partition); }

ClassFunction synthesize(const MultiplicityVector& mult) {
    ClassFunction total(kNumSigma6Classes, 0);
    for (int i = 0; i < kNumSp4F2Irreps; ++i) {
        const auto r = static_cast<Sp4F2Irrep>(i);
        if (mult[r] == 0) continue;
        const ClassFunction chi = character_of(r);
        for (int c = 0; c < kNumSigma6Classes; ++c) total[c] += mult[r] * chi[c];
    }
    return total;
}

DecomposeResult decompose(const ClassFunction& phi) {
    const auto classes = partitions_of(6);
    if (phi.size() != classes.size()) {
        throw std::invalid_argument("decompose: class function must have 11 values");
    }
    const Int order = factorial(6);  // 720

    DecomposeResult result;
    result.ok = true;
    for (const auto& lambda : partitions_of(6)) {
        Int sum = 0;
        for (size_t c = 0; c < classes.size(); ++c) {
            sum += class_size(classes[c]) * make_int(phi[c]) *
                   make_int(character_value(lambda, classes[c]));
        }
        Rat m(sum, order);
        m.canonicalize();
        if (m.get_den() != 1 || m < 0) {
            result.ok = false;
            result.offending.emplace_back(lambda, m);
            continue;
        }
        const long long mult = to_longlong(m.get_num());
        if (mult != 0) {
            const auto label = irrep_of_partition(lambda);
            // every partition of 6 labels exactly one irreducible
            result.mult.add(*label, mult);
        }
    }
    if (!result.ok) result.mult = MultiplicityVector();
    return result;
}

}  // namespace parinv::symgroup
