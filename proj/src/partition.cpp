#include "parinv/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace parinv::symgroup {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int m) const {
    int c = 0;
    for (int p : parts_)
        if (p == m) ++c;
    return c;
}

std::string Partition::str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

namespace {

void gen(int remaining, int cap, std::vector<int>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int p = std::min(cap, remaining); p >= 1; --p) {
        stack.push_back(p);
        gen(remaining - p, p, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 1 || n > 20) {
        throw std::out_of_range("partitions_of supports 1 <= n <= 20");
    }
    std::vector<Partition> out;
    std::vector<int> stack;
    gen(n, n, stack, out);
    return out;
}

}  // namespace parinv::symgroup
