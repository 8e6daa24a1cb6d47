#include "schur/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace schur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::erase(parts_, 0);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition part is negative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts are not weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) os << ',';
        os << p.part(i);
    }
    return os << ')';
}

Partition transpose(const Partition& p) {
    std::vector<int> cols(p.empty() ? 0 : static_cast<std::size_t>(p.part(0)));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        // Column j (0-indexed) meets every row whose part exceeds j.
        cols[j] = static_cast<int>(std::count_if(
            p.begin(), p.end(), [j](int part) { return part > static_cast<int>(j); }));
    }
    return Partition(std::move(cols));
}

bool dominates(const Partition& lower, const Partition& upper) {
    long long lo = 0, hi = 0;
    for (std::size_t i = 0; i < lower.length(); ++i) {
        lo += lower.part(i);
        hi += upper.part(i);
        if (lo > hi) return false;
    }
    return true;
}

Partition union_of(const Partition& a, const Partition& b) {
    std::vector<int> merged(a.length() + b.length());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), merged.begin(),
               std::greater<int>());
    return Partition(std::move(merged));
}

bool is_contained_in(const Partition& inner, const Partition& outer) {
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

namespace {

void extend_partitions(std::vector<int>& prefix, int remaining, int max_part,
                       std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int next = std::min(max_part, remaining); next >= 1; --next) {
        prefix.push_back(next);
        extend_partitions(prefix, remaining - next, next, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> list_partitions(int n) {
    if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> prefix;
    extend_partitions(prefix, n, n, out);
    return out;
}

} // namespace schur
