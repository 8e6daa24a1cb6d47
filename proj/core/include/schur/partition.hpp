#ifndef SCHUR_PARTITION_HPP
#define SCHUR_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace schur {

/// An integer partition: a weakly decreasing sequence of positive integers.
///
/// The empty partition is a valid value and is the identity for union_of.
/// Parts are stored without trailing (or internal) zeros; zero parts passed
/// to the constructor are stripped before validation.
class Partition {
public:
    Partition() = default;

    /// Builds a partition from `parts`. Zero parts are removed; the
    /// remaining parts must be positive and weakly decreasing, otherwise
    /// std::invalid_argument is thrown.
    explicit Partition(std::vector<int> parts);

    /// i-th part, 0-indexed. Indices at or beyond length() yield 0, so
    /// partitions act as infinite weakly decreasing sequences padded with
    /// zeros.
    int part(std::size_t i) const noexcept {
        return i < parts_.size() ? parts_[i] : 0;
    }

    /// Number of positive parts.
    std::size_t length() const noexcept { return parts_.size(); }

    /// Sum of the parts (the number being partitioned).
    long long size() const noexcept { return size_; }

    bool empty() const noexcept { return parts_.empty(); }

    const std::vector<int>& parts() const noexcept { return parts_; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    /// Lexicographic comparison of the part sequences. This is a total
    /// order used for container keys and deterministic output; it is not
    /// the dominance order.
    friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    long long size_ = 0;
};

std::ostream& operator<<(std::ostream&, const Partition&);

/// Transpose (conjugate) partition: column lengths of the Young diagram.
Partition transpose(const Partition& p);

/// Dominance order, extended to partitions of unequal sizes:
/// `lower` is dominated by `upper` when every prefix sum of `lower` is at
/// most the corresponding prefix sum of `upper`, for prefixes up to
/// length(lower). Reflexive; for equal-size partitions this is the usual
/// dominance order.
bool dominates(const Partition& lower, const Partition& upper);

/// Multiset union of the parts of `a` and `b`, sorted weakly decreasing.
Partition union_of(const Partition& a, const Partition& b);

/// True when the diagram of `inner` fits inside the diagram of `outer`,
/// i.e. inner_i <= outer_i for all i.
bool is_contained_in(const Partition& inner, const Partition& outer);

/// All partitions of n >= 0, in decreasing lexicographic order.
/// n < 0 throws std::invalid_argument.
std::vector<Partition> list_partitions(int n);

} // namespace schur

#endif
