#ifndef SCHUR_TABLEAUX_HPP
#define SCHUR_TABLEAUX_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "schur/partition.hpp"
#include "schur/skew_shape.hpp"

namespace schur {

/// A filling of a skew diagram with positive integers, one entry per box,
/// stored row by row (top to bottom, left to right within a row).
class LRFilling {
public:
    /// Throws std::invalid_argument unless `entries` has one row per
    /// diagram row, row i has exactly as many values as the diagram row,
    /// and every value is positive.
    LRFilling(SkewShape shape, std::vector<std::vector<int>> entries);

    const SkewShape& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& entries() const noexcept { return entries_; }

    /// Entry in row i at column j (0-indexed diagram coordinates).
    /// Throws std::out_of_range if (i, j) is not a box of the diagram.
    int at(std::size_t i, std::size_t j) const;

    /// Reverse reading word: rows top to bottom, each row right to left.
    std::vector<int> reverse_reading_word() const;

    /// Multiplicity vector of the entries as a partition. Throws
    /// std::invalid_argument if the multiplicities are not weakly
    /// decreasing (so content of an arbitrary filling may not exist).
    Partition content() const;

    /// Rows weakly increase left to right and columns strictly increase
    /// top to bottom.
    bool is_semistandard() const;

    /// The reverse reading word is a lattice word.
    bool is_lattice_filling() const;

    friend bool operator==(const LRFilling&, const LRFilling&) = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> entries_;
};

std::ostream& operator<<(std::ostream&, const LRFilling&);

/// True when every prefix of `word` contains at least as many values v as
/// values v+1, for every v >= 1. Entries must be positive; a non-positive
/// entry makes the word non-lattice.
bool is_lattice(std::span<const int> word);

/// A formal integer combination of Schur functions indexed by partitions.
/// Zero coefficients are never stored.
class SchurExpansion {
public:
    using Terms = std::map<Partition, long long>;

    SchurExpansion() = default;

    /// Adds `coeff * s_nu`; erases the term if the result is zero.
    void add(const Partition& nu, long long coeff);

    const Terms& terms() const noexcept { return terms_; }
    long long coefficient(const Partition& nu) const;
    bool is_zero() const noexcept { return terms_.empty(); }

    /// True when no stored coefficient is negative (the zero expansion is
    /// positive).
    bool is_positive() const;

    /// Set of partitions with non-zero coefficient.
    std::set<Partition> support() const;

    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

private:
    Terms terms_;
};

SchurExpansion operator+(const SchurExpansion& a, const SchurExpansion& b);
SchurExpansion operator-(const SchurExpansion& a, const SchurExpansion& b);
std::ostream& operator<<(std::ostream&, const SchurExpansion&);

/// All fillings of the diagram that are semistandard with a lattice
/// reverse reading word, in lexicographic order of the reverse reading
/// word. The empty diagram has exactly one (empty) filling.
std::vector<LRFilling> enumerate_lr_fillings(const SkewShape& shape);

/// Schur expansion of the skew Schur function of the diagram: coefficient
/// of s_nu is the number of lattice semistandard fillings with content nu.
SchurExpansion lr_expand(const SkewShape& shape);

/// Partitions appearing with non-zero coefficient in lr_expand(shape).
std::set<Partition> support(const SkewShape& shape);

/// The filling whose content is the dominance-largest partition in the
/// support: the p-th box from the top of every column holds p. Throws
/// std::domain_error on the empty diagram.
LRFilling most_dominant_filling(const SkewShape& shape);

/// The filling whose content is the dominance-smallest partition in the
/// support (the sorted row lengths): repeatedly strip the rightmost
/// remaining box of every non-empty row, labelling the stripped boxes
/// 1, 2, ... top to bottom on each pass. Throws std::domain_error on the
/// empty diagram.
LRFilling least_dominant_filling(const SkewShape& shape);

/// The filling that realises content equal to the first k-1 column-overlap
/// parts followed by the k-row overlap parts: boxes in the top k-1 cells
/// of each column follow the most-dominant rule; the remaining boxes are
/// filled by the least-dominant rule with labels shifted up by k-1.
/// Requires k >= 1 and a non-empty diagram; throws std::domain_error
/// otherwise.
LRFilling hybrid_filling(const SkewShape& shape, int k);

} // namespace schur

#endif
