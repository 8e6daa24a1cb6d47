#ifndef SCHUR_SKEW_SHAPE_HPP
#define SCHUR_SKEW_SHAPE_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "schur/partition.hpp"

namespace schur {

/// A skew diagram outer/inner, kept in canonical form: no empty rows and no
/// empty columns. Construction canonicalizes, so two (outer, inner) pairs
/// describing the same set of boxes (up to deleting empty rows/columns)
/// compare equal. Disconnected diagrams are allowed.
class SkewShape {
public:
    /// The empty diagram.
    SkewShape() = default;

    /// Builds outer/inner. Throws std::invalid_argument if `inner` is not
    /// contained in `outer`. The stored pair is canonical: rows with no
    /// boxes are deleted and columns with no boxes are compressed away.
    SkewShape(Partition outer, Partition inner);

    /// A straight shape: outer/() with no inner boxes removed.
    explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition{}) {}

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }

    /// Number of non-empty rows (canonical form, so all rows are non-empty).
    std::size_t rows() const noexcept { return outer_.length(); }

    /// Number of non-empty columns.
    std::size_t cols() const noexcept { return outer_.empty() ? 0 : static_cast<std::size_t>(outer_.part(0)); }

    /// Number of boxes.
    long long boxes() const noexcept { return outer_.size() - inner_.size(); }

    bool empty() const noexcept { return outer_.empty(); }

    /// True when the diagram is a straight (non-skew) shape.
    bool is_straight() const noexcept { return inner_.empty(); }

    /// True when row i (0-indexed) has a box in column j (0-indexed).
    bool has_box(std::size_t i, std::size_t j) const noexcept {
        return i < rows() && static_cast<int>(j) >= inner_.part(i) &&
               static_cast<int>(j) < outer_.part(i);
    }

    /// First column (0-indexed) of row i, i.e. inner_i.
    int row_begin(std::size_t i) const noexcept { return inner_.part(i); }

    /// One past the last column (0-indexed) of row i, i.e. outer_i.
    int row_end(std::size_t i) const noexcept { return outer_.part(i); }

    /// Row lengths top to bottom (a composition, not necessarily sorted).
    std::vector<int> row_lengths() const;

    /// Column lengths left to right.
    std::vector<int> col_lengths() const;

    friend std::strong_ordering operator<=>(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

std::ostream& operator<<(std::ostream&, const SkewShape&);

/// Transposed (conjugate) diagram.
SkewShape transpose_shape(const SkewShape& shape);

/// Overlap of a window of k >= 1 consecutive rows starting at row i
/// (1-indexed): the number of columns common to all k rows, i.e.
/// max(0, outer_{i+k-1} - inner_i). Throws std::out_of_range unless
/// 1 <= i <= rows() - k + 1.
int overlap_count(const SkewShape& shape, int k, int i);

/// The partition rows_k: all k-row window overlaps, sorted decreasingly
/// with zeros discarded. Empty for k > rows(). Throws
/// std::invalid_argument for k < 1.
Partition row_overlaps(const SkewShape& shape, int k);

/// The partition cols_l: column-side counterpart of row_overlaps, equal to
/// row_overlaps(transpose_shape(shape), l).
Partition col_overlaps(const SkewShape& shape, int l);

/// Number of k x l rectangles of boxes contained in the diagram
/// (k rows, l columns, k, l >= 1; otherwise std::invalid_argument).
/// Computed from row_overlaps and cross-checked against col_overlaps;
/// disagreement raises std::logic_error.
long long rectangle_count(const SkewShape& shape, int k, int l);

/// All row- and column-overlap partitions plus the rectangle counts of a
/// diagram, computed in one pass. rows[k-1] is row_overlaps(k) for
/// k = 1..rows(); cols[l-1] is col_overlaps(l) for l = 1..cols();
/// rect(k, l) is rectangle_count(k, l).
struct OverlapProfile {
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    std::vector<std::vector<long long>> rects; // [k-1][l-1]

    /// row_overlaps(k) with the convention that k beyond rows() is empty.
    const Partition& rows_at(std::size_t k) const noexcept {
        static const Partition none;
        return k >= 1 && k <= rows.size() ? rows[k - 1] : none;
    }

    /// col_overlaps(l) with the convention that l beyond cols() is empty.
    const Partition& cols_at(std::size_t l) const noexcept {
        static const Partition none;
        return l >= 1 && l <= cols.size() ? cols[l - 1] : none;
    }

    /// rectangle_count(k, l); zero outside the stored table.
    long long rect_at(std::size_t k, std::size_t l) const noexcept {
        return k >= 1 && k <= rects.size() && l >= 1 && l <= rects[k - 1].size()
                   ? rects[k - 1][l - 1]
                   : 0;
    }
};

/// Computes the full overlap profile. Every rectangle count is evaluated
/// from both the row and the column overlaps; any disagreement raises
/// std::logic_error.
OverlapProfile overlap_profile(const SkewShape& shape);

/// Removes the top box of every non-empty column and canonicalizes.
/// trim of the empty diagram is the empty diagram.
SkewShape trim(const SkewShape& shape);

/// trim applied j >= 0 times. Throws std::invalid_argument for j < 0.
SkewShape trim_power(const SkewShape& shape, int j);

/// The disconnected diagram with `b` in the lower left and `a` in the
/// upper right, shifted so the two pieces share no row or column.
SkewShape star_product(const SkewShape& a, const SkewShape& b);

/// All canonical skew diagrams with exactly n >= 1 boxes, in a fixed
/// deterministic order. Disconnected diagrams are included.
/// Throws std::invalid_argument for n < 1.
std::vector<SkewShape> enumerate_skew_shapes(int n);

} // namespace schur

#endif
