#include "schur/skew_shape.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace schur {

SkewShape::SkewShape(Partition outer, Partition inner) {
    if (!is_contained_in(inner, outer))
        throw std::invalid_argument("inner partition is not contained in outer partition");

    // Keep only rows that still hold boxes.
    std::vector<int> out_rows, in_rows;
    for (std::size_t i = 0; i < outer.length(); ++i) {
        if (outer.part(i) > inner.part(i)) {
            out_rows.push_back(outer.part(i));
            in_rows.push_back(inner.part(i));
        }
    }
    if (out_rows.empty()) return;

    // Compress away columns with no boxes. Column j (0-indexed) is occupied
    // when some kept row covers it; shift[j] counts unoccupied columns
    // strictly left of j.
    const int ncols = out_rows.front();
    std::vector<char> occupied(static_cast<std::size_t>(ncols), 0);
    for (std::size_t i = 0; i < out_rows.size(); ++i)
        for (int j = in_rows[i]; j < out_rows[i]; ++j)
            occupied[static_cast<std::size_t>(j)] = 1;
    std::vector<int> shift(static_cast<std::size_t>(ncols) + 1, 0);
    for (int j = 0; j < ncols; ++j)
        shift[static_cast<std::size_t>(j) + 1] =
            shift[static_cast<std::size_t>(j)] + (occupied[static_cast<std::size_t>(j)] ? 0 : 1);

    for (std::size_t i = 0; i < out_rows.size(); ++i) {
        out_rows[i] -= shift[static_cast<std::size_t>(out_rows[i])];
        in_rows[i] -= shift[static_cast<std::size_t>(in_rows[i])];
    }
    outer_ = Partition(std::move(out_rows));
    inner_ = Partition(std::move(in_rows));
}

std::vector<int> SkewShape::row_lengths() const {
    std::vector<int> lengths(rows());
    for (std::size_t i = 0; i < rows(); ++i) lengths[i] = row_end(i) - row_begin(i);
    return lengths;
}

std::vector<int> SkewShape::col_lengths() const {
    const Partition ot = transpose(outer_), it = transpose(inner_);
    std::vector<int> lengths(cols());
    for (std::size_t j = 0; j < cols(); ++j) lengths[j] = ot.part(j) - it.part(j);
    return lengths;
}

std::ostream& operator<<(std::ostream& os, const SkewShape& shape) {
    return os << shape.outer() << '/' << shape.inner();
}

SkewShape transpose_shape(const SkewShape& shape) {
    return SkewShape(transpose(shape.outer()), transpose(shape.inner()));
}

int overlap_count(const SkewShape& shape, int k, int i) {
    if (k < 1 || i < 1 || static_cast<std::size_t>(i + k - 1) > shape.rows())
        throw std::out_of_range("overlap window does not fit in the diagram");
    // Columns shared by rows i..i+k-1: the last row is shortest on the
    // right, the first starts furthest right on the left.
    const int x = shape.outer().part(static_cast<std::size_t>(i + k - 2)) -
                  shape.inner().part(static_cast<std::size_t>(i - 1));
    return std::max(0, x);
}

Partition row_overlaps(const SkewShape& shape, int k) {
    if (k < 1) throw std::invalid_argument("overlap window height must be at least 1");
    std::vector<int> counts;
    for (int i = 1; i + k - 1 <= static_cast<int>(shape.rows()); ++i)
        counts.push_back(overlap_count(shape, k, i));
    std::sort(counts.begin(), counts.end(), std::greater<int>());
    return Partition(std::move(counts));
}

Partition col_overlaps(const SkewShape& shape, int l) {
    return row_overlaps(transpose_shape(shape), l);
}

namespace {

/// Number of boxes weakly right of column `col` (1-indexed) in the diagram
/// of `p`: sum over parts of max(0, part - col + 1).
long long boxes_from_column(const Partition& p, int col) {
    long long total = 0;
    for (int part : p) total += std::max(0, part - col + 1);
    return total;
}

long long rect_count_checked(const Partition& from_rows, const Partition& from_cols,
                             int k, int l) {
    const long long via_rows = boxes_from_column(from_rows, l);
    const long long via_cols = boxes_from_column(from_cols, k);
    if (via_rows != via_cols)
        throw std::logic_error("rectangle count disagrees between row and column overlaps");
    return via_rows;
}

} // namespace

long long rectangle_count(const SkewShape& shape, int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("rectangle sides must be at least 1");
    return rect_count_checked(row_overlaps(shape, k), col_overlaps(shape, l), k, l);
}

OverlapProfile overlap_profile(const SkewShape& shape) {
    OverlapProfile profile;
    const std::size_t r = shape.rows(), c = shape.cols();
    profile.rows.reserve(r);
    for (std::size_t k = 1; k <= r; ++k)
        profile.rows.push_back(row_overlaps(shape, static_cast<int>(k)));
    const SkewShape flipped = transpose_shape(shape);
    profile.cols.reserve(c);
    for (std::size_t l = 1; l <= c; ++l)
        profile.cols.push_back(row_overlaps(flipped, static_cast<int>(l)));
    profile.rects.assign(r, std::vector<long long>(c, 0));
    for (std::size_t k = 1; k <= r; ++k)
        for (std::size_t l = 1; l <= c; ++l)
            profile.rects[k - 1][l - 1] = rect_count_checked(
                profile.rows[k - 1], profile.cols[l - 1], static_cast<int>(k), static_cast<int>(l));
    return profile;
}

SkewShape trim(const SkewShape& shape) {
    if (shape.empty()) return {};
    // Deleting the top box of every column raises each column's inner
    // boundary by one; do the bookkeeping on the transpose.
    const Partition ot = transpose(shape.outer());
    const Partition it = transpose(shape.inner());
    std::vector<int> raised(ot.length());
    for (std::size_t j = 0; j < raised.size(); ++j) raised[j] = it.part(j) + 1;
    return transpose_shape(SkewShape(ot, Partition(std::move(raised))));
}

SkewShape trim_power(const SkewShape& shape, int j) {
    if (j < 0) throw std::invalid_argument("trim power must be non-negative");
    SkewShape result = shape;
    for (int step = 0; step < j; ++step) result = trim(result);
    return result;
}

SkewShape star_product(const SkewShape& a, const SkewShape& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const int width_b = static_cast<int>(b.cols());
    std::vector<int> outer, inner;
    outer.reserve(a.rows() + b.rows());
    inner.reserve(a.rows() + b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        outer.push_back(a.row_end(i) + width_b);
        inner.push_back(a.row_begin(i) + width_b);
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        outer.push_back(b.row_end(i));
        inner.push_back(b.row_begin(i));
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

namespace {

/// Appends every canonical shape whose rows have the given lengths.
/// Rows are built bottom-up; row i must start no further right than one
/// past the end of row i+1 (columns stay contiguous), start at or after
/// the start of row i+1, and end at or after the end of row i+1.
void shapes_for_row_lengths(const std::vector<int>& lengths, std::vector<SkewShape>& out) {
    const int r = static_cast<int>(lengths.size());
    std::vector<int> starts(static_cast<std::size_t>(r)); // 0-indexed first column per row

    auto place = [&](auto&& self, int row) -> void { // row counts down from r-1 to 0
        if (row < 0) {
            std::vector<int> outer(static_cast<std::size_t>(r)), inner(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) {
                inner[static_cast<std::size_t>(i)] = starts[static_cast<std::size_t>(i)];
                outer[static_cast<std::size_t>(i)] =
                    starts[static_cast<std::size_t>(i)] + lengths[static_cast<std::size_t>(i)];
            }
            out.emplace_back(Partition(std::move(outer)), Partition(std::move(inner)));
            return;
        }
        if (row == r - 1) {
            starts[static_cast<std::size_t>(row)] = 0; // bottom row pins the left edge
            self(self, row - 1);
            return;
        }
        const int below_start = starts[static_cast<std::size_t>(row) + 1];
        const int below_end = below_start + lengths[static_cast<std::size_t>(row) + 1];
        const int lo = std::max(below_start, below_end - lengths[static_cast<std::size_t>(row)]);
        for (int s = lo; s <= below_end; ++s) {
            starts[static_cast<std::size_t>(row)] = s;
            self(self, row - 1);
        }
    };
    place(place, r - 1);
}

void compositions_into(std::vector<int>& prefix, int remaining, int rows_left,
                       std::vector<SkewShape>& out) {
    if (rows_left == 0) {
        if (remaining == 0) shapes_for_row_lengths(prefix, out);
        return;
    }
    for (int len = 1; len + rows_left - 1 <= remaining; ++len) {
        prefix.push_back(len);
        compositions_into(prefix, remaining - len, rows_left - 1, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<SkewShape> enumerate_skew_shapes(int n) {
    if (n < 1) throw std::invalid_argument("diagram must have at least one box");
    std::vector<SkewShape> out;
    for (int r = 1; r <= n; ++r) {
        std::vector<int> lengths;
        compositions_into(lengths, n, r, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace schur
