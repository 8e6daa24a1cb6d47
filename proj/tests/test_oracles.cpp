#include "test_oracles.hpp"

#include <algorithm>

namespace test_oracle {

using schur::Partition;
using schur::SchurExpansion;
using schur::SkewShape;

namespace {

/// All partitions fitting in a box of `rows` rows and `cols` columns with
/// exactly `boxes` boxes.
void partitions_in_box(int boxes, int rows, int cols, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
    if (boxes == 0) {
        out.push_back(prefix);
        return;
    }
    if (rows == 0) return;
    const int cap = std::min(cols, boxes);
    for (int part = cap; part >= 1; --part) {
        prefix.push_back(part);
        partitions_in_box(boxes - part, rows - 1, part, prefix, out);
        prefix.pop_back();
    }
}

std::vector<Partition> partitions_in_box(int boxes, int rows, int cols) {
    std::vector<std::vector<int>> raw;
    std::vector<int> prefix;
    partitions_in_box(boxes, rows, cols, prefix, raw);
    std::vector<Partition> out;
    out.reserve(raw.size());
    for (auto& parts : raw) out.emplace_back(std::move(parts));
    return out;
}

} // namespace

std::vector<SkewShape> naive_skew_shapes(int n) {
    // A diagram with n boxes and no empty row or column fits in n x n.
    std::vector<SkewShape> out;
    for (int outer_boxes = n; outer_boxes <= n * n; ++outer_boxes) {
        for (const Partition& outer : partitions_in_box(outer_boxes, n, n)) {
            for (const Partition& inner : partitions_in_box(outer_boxes - n, n, n)) {
                if (!schur::is_contained_in(inner, outer)) continue;
                bool canonical = true;
                for (std::size_t i = 0; canonical && i < outer.length(); ++i)
                    canonical = outer.part(i) > inner.part(i); // no empty row
                const Partition ot = schur::transpose(outer), it = schur::transpose(inner);
                for (std::size_t j = 0; canonical && j < ot.length(); ++j)
                    canonical = ot.part(j) > it.part(j); // no empty column
                if (canonical) out.emplace_back(outer, inner);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long direct_rectangle_count(const SkewShape& shape, int k, int l) {
    long long count = 0;
    const int rows = static_cast<int>(shape.rows());
    const int cols = static_cast<int>(shape.cols());
    for (int i = 0; i + k <= rows; ++i) {
        for (int j = 0; j + l <= cols; ++j) {
            bool full = true;
            for (int di = 0; full && di < k; ++di)
                for (int dj = 0; full && dj < l; ++dj)
                    full = shape.has_box(static_cast<std::size_t>(i + di),
                                         static_cast<std::size_t>(j + dj));
            count += full;
        }
    }
    return count;
}

namespace {

struct SsytCounter {
    const SkewShape& shape;
    int max_entry;
    std::vector<std::vector<int>> grid;
    std::vector<int> content;
    std::map<std::vector<int>, long long> result;

    explicit SsytCounter(const SkewShape& s, int m) : shape(s), max_entry(m) {
        for (std::size_t i = 0; i < shape.rows(); ++i)
            grid.emplace_back(static_cast<std::size_t>(shape.row_end(i) - shape.row_begin(i)),
                              0);
        content.assign(static_cast<std::size_t>(m), 0);
    }

    int& cell(std::size_t i, int j) {
        return grid[i][static_cast<std::size_t>(j - shape.row_begin(i))];
    }

    // Fill left to right within a row, rows top to bottom: the opposite
    // sweep from the library's enumerator.
    void fill(std::size_t i, int j) {
        if (i == shape.rows()) {
            ++result[content];
            return;
        }
        if (j == shape.row_end(i)) {
            fill(i + 1, i + 1 < shape.rows() ? shape.row_begin(i + 1) : 0);
            return;
        }
        int lo = 1;
        if (j > shape.row_begin(i)) lo = std::max(lo, cell(i, j - 1));
        if (i > 0 && shape.has_box(i - 1, static_cast<std::size_t>(j)))
            lo = std::max(lo, cell(i - 1, j) + 1);
        for (int v = lo; v <= max_entry; ++v) {
            cell(i, j) = v;
            ++content[static_cast<std::size_t>(v) - 1];
            fill(i, j + 1);
            --content[static_cast<std::size_t>(v) - 1];
        }
    }
};

} // namespace

std::map<std::vector<int>, long long> ssyt_contents(const SkewShape& shape, int m) {
    SsytCounter counter(shape, m);
    counter.fill(0, shape.rows() ? shape.row_begin(0) : 0);
    return counter.result;
}

std::map<std::vector<int>, long long> expansion_contents(const SchurExpansion& expansion,
                                                         int m) {
    std::map<std::vector<int>, long long> total;
    for (const auto& [nu, coeff] : expansion.terms()) {
        for (const auto& [content, count] : ssyt_contents(SkewShape(nu), m)) {
            auto it = total.try_emplace(content, 0).first;
            if ((it->second += coeff * count) == 0) total.erase(it);
        }
    }
    return total;
}

} // namespace test_oracle
