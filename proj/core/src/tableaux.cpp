#include "schur/tableaux.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "schur/literals.hpp"

namespace schur {

LRFilling::LRFilling(SkewShape shape, std::vector<std::vector<int>> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (entries_.size() != shape_.rows())
        throw std::invalid_argument("filling has the wrong number of rows");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const std::size_t want =
            static_cast<std::size_t>(shape_.row_end(i) - shape_.row_begin(i));
        if (entries_[i].size() != want)
            throw std::invalid_argument("filling row has the wrong number of entries");
        for (int v : entries_[i])
            if (v < 1) throw std::invalid_argument("filling entries must be positive");
    }
}

int LRFilling::at(std::size_t i, std::size_t j) const {
    if (!shape_.has_box(i, j)) throw std::out_of_range("no box at this position");
    return entries_[i][j - static_cast<std::size_t>(shape_.row_begin(i))];
}

std::vector<int> LRFilling::reverse_reading_word() const {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(shape_.boxes()));
    for (const auto& row : entries_) word.insert(word.end(), row.rbegin(), row.rend());
    return word;
}

Partition LRFilling::content() const {
    std::vector<int> counts;
    for (const auto& row : entries_)
        for (int v : row) {
            if (static_cast<std::size_t>(v) > counts.size())
                counts.resize(static_cast<std::size_t>(v), 0);
            ++counts[static_cast<std::size_t>(v) - 1];
        }
    // Reject skipped values before zeros are stripped: (2,0,1) is not the
    // content partition (2,1).
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i] > counts[i - 1])
            throw std::invalid_argument("entry multiplicities are not weakly decreasing");
    return Partition(std::move(counts));
}

bool LRFilling::is_semistandard() const {
    for (std::size_t i = 0; i < shape_.rows(); ++i) {
        for (int j = shape_.row_begin(i); j < shape_.row_end(i); ++j) {
            const std::size_t col = static_cast<std::size_t>(j);
            if (j + 1 < shape_.row_end(i) && at(i, col) > at(i, col + 1)) return false;
            if (i > 0 && shape_.has_box(i - 1, col) && at(i - 1, col) >= at(i, col))
                return false;
        }
    }
    return true;
}

bool LRFilling::is_lattice_filling() const { return is_lattice(reverse_reading_word()); }

std::ostream& operator<<(std::ostream& os, const LRFilling& filling) {
    const SkewShape& shape = filling.shape();
    for (std::size_t i = 0; i < shape.rows(); ++i) {
        if (i) os << '\n';
        for (int j = 0; j < shape.row_end(i); ++j) {
            if (j) os << ' ';
            if (j < shape.row_begin(i))
                os << '.';
            else
                os << filling.at(i, static_cast<std::size_t>(j));
        }
    }
    return os;
}

bool is_lattice(std::span<const int> word) {
    std::vector<long long> counts;
    for (int v : word) {
        if (v < 1) return false;
        if (static_cast<std::size_t>(v) > counts.size())
            counts.resize(static_cast<std::size_t>(v), 0);
        ++counts[static_cast<std::size_t>(v) - 1];
        if (v >= 2 && counts[static_cast<std::size_t>(v) - 1] >
                          counts[static_cast<std::size_t>(v) - 2])
            return false;
    }
    return true;
}

void SchurExpansion::add(const Partition& nu, long long coeff) {
    if (coeff == 0) return;
    const auto [it, inserted] = terms_.try_emplace(nu, coeff);
    if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
}

long long SchurExpansion::coefficient(const Partition& nu) const {
    const auto it = terms_.find(nu);
    return it == terms_.end() ? 0 : it->second;
}

bool SchurExpansion::is_positive() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& term) { return term.second > 0; });
}

std::set<Partition> SchurExpansion::support() const {
    std::set<Partition> out;
    for (const auto& [nu, coeff] : terms_) out.insert(nu);
    return out;
}

SchurExpansion operator+(const SchurExpansion& a, const SchurExpansion& b) {
    SchurExpansion out = a;
    for (const auto& [nu, coeff] : b.terms()) out.add(nu, coeff);
    return out;
}

SchurExpansion operator-(const SchurExpansion& a, const SchurExpansion& b) {
    SchurExpansion out = a;
    for (const auto& [nu, coeff] : b.terms()) out.add(nu, -coeff);
    return out;
}

std::ostream& operator<<(std::ostream& os, const SchurExpansion& expansion) {
    if (expansion.is_zero()) return os << '0';
    bool first = true;
    // Decreasing lexicographic order of the indexing partitions.
    const auto& terms = expansion.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [nu, coeff] = *it;
        if (first)
            os << (coeff < 0 ? "-" : "");
        else
            os << (coeff < 0 ? " - " : " + ");
        first = false;
        const long long magnitude = coeff < 0 ? -coeff : coeff;
        if (magnitude != 1) os << magnitude << '*';
        os << "s[" << format_partition(nu) << ']';
    }
    return os;
}

namespace {

/// Depth-first enumeration of semistandard fillings whose reverse reading
/// word is lattice. Boxes are visited in reverse-reading order (rows top
/// to bottom, right to left within a row) and candidate values ascend, so
/// fillings are produced in lexicographic order of their words.
class FillingEnumerator {
public:
    explicit FillingEnumerator(const SkewShape& shape) : shape_(shape) {
        for (std::size_t i = 0; i < shape.rows(); ++i) {
            grid_.emplace_back(
                static_cast<std::size_t>(shape.row_end(i) - shape.row_begin(i)), 0);
            for (int j = shape.row_end(i) - 1; j >= shape.row_begin(i); --j)
                boxes_.emplace_back(i, j);
        }
        counts_.assign(shape.rows(), 0);
    }

    template <typename Visit>
    void run(Visit&& visit) {
        descend(0, visit);
    }

private:
    int& cell(std::size_t i, int j) {
        return grid_[i][static_cast<std::size_t>(j - shape_.row_begin(i))];
    }

    template <typename Visit>
    void descend(std::size_t pos, Visit& visit) {
        if (pos == boxes_.size()) {
            visit(grid_, counts_);
            return;
        }
        const auto [i, j] = boxes_[pos];
        int lo = 1;
        if (i > 0 && shape_.has_box(i - 1, static_cast<std::size_t>(j)))
            lo = cell(i - 1, j) + 1; // strict increase down columns
        // In a lattice semistandard filling, entries in row i never exceed
        // i+1 (1-indexed row number); the right neighbour caps weakly
        // increasing rows.
        int hi = static_cast<int>(i) + 1;
        if (j + 1 < shape_.row_end(i)) hi = std::min(hi, cell(i, j + 1));
        for (int v = lo; v <= hi; ++v) {
            // Keep the word prefix lattice: a v may follow only when v-1
            // already leads strictly.
            if (v >= 2 && counts_[static_cast<std::size_t>(v) - 2] <=
                              counts_[static_cast<std::size_t>(v) - 1])
                continue;
            cell(i, j) = v;
            ++counts_[static_cast<std::size_t>(v) - 1];
            descend(pos + 1, visit);
            --counts_[static_cast<std::size_t>(v) - 1];
        }
    }

    const SkewShape& shape_;
    std::vector<std::vector<int>> grid_;
    std::vector<std::pair<std::size_t, int>> boxes_;
    std::vector<long long> counts_;
};

Partition partition_from_counts(const std::vector<long long>& counts) {
    std::vector<int> parts;
    for (long long c : counts) {
        if (c == 0) break;
        parts.push_back(static_cast<int>(c));
    }
    return Partition(std::move(parts));
}

} // namespace

std::vector<LRFilling> enumerate_lr_fillings(const SkewShape& shape) {
    std::vector<LRFilling> out;
    FillingEnumerator enumerator(shape);
    enumerator.run([&](const std::vector<std::vector<int>>& grid,
                       const std::vector<long long>&) {
        out.emplace_back(shape, grid);
    });
    return out;
}

SchurExpansion lr_expand(const SkewShape& shape) {
    SchurExpansion expansion;
    FillingEnumerator enumerator(shape);
    enumerator.run([&](const std::vector<std::vector<int>>&,
                       const std::vector<long long>& counts) {
        expansion.add(partition_from_counts(counts), 1);
    });
    return expansion;
}

std::set<Partition> support(const SkewShape& shape) {
    return lr_expand(shape).support();
}

namespace {

std::vector<std::vector<int>> empty_grid(const SkewShape& shape) {
    std::vector<std::vector<int>> grid;
    grid.reserve(shape.rows());
    for (std::size_t i = 0; i < shape.rows(); ++i)
        grid.emplace_back(static_cast<std::size_t>(shape.row_end(i) - shape.row_begin(i)), 0);
    return grid;
}

/// Repeatedly removes the rightmost unfilled box of every row whose
/// unfilled stretch [first_free[i], row_end(i)) is non-empty, labelling
/// the boxes removed in one pass offset+1, offset+2, ... top to bottom.
void fill_rightmost_passes(const SkewShape& shape, std::vector<std::vector<int>>& grid,
                           const std::vector<int>& first_free, int offset) {
    std::vector<int> next(shape.rows());
    for (std::size_t i = 0; i < shape.rows(); ++i) next[i] = shape.row_end(i);
    bool stripped = true;
    while (stripped) {
        stripped = false;
        int label = offset;
        for (std::size_t i = 0; i < shape.rows(); ++i) {
            if (next[i] <= first_free[i]) continue;
            stripped = true;
            --next[i];
            grid[i][static_cast<std::size_t>(next[i] - shape.row_begin(i))] = ++label;
        }
    }
}

LRFilling validated(const SkewShape& shape, std::vector<std::vector<int>> grid,
                    const Partition& expected_content, const char* what) {
    LRFilling filling(shape, std::move(grid));
    if (!filling.is_semistandard() || !filling.is_lattice_filling() ||
        filling.content() != expected_content)
        throw std::logic_error(std::string(what) +
                               " filling failed its internal consistency check");
    return filling;
}

} // namespace

LRFilling most_dominant_filling(const SkewShape& shape) {
    if (shape.empty()) throw std::domain_error("empty diagram has no extreme fillings");
    auto grid = empty_grid(shape);
    const Partition top = transpose(shape.inner());
    for (std::size_t i = 0; i < shape.rows(); ++i)
        for (int j = shape.row_begin(i); j < shape.row_end(i); ++j)
            grid[i][static_cast<std::size_t>(j - shape.row_begin(i))] =
                static_cast<int>(i) - top.part(static_cast<std::size_t>(j)) + 1;
    // The content is the transpose of the sorted column lengths.
    return validated(shape, std::move(grid), transpose(col_overlaps(shape, 1)),
                     "most dominant");
}

LRFilling least_dominant_filling(const SkewShape& shape) {
    if (shape.empty()) throw std::domain_error("empty diagram has no extreme fillings");
    auto grid = empty_grid(shape);
    std::vector<int> first_free(shape.rows());
    for (std::size_t i = 0; i < shape.rows(); ++i) first_free[i] = shape.row_begin(i);
    fill_rightmost_passes(shape, grid, first_free, 0);
    // The content is the sorted row lengths.
    return validated(shape, std::move(grid), row_overlaps(shape, 1), "least dominant");
}

LRFilling hybrid_filling(const SkewShape& shape, int k) {
    if (shape.empty()) throw std::domain_error("empty diagram has no extreme fillings");
    if (k < 1) throw std::domain_error("hybrid filling needs k >= 1");
    auto grid = empty_grid(shape);
    const Partition top = transpose(shape.inner());

    // Top k-1 boxes of every column follow the most-dominant rule. Row i
    // retains exactly the boxes lying at position >= k in their column.
    std::vector<int> first_free(shape.rows());
    for (std::size_t i = 0; i < shape.rows(); ++i) {
        int boundary = shape.row_end(i);
        for (int j = shape.row_begin(i); j < shape.row_end(i); ++j) {
            const int depth = static_cast<int>(i) - top.part(static_cast<std::size_t>(j)) + 1;
            if (depth <= k - 1) {
                grid[i][static_cast<std::size_t>(j - shape.row_begin(i))] = depth;
            } else {
                boundary = j; // column tops are weakly lower to the right,
                break;        // so the retained boxes form a row suffix
            }
        }
        first_free[i] = boundary;
    }
    fill_rightmost_passes(shape, grid, first_free, k - 1);

    // Expected content: column-overlap transpose for values below k, then
    // the k-row overlaps.
    const Partition prefix = transpose(col_overlaps(shape, 1));
    const Partition tail = row_overlaps(shape, k);
    std::vector<int> expected;
    for (int p = 0; p < k - 1; ++p) expected.push_back(prefix.part(static_cast<std::size_t>(p)));
    for (int t : tail) expected.push_back(t);
    Partition expected_content;
    try {
        expected_content = Partition(std::move(expected));
    } catch (const std::invalid_argument&) {
        throw std::logic_error("hybrid filling target content is not a partition");
    }
    return validated(shape, std::move(grid), expected_content, "hybrid");
}

} // namespace schur
