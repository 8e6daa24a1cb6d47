#include "schur/positivity.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace schur {

std::ostream& operator<<(std::ostream& os, ScreenFamily family) {
    switch (family) {
        case ScreenFamily::rows: return os << "rows";
        case ScreenFamily::cols: return os << "cols";
        case ScreenFamily::rects: return os << "rects";
    }
    return os << "?";
}

std::ostream& operator<<(std::ostream& os, const ScreenWitness& w) {
    os << w.family;
    switch (w.family) {
        case ScreenFamily::rows:
            os << " k=" << w.k << " prefix=" << w.prefix;
            break;
        case ScreenFamily::cols:
            os << " l=" << w.l << " prefix=" << w.prefix;
            break;
        case ScreenFamily::rects:
            os << " k=" << w.k << " l=" << w.l;
            break;
    }
    return os << ": " << w.lhs << " > " << w.rhs;
}

namespace {

/// First prefix (1-indexed) at which `lower` fails to be dominated by
/// `upper`, with the offending prefix sums. Nullopt when dominated.
std::optional<ScreenWitness> dominance_failure(const Partition& lower,
                                               const Partition& upper) {
    long long lo = 0, hi = 0;
    for (std::size_t i = 0; i < lower.length(); ++i) {
        lo += lower.part(i);
        hi += upper.part(i);
        if (lo > hi) {
            ScreenWitness w;
            w.prefix = static_cast<int>(i) + 1;
            w.lhs = lo;
            w.rhs = hi;
            return w;
        }
    }
    return std::nullopt;
}

} // namespace

ScreenFamilies overlap_screen_families(const OverlapProfile& a, const OverlapProfile& b) {
    ScreenFamilies out;
    const std::size_t max_k = std::max(a.rows.size(), b.rows.size());
    const std::size_t max_l = std::max(a.cols.size(), b.cols.size());
    for (std::size_t k = 1; k <= max_k && out.rows; ++k)
        out.rows = !dominance_failure(a.rows_at(k), b.rows_at(k)).has_value();
    for (std::size_t l = 1; l <= max_l && out.cols; ++l)
        out.cols = !dominance_failure(a.cols_at(l), b.cols_at(l)).has_value();
    for (std::size_t k = 1; k <= max_k && out.rects; ++k)
        for (std::size_t l = 1; l <= max_l && out.rects; ++l)
            out.rects = a.rect_at(k, l) <= b.rect_at(k, l);
    return out;
}

ScreenVerdict overlap_screen(const OverlapProfile& a, const OverlapProfile& b) {
    ScreenVerdict verdict;
    bool rows_ok = true, cols_ok = true, rects_ok = true;

    const std::size_t max_k = std::max(a.rows.size(), b.rows.size());
    for (std::size_t k = 1; k <= max_k; ++k) {
        if (auto w = dominance_failure(a.rows_at(k), b.rows_at(k))) {
            rows_ok = false;
            w->family = ScreenFamily::rows;
            w->k = static_cast<int>(k);
            verdict.witnesses.push_back(*w);
        }
    }
    const std::size_t max_l = std::max(a.cols.size(), b.cols.size());
    for (std::size_t l = 1; l <= max_l; ++l) {
        if (auto w = dominance_failure(a.cols_at(l), b.cols_at(l))) {
            cols_ok = false;
            w->family = ScreenFamily::cols;
            w->l = static_cast<int>(l);
            verdict.witnesses.push_back(*w);
        }
    }
    for (std::size_t k = 1; k <= max_k; ++k) {
        for (std::size_t l = 1; l <= max_l; ++l) {
            const long long lhs = a.rect_at(k, l), rhs = b.rect_at(k, l);
            if (lhs > rhs) {
                rects_ok = false;
                ScreenWitness w;
                w.family = ScreenFamily::rects;
                w.k = static_cast<int>(k);
                w.l = static_cast<int>(l);
                w.lhs = lhs;
                w.rhs = rhs;
                verdict.witnesses.push_back(w);
            }
        }
    }

    if (rows_ok != cols_ok || rows_ok != rects_ok)
        throw std::logic_error("overlap screen families disagree on the verdict");
    verdict.passed = rows_ok;
    return verdict;
}

ScreenVerdict overlap_screen(const SkewShape& a, const SkewShape& b) {
    return overlap_screen(overlap_profile(a), overlap_profile(b));
}

SchurExpansion difference(const SkewShape& a, const SkewShape& b) {
    return lr_expand(a) - lr_expand(b);
}

bool is_schur_positive(const SchurExpansion& diff) { return diff.is_positive(); }

bool is_schur_positive(const SkewShape& a, const SkewShape& b) {
    return difference(a, b).is_positive();
}

bool support_contains(const SkewShape& a, const SkewShape& b) {
    const std::set<Partition> sa = support(a), sb = support(b);
    return std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
}

NecessaryConditionReport necessary_condition_report(const SkewShape& a, const SkewShape& b,
                                                    const ReportOptions& opts) {
    NecessaryConditionReport report;
    report.screen = overlap_screen(a, b);

    if (a.boxes() <= opts.max_exact_size && b.boxes() <= opts.max_exact_size) {
        const SchurExpansion ea = lr_expand(a), eb = lr_expand(b);
        const auto sa = ea.support(), sb = eb.support();
        report.support_contained = std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
        report.schur_positive = (ea - eb).is_positive();
    }

    report.implication_consistent = true;
    if (report.schur_positive == true && report.support_contained == false)
        report.implication_consistent = false;
    if (report.support_contained == true && !report.screen.passed)
        report.implication_consistent = false;
    return report;
}

namespace {

/// Tail of a partition from its k-th part on (1-indexed): a suffix, hence
/// itself a partition.
Partition tail_from(const Partition& p, std::size_t k) {
    std::vector<int> parts;
    for (std::size_t i = k - 1; i < p.length(); ++i) parts.push_back(p.part(i));
    return Partition(std::move(parts));
}

} // namespace

ScreenVerdict product_tails_check(const Partition& alpha, const Partition& beta,
                                  const Partition& gamma, const Partition& delta) {
    ScreenVerdict verdict;
    const std::size_t max_k = std::max(std::max(alpha.length(), beta.length()),
                                       std::max(gamma.length(), delta.length()));
    for (std::size_t k = 1; k <= max_k; ++k) {
        const Partition lower = union_of(tail_from(alpha, k), tail_from(beta, k));
        const Partition upper = union_of(tail_from(gamma, k), tail_from(delta, k));
        if (auto w = dominance_failure(lower, upper)) {
            verdict.passed = false;
            w->family = ScreenFamily::rows;
            w->k = static_cast<int>(k);
            verdict.witnesses.push_back(*w);
        }
    }

    // Independent route: the tails condition is exactly the row-overlap
    // screen between the two disconnected product diagrams.
    const SkewShape left = star_product(SkewShape(alpha), SkewShape(beta));
    const SkewShape right = star_product(SkewShape(gamma), SkewShape(delta));
    std::vector<int> failing_geometric;
    bool geometric_passed = true;
    const std::size_t rows = std::max(left.rows(), right.rows());
    for (std::size_t k = 1; k <= rows; ++k) {
        const Partition lo = k <= left.rows() ? row_overlaps(left, static_cast<int>(k))
                                              : Partition{};
        const Partition hi = k <= right.rows() ? row_overlaps(right, static_cast<int>(k))
                                               : Partition{};
        if (dominance_failure(lo, hi)) {
            geometric_passed = false;
            failing_geometric.push_back(static_cast<int>(k));
        }
    }
    std::vector<int> failing_direct;
    for (const ScreenWitness& w : verdict.witnesses) failing_direct.push_back(w.k);
    if (geometric_passed != verdict.passed || failing_geometric != failing_direct)
        throw std::logic_error(
            "product positivity screen disagrees with the product-diagram overlaps");

    return verdict;
}

} // namespace schur
