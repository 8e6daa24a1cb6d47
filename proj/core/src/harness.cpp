#include "schur/harness.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "schur/literals.hpp"

namespace schur {

namespace {

/// Splits [0, total) into `workers` contiguous chunks and runs
/// fn(first, last, chunk) on one thread per chunk. Chunk boundaries depend
/// only on total and workers, so any output assembled per chunk and merged
/// in chunk order is identical for every worker count.
template <typename Fn>
void parallel_chunks(std::size_t total, int workers, Fn&& fn) {
    if (workers < 1) throw std::invalid_argument("worker count must be positive");
    const std::size_t chunks =
        std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(total, 1));
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(chunks);
    threads.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t first = total * c / chunks;
        const std::size_t last = total * (c + 1) / chunks;
        threads.emplace_back([&fn, &errors, c, first, last] {
            try {
                fn(first, last, c);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& thread : threads) thread.join();
    for (const auto& error : errors)
        if (error) std::rethrow_exception(error);
}

struct ShapeData {
    SkewShape shape;
    OverlapProfile profile;
    SchurExpansion expansion;
    std::set<Partition> supp;
};

std::vector<ShapeData> compute_universe(const std::vector<SkewShape>& shapes, int workers) {
    std::vector<ShapeData> data(shapes.size());
    parallel_chunks(shapes.size(), workers, [&](std::size_t first, std::size_t last, std::size_t) {
        for (std::size_t i = first; i < last; ++i) {
            data[i].shape = shapes[i];
            data[i].profile = overlap_profile(shapes[i]);
            data[i].expansion = lr_expand(shapes[i]);
            data[i].supp = data[i].expansion.support();
        }
    });
    return data;
}

bool support_includes(const std::set<Partition>& a, const std::set<Partition>& b) {
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

/// Checks that hold shape by shape; returns human-readable violations.
std::vector<std::string> per_shape_violations(const ShapeData& d) {
    std::vector<std::string> out;
    const std::string name = format_skew_shape(d.shape);

    // Trim identity: k-row overlaps drop to (k-1)-row overlaps of the
    // trimmed diagram.
    const SkewShape trimmed = trim(d.shape);
    for (std::size_t k = 2; k <= d.shape.rows(); ++k) {
        if (d.profile.rows_at(k) != row_overlaps(trimmed, static_cast<int>(k) - 1)) {
            out.push_back("trim identity failed for " + name + " at k=" + std::to_string(k));
            break;
        }
    }

    // Extreme fillings construct and self-validate; their contents bound
    // the support in dominance order and are attained.
    try {
        const Partition low = row_overlaps(d.shape, 1);
        const Partition high = transpose(col_overlaps(d.shape, 1));
        least_dominant_filling(d.shape);
        most_dominant_filling(d.shape);
        for (const Partition& nu : d.supp) {
            if (!dominates(low, nu) || !dominates(nu, high)) {
                out.push_back("support of " + name + " escapes the extreme-content sandwich at " +
                              format_partition(nu));
                break;
            }
        }
        if (!d.supp.count(low) || !d.supp.count(high))
            out.push_back("extreme contents of " + name + " are missing from its support");
    } catch (const std::logic_error& fault) {
        out.push_back("extreme filling construction failed for " + name + ": " + fault.what());
    }

    // Every expansion term partitions the box count.
    for (const auto& [nu, coeff] : d.expansion.terms()) {
        if (nu.size() != d.shape.boxes() || coeff < 1) {
            out.push_back("expansion of " + name + " has an invalid term at " +
                          format_partition(nu));
            break;
        }
    }
    return out;
}

/// Transpose symmetry: the expansion of the transposed diagram is the
/// partition-wise transpose of the expansion.
void check_transpose_symmetry(const std::vector<ShapeData>& data,
                              const std::map<SkewShape, std::size_t>& index,
                              std::vector<std::string>& violations) {
    for (const ShapeData& d : data) {
        const SkewShape flipped = transpose_shape(d.shape);
        const auto it = index.find(flipped);
        if (it == index.end()) {
            violations.push_back("transpose of " + format_skew_shape(d.shape) +
                                 " is missing from the enumeration");
            continue;
        }
        if (d.shape > flipped) continue; // each unordered pair once
        SchurExpansion mapped;
        for (const auto& [nu, coeff] : d.expansion.terms()) mapped.add(transpose(nu), coeff);
        if (mapped != data[it->second].expansion)
            violations.push_back("transpose symmetry failed for " + format_skew_shape(d.shape));
    }
}

/// Equal supports force equal overlap rows for every k; distinct diagrams
/// with equal support are collected as witnesses.
void check_equal_support_groups(const std::vector<ShapeData>& data,
                                std::vector<std::string>& violations,
                                std::vector<std::pair<SkewShape, SkewShape>>& witnesses) {
    std::map<std::set<Partition>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < data.size(); ++i) groups[data[i].supp].push_back(i);
    for (const auto& [supp, members] : groups) {
        for (std::size_t x = 0; x < members.size(); ++x) {
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                const ShapeData& a = data[members[x]];
                const ShapeData& b = data[members[y]];
                const std::size_t max_k = std::max(a.profile.rows.size(), b.profile.rows.size());
                for (std::size_t k = 1; k <= max_k; ++k) {
                    if (a.profile.rows_at(k) != b.profile.rows_at(k)) {
                        violations.push_back("equal supports but unequal overlap rows for " +
                                             format_skew_shape(a.shape) + " and " +
                                             format_skew_shape(b.shape));
                        break;
                    }
                }
                if (a.expansion != b.expansion) witnesses.emplace_back(a.shape, b.shape);
            }
        }
    }
    std::sort(witnesses.begin(), witnesses.end()); // enumeration order
}

struct PairTally {
    long long screen_pass = 0;
    long long support_contained = 0;
    long long schur_positive = 0;
    std::vector<std::string> violations;
    std::vector<std::pair<SkewShape, SkewShape>> screen_pass_support_fail;
};

PairTally scan_pairs(const std::vector<ShapeData>& data, std::size_t first, std::size_t last) {
    PairTally tally;
    const std::size_t n = data.size();
    for (std::size_t p = first; p < last; ++p) {
        const ShapeData& a = data[p / n];
        const ShapeData& b = data[p % n];

        const ScreenFamilies families = overlap_screen_families(a.profile, b.profile);
        if (!families.agree())
            tally.violations.push_back("screen families disagree for " +
                                       format_skew_shape(a.shape) + " vs " +
                                       format_skew_shape(b.shape));
        const bool screen_pass = families.rows;
        const bool contained = support_includes(a.supp, b.supp);
        const bool positive = (a.expansion - b.expansion).is_positive();

        tally.screen_pass += screen_pass;
        tally.support_contained += contained;
        tally.schur_positive += positive;

        if (contained && !screen_pass)
            tally.violations.push_back("support containment without screen pass: " +
                                       format_skew_shape(a.shape) + " vs " +
                                       format_skew_shape(b.shape));
        if (positive && !contained)
            tally.violations.push_back("Schur-positive difference without support containment: " +
                                       format_skew_shape(a.shape) + " vs " +
                                       format_skew_shape(b.shape));
        if (screen_pass && !contained)
            tally.screen_pass_support_fail.emplace_back(a.shape, b.shape);
    }
    return tally;
}

} // namespace

VerificationReport verify_all(int n, const VerifyOptions& opts) {
    if (n < 1) throw std::invalid_argument("universe size must be positive");
    if (n > opts.max_size)
        throw std::invalid_argument("size " + std::to_string(n) +
                                    " exceeds the configured bound " +
                                    std::to_string(opts.max_size) +
                                    "; raise VerifyOptions::max_size deliberately");

    const auto started = std::chrono::steady_clock::now();
    VerificationReport report;
    report.size = n;

    const std::vector<SkewShape> shapes = enumerate_skew_shapes(n);
    report.shape_count = static_cast<long long>(shapes.size());
    report.pair_count = report.shape_count * report.shape_count;

    const std::vector<ShapeData> data = compute_universe(shapes, opts.workers);

    // Per-shape claims, in parallel; violations merged in shape order.
    std::vector<std::vector<std::string>> shape_violations(shapes.size());
    parallel_chunks(shapes.size(), opts.workers,
                    [&](std::size_t first, std::size_t last, std::size_t) {
                        for (std::size_t i = first; i < last; ++i)
                            shape_violations[i] = per_shape_violations(data[i]);
                    });
    for (auto& batch : shape_violations)
        report.violations.insert(report.violations.end(), batch.begin(), batch.end());

    std::map<SkewShape, std::size_t> index;
    for (std::size_t i = 0; i < shapes.size(); ++i) index.emplace(shapes[i], i);
    check_transpose_symmetry(data, index, report.violations);
    check_equal_support_groups(data, report.violations, report.equal_support_unequal_function);

    // Pair claims, in parallel; tallies merged in chunk order.
    const std::size_t pair_count = shapes.size() * shapes.size();
    const std::size_t chunks =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(opts.workers, 1)),
                              std::max<std::size_t>(pair_count, 1));
    std::vector<PairTally> tallies(chunks);
    parallel_chunks(pair_count, opts.workers, [&](std::size_t first, std::size_t last, std::size_t c) {
        tallies[c] = scan_pairs(data, first, last);
    });
    for (const PairTally& tally : tallies) {
        report.screen_pass_count += tally.screen_pass;
        report.support_contained_count += tally.support_contained;
        report.schur_positive_count += tally.schur_positive;
        report.violations.insert(report.violations.end(), tally.violations.begin(),
                                 tally.violations.end());
        report.screen_pass_support_fail.insert(report.screen_pass_support_fail.end(),
                                               tally.screen_pass_support_fail.begin(),
                                               tally.screen_pass_support_fail.end());
    }

    if (!(report.schur_positive_count <= report.support_contained_count &&
          report.support_contained_count <= report.screen_pass_count))
        report.violations.push_back("implication-chain counts are out of order");

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

std::vector<std::pair<SkewShape, SkewShape>> find_witnesses(int n, WitnessKind kind,
                                                            int workers) {
    if (n < 1) throw std::invalid_argument("universe size must be positive");
    const std::vector<SkewShape> shapes = enumerate_skew_shapes(n);
    const std::vector<ShapeData> data = compute_universe(shapes, workers);

    std::vector<std::pair<SkewShape, SkewShape>> out;
    if (kind == WitnessKind::screen_pass_support_fail) {
        for (const ShapeData& a : data) {
            for (const ShapeData& b : data) {
                if (overlap_screen(a.profile, b.profile).passed &&
                    !support_includes(a.supp, b.supp))
                    out.emplace_back(a.shape, b.shape);
            }
        }
    } else {
        std::vector<std::string> ignored;
        check_equal_support_groups(data, ignored, out);
    }
    return out;
}

std::string format_report(const VerificationReport& report) {
    std::ostringstream os;
    os << "universe size              " << report.size << '\n'
       << "canonical diagrams         " << report.shape_count << '\n'
       << "ordered pairs              " << report.pair_count << '\n'
       << "screen passes              " << report.screen_pass_count << '\n'
       << "support containments       " << report.support_contained_count << '\n'
       << "Schur-positive differences " << report.schur_positive_count << '\n'
       << "screen-pass/support-fail   " << report.screen_pass_support_fail.size() << '\n'
       << "equal-support pairs        " << report.equal_support_unequal_function.size() << '\n';

    auto list_pairs = [&os](const std::vector<std::pair<SkewShape, SkewShape>>& pairs) {
        const std::size_t shown = std::min<std::size_t>(pairs.size(), 20);
        for (std::size_t i = 0; i < shown; ++i)
            os << "  " << format_skew_shape(pairs[i].first) << "  "
               << format_skew_shape(pairs[i].second) << '\n';
        if (pairs.size() > shown) os << "  ... and " << pairs.size() - shown << " more\n";
    };
    if (!report.screen_pass_support_fail.empty()) {
        os << "screen passes yet support fails for:\n";
        list_pairs(report.screen_pass_support_fail);
    }
    if (!report.equal_support_unequal_function.empty()) {
        os << "equal support, different function:\n";
        list_pairs(report.equal_support_unequal_function);
    }

    if (report.violations.empty()) {
        os << "violations                 none\n";
    } else {
        os << "VIOLATIONS (" << report.violations.size() << "):\n";
        for (const std::string& v : report.violations) os << "  " << v << '\n';
    }
    os.setf(std::ios::fixed);
    os.precision(3);
    os << "elapsed seconds            " << report.elapsed_seconds << '\n';
    return os.str();
}

} // namespace schur
