#ifndef SCHUR_HARNESS_HPP
#define SCHUR_HARNESS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schur/positivity.hpp"
#include "schur/skew_shape.hpp"
#include "schur/tableaux.hpp"

namespace schur {

/// Kinds of witness pairs the searches look for.
enum class WitnessKind {
    /// Ordered pairs (A, B): the overlap screen for "support(A) contains
    /// support(B)" passes, yet the actual supports are not contained.
    screen_pass_support_fail,
    /// Unordered pairs {A, B}, reported with A before B in enumeration
    /// order: equal supports but different expansions.
    equal_support_unequal_function,
};

struct VerifyOptions {
    /// verify_all refuses sizes beyond this bound; the n = 8 tier runs in
    /// minutes-to-hours and must be requested explicitly.
    int max_size = 7;
    /// Parallel workers for the expansion and pair phases. Results are
    /// identical for every worker count.
    int workers = 1;
};

/// Outcome of one exhaustive sweep over all canonical diagrams of a size.
struct VerificationReport {
    int size = 0;
    long long shape_count = 0;
    long long pair_count = 0; // ordered pairs, including (A, A)

    // Pair statistics; a correct build always has
    // schur_positive_count <= support_contained_count <= screen_pass_count.
    long long screen_pass_count = 0;
    long long support_contained_count = 0;
    long long schur_positive_count = 0;

    /// Falsified claims, described in words. Empty on a correct build.
    std::vector<std::string> violations;

    /// Pairs demonstrating that the screen is not sufficient.
    std::vector<std::pair<SkewShape, SkewShape>> screen_pass_support_fail;
    /// Pairs of distinct diagrams with equal support.
    std::vector<std::pair<SkewShape, SkewShape>> equal_support_unequal_function;

    double elapsed_seconds = 0.0;
};

/// Exhaustively checks, over every canonical diagram of n boxes and every
/// ordered pair of them: implication soundness (support containment implies
/// the screen passes), agreement of the three screen families, the trim
/// identity, the extreme-fillings sandwich with sharpness, transpose
/// symmetry of expansions, and the equal-support identity on overlap
/// rows. Violations are reported in the result, never thrown; they
/// falsify the build, not the input. Throws std::invalid_argument when
/// n < 1 or n exceeds opts.max_size.
VerificationReport verify_all(int n, const VerifyOptions& opts = {});

/// All witness pairs of the given kind among canonical diagrams of n
/// boxes, in enumeration order (deterministic). n < 1 throws
/// std::invalid_argument.
std::vector<std::pair<SkewShape, SkewShape>> find_witnesses(int n, WitnessKind kind,
                                                            int workers = 1);

/// Renders a report as a human-readable table.
std::string format_report(const VerificationReport& report);

} // namespace schur

#endif
