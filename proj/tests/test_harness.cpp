#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "schur/harness.hpp"
#include "schur/literals.hpp"

using namespace schur;

namespace {

SkewShape sh(const char* text) { return parse_skew_shape(text); }

using PairList = std::vector<std::pair<SkewShape, SkewShape>>;

bool has_pair(const PairList& pairs, const char* a, const char* b) {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(sh(a), sh(b))) != pairs.end();
}

} // namespace

TEST_SUITE("harness") {

TEST_CASE("size one is trivially sound") {
    const VerificationReport r = verify_all(1);
    CHECK(r.size == 1);
    CHECK(r.shape_count == 1);
    CHECK(r.pair_count == 1);
    CHECK(r.screen_pass_count == 1);
    CHECK(r.support_contained_count == 1);
    CHECK(r.schur_positive_count == 1);
    CHECK(r.violations.empty());
    CHECK(r.screen_pass_support_fail.empty());
    CHECK(r.equal_support_unequal_function.empty());
}

TEST_CASE("frozen sweep statistics for sizes up to six") {
    const VerificationReport r4 = verify_all(4);
    CHECK(r4.shape_count == 28);
    CHECK(r4.pair_count == 784);
    CHECK(r4.screen_pass_count == 281);
    CHECK(r4.support_contained_count == 267);
    CHECK(r4.schur_positive_count == 267);
    CHECK(r4.violations.empty());
    REQUIRE(r4.screen_pass_support_fail.size() == 14);
    CHECK(r4.screen_pass_support_fail.front() == std::make_pair(sh("311/1"), sh("22")));
    CHECK(has_pair(r4.screen_pass_support_fail, "332/22", "22"));
    CHECK(r4.equal_support_unequal_function.empty());

    const VerificationReport r5 = verify_all(5);
    CHECK(r5.shape_count == 87);
    CHECK(r5.pair_count == 7569);
    CHECK(r5.screen_pass_count == 2371);
    CHECK(r5.support_contained_count == 2335);
    CHECK(r5.schur_positive_count == 2259);
    CHECK(r5.violations.empty());
    CHECK(r5.screen_pass_support_fail.size() == 36);
    CHECK(r5.equal_support_unequal_function.size() == 52);
    CHECK(has_pair(r5.equal_support_unequal_function, "3311/21", "3321/211"));

    const VerificationReport r6 = verify_all(6);
    CHECK(r6.shape_count == 272);
    CHECK(r6.pair_count == 73984);
    CHECK(r6.screen_pass_count == 20669);
    CHECK(r6.support_contained_count == 19577);
    CHECK(r6.schur_positive_count == 19229);
    CHECK(r6.violations.empty());
    CHECK(r6.screen_pass_support_fail.size() == 1092);
    CHECK(r6.equal_support_unequal_function.size() == 216);
}

TEST_CASE("the implication chain is weakly decreasing") {
    for (int n = 1; n <= 5; ++n) {
        const VerificationReport r = verify_all(n);
        CHECK(r.schur_positive_count <= r.support_contained_count);
        CHECK(r.support_contained_count <= r.screen_pass_count);
        CHECK(r.screen_pass_count <= r.pair_count);
        CHECK(r.violations.empty());
    }
}

TEST_CASE("worker count never changes the result") {
    VerifyOptions three;
    three.workers = 3;
    const VerificationReport a = verify_all(5);
    const VerificationReport b = verify_all(5, three);
    CHECK(a.shape_count == b.shape_count);
    CHECK(a.pair_count == b.pair_count);
    CHECK(a.screen_pass_count == b.screen_pass_count);
    CHECK(a.support_contained_count == b.support_contained_count);
    CHECK(a.schur_positive_count == b.schur_positive_count);
    CHECK(a.violations == b.violations);
    CHECK(a.screen_pass_support_fail == b.screen_pass_support_fail);
    CHECK(a.equal_support_unequal_function == b.equal_support_unequal_function);

    VerifyOptions many;
    many.workers = 16; // more workers than chunks of work
    CHECK(verify_all(2, many).pair_count == 9);
}

TEST_CASE("size bounds are enforced") {
    CHECK_THROWS_AS(verify_all(0), std::invalid_argument);
    CHECK_THROWS_AS(verify_all(-2), std::invalid_argument);
    CHECK_THROWS_AS(verify_all(8), std::invalid_argument); // default max_size = 7
    VerifyOptions opts;
    opts.max_size = 3;
    CHECK_THROWS_AS(verify_all(4, opts), std::invalid_argument);
    CHECK(verify_all(3, opts).shape_count == 9);
}

TEST_CASE("witness searches match the sweep") {
    for (int n = 1; n <= 3; ++n) {
        CHECK(find_witnesses(n, WitnessKind::screen_pass_support_fail).empty());
        CHECK(find_witnesses(n, WitnessKind::equal_support_unequal_function).empty());
    }

    const PairList spsf4 = find_witnesses(4, WitnessKind::screen_pass_support_fail);
    REQUIRE(spsf4.size() == 14);
    CHECK(spsf4.front() == std::make_pair(sh("311/1"), sh("22")));
    CHECK(spsf4 == verify_all(4).screen_pass_support_fail);

    const PairList eswf5 = find_witnesses(5, WitnessKind::equal_support_unequal_function);
    CHECK(eswf5.size() == 52);
    CHECK(has_pair(eswf5, "3311/21", "3321/211"));
    CHECK(eswf5 == verify_all(5).equal_support_unequal_function);
    for (const auto& [a, b] : eswf5) {
        CHECK(a < b); // unordered pairs are reported once, in enumeration order
        CHECK(support(a) == support(b));
        CHECK(lr_expand(a) != lr_expand(b));
    }

    CHECK(find_witnesses(5, WitnessKind::screen_pass_support_fail, 4) == verify_all(5).screen_pass_support_fail);
    CHECK_THROWS_AS(find_witnesses(0, WitnessKind::screen_pass_support_fail),
                    std::invalid_argument);
}

TEST_CASE("report formatting") {
    const std::string table = format_report(verify_all(4));
    CHECK(table.find("canonical diagrams         28") != std::string::npos);
    CHECK(table.find("ordered pairs              784") != std::string::npos);
    CHECK(table.find("screen-pass/support-fail   14") != std::string::npos);
    CHECK(table.find("violations                 none") != std::string::npos);
    CHECK(table.find("311/1  22") != std::string::npos);
    CHECK(table.find("elapsed seconds") != std::string::npos);

    const std::string tiny = format_report(verify_all(2));
    CHECK(tiny.find("canonical diagrams         3") != std::string::npos);
    CHECK(tiny.find("screen passes yet support fails") == std::string::npos);
}

} // TEST_SUITE
