#include "doctest.h"

#include <string>
#include <vector>

#include "schur/literals.hpp"
#include "schur/skew_shape.hpp"

using namespace schur;

namespace {

Partition p(std::vector<int> parts) { return Partition(std::move(parts)); }

std::size_t partition_error_pos(const char* text) {
    try {
        parse_partition(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("expected a ParseError for ", text);
    return static_cast<std::size_t>(-1);
}

std::size_t shape_error_pos(const char* text) {
    try {
        parse_skew_shape(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("expected a ParseError for ", text);
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST_SUITE("literals") {

TEST_CASE("partition parsing, both spellings") {
    CHECK(parse_partition("443") == p({4, 4, 3}));
    CHECK(parse_partition("4,4,3") == p({4, 4, 3}));
    CHECK(parse_partition("4,4,3,") == p({4, 4, 3})); // trailing comma allowed
    CHECK(parse_partition("12,") == p({12}));
    CHECK(parse_partition("12,3") == p({12, 3}));
    CHECK(parse_partition("5") == p({5}));
    CHECK(parse_partition("0") == Partition{});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("1,0") == p({1})); // explicit zeros are stripped
    CHECK(parse_partition("111111111") == p({1, 1, 1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("partition parse errors carry the offending position") {
    CHECK(partition_error_pos("4,3,4") == 4);
    CHECK(partition_error_pos("34") == 1);
    CHECK(partition_error_pos("40") == 1); // compact form has no digit 0
    CHECK(partition_error_pos("4,,3") == 2);
    CHECK(partition_error_pos(",4") == 0);
    CHECK(partition_error_pos("4,x") == 2);
    CHECK(partition_error_pos("1 2") == 1);
    CHECK(partition_error_pos("abc") == 0);
    CHECK(partition_error_pos("4,-1") == 2);
    CHECK(partition_error_pos("5,99999999999999999999") == 2); // overflow
    CHECK(partition_error_pos("0,1") == 2);
    CHECK_THROWS_WITH_AS(parse_partition("40"),
                         "digit 0 is not a part; use the comma-separated form (at position 1)",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_partition("4,3,4"),
                         "parts are not weakly decreasing (at position 4)", ParseError);
}

TEST_CASE("skew shape parsing") {
    const SkewShape worked(p({5, 5, 3, 1, 1, 1}), p({3, 1}));
    CHECK(parse_skew_shape("553111/31") == worked);
    CHECK(parse_skew_shape("5,5,3,1,1,1/3,1") == worked);
    CHECK(parse_skew_shape("443") == SkewShape(p({4, 4, 3})));
    CHECK(parse_skew_shape("443/") == SkewShape(p({4, 4, 3})));
    CHECK(parse_skew_shape("0") == SkewShape{});
    CHECK(parse_skew_shape("") == SkewShape{});
    // parsing canonicalizes like the constructor
    CHECK(parse_skew_shape("4,1/2") == parse_skew_shape("31/1"));
    CHECK(parse_skew_shape("22/22") == SkewShape{});
}

TEST_CASE("skew shape parse errors") {
    CHECK(shape_error_pos("/2") == 1);       // inner cannot fit in the empty outer
    CHECK(shape_error_pos("22/3") == 3);     // containment failure
    CHECK(shape_error_pos("443/2/1") == 5);  // second slash
    CHECK(shape_error_pos("4x3/2") == 1);    // bad outer
    CHECK(shape_error_pos("443/2x") == 5);   // bad inner, offset past the slash
    CHECK(shape_error_pos("443/21,") == 4);  // comma form: inner is (21), far too wide
}

TEST_CASE("partition formatting") {
    CHECK(format_partition(Partition{}) == "0");
    CHECK(format_partition(p({4, 4, 3})) == "443");
    CHECK(format_partition(p({9, 1})) == "91");
    CHECK(format_partition(p({10})) == "10,");
    CHECK(format_partition(p({12, 3})) == "12,3");
    CHECK(format_partition(p({10, 10, 2})) == "10,10,2");
}

TEST_CASE("skew shape formatting") {
    CHECK(format_skew_shape(SkewShape{}) == "0");
    CHECK(format_skew_shape(SkewShape(p({4, 4, 3}))) == "443");
    CHECK(format_skew_shape(SkewShape(p({5, 5, 3, 1, 1, 1}), p({3, 1}))) == "553111/31");
    CHECK(format_skew_shape(SkewShape(p({11, 1}), p({1}))) == "11,1/1");
}

TEST_CASE("word formatting") {
    CHECK(format_word({}) == "");
    CHECK(format_word({1, 1, 2, 2, 1, 1, 3, 2, 2}) == "112211322");
    CHECK(format_word({10, 1}) == "10,1");
}

TEST_CASE("round trips") {
    for (int n = 0; n <= 12; ++n)
        for (const Partition& lambda : list_partitions(n)) {
            CHECK(parse_partition(format_partition(lambda)) == lambda);
            CHECK(parse_skew_shape(format_skew_shape(SkewShape(lambda))) == SkewShape(lambda));
        }
    for (int n = 1; n <= 5; ++n)
        for (const SkewShape& shape : enumerate_skew_shapes(n))
            CHECK(parse_skew_shape(format_skew_shape(shape)) == shape);
    // a wide shape exercises the comma spelling of both partitions
    const SkewShape wide(p({13, 12}), p({11}));
    CHECK(parse_skew_shape(format_skew_shape(wide)) == wide);
}

} // TEST_SUITE
