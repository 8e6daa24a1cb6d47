#ifndef SCHUR_LITERALS_HPP
#define SCHUR_LITERALS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schur/partition.hpp"
#include "schur/skew_shape.hpp"

namespace schur {

/// Parse failure with the 0-indexed position of the offending character
/// in the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Parses a partition literal.
///
///   ""  or "0"      the empty partition
///   "4,4,3"         comma-separated parts (parts may exceed 9; "12," with
///                   a trailing comma writes the one-part partition (12))
///   "443"           compact form, one digit per part, digits 1-9 only
///
/// A literal containing a comma is always read in comma-separated form.
/// Compact form rejects the digit 0 so that no literal is ambiguous.
/// Malformed input throws ParseError with the offending position; parts
/// out of weakly decreasing order are also reported as ParseError.
Partition parse_partition(std::string_view text);

/// Parses a skew-shape literal "outer/inner" or just "outer" for a
/// straight shape ("5,5,3/" and "5,5,3" both mean inner = empty). The
/// two sides are partition literals. An inner partition that does not fit
/// inside the outer throws ParseError.
SkewShape parse_skew_shape(std::string_view text);

/// Formats a partition: compact digits when every part is at most 9,
/// otherwise comma-separated; a single part over 9 gains a trailing comma
/// ("12,") so the output re-parses to the same value. Empty is "0".
std::string format_partition(const Partition& p);

/// Formats a skew shape as "outer/inner", or just "outer" when the inner
/// partition is empty. The empty shape is "0".
std::string format_skew_shape(const SkewShape& shape);

/// Formats a reading word: a digit string when every letter is at most 9
/// ("112211322"), otherwise comma-separated.
std::string format_word(const std::vector<int>& word);

} // namespace schur

#endif
