#include "schur/literals.hpp"

#include <cctype>
#include <charconv>

namespace schur {

namespace {

bool all_digits(std::string_view s) {
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return !s.empty();
}

std::size_t first_non_digit(std::string_view s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return i;
    return s.size();
}

int parse_number(std::string_view token, std::size_t offset) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError("part is too large", offset);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("expected a number", offset + first_non_digit(token));
    return value;
}

void check_weakly_decreasing(const std::vector<int>& parts,
                             const std::vector<std::size_t>& positions) {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw ParseError("parts are not weakly decreasing", positions[i]);
}

Partition parse_partition_at(std::string_view text, std::size_t offset) {
    if (text.empty() || text == "0") return Partition{};

    std::vector<int> parts;
    std::vector<std::size_t> positions;

    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            const bool last = comma == std::string_view::npos;
            if (last) comma = text.size();
            const std::string_view token = text.substr(start, comma - start);
            if (token.empty()) {
                if (last && start == text.size()) break; // trailing comma
                throw ParseError("empty part", offset + start);
            }
            if (!all_digits(token))
                throw ParseError("expected a number",
                                 offset + start + first_non_digit(token));
            parts.push_back(parse_number(token, offset + start));
            positions.push_back(offset + start);
            if (last) break;
            start = comma + 1;
        }
    } else {
        if (!all_digits(text))
            throw ParseError("unexpected character", offset + first_non_digit(text));
        if (text.size() == 1) {
            parts.push_back(text[0] - '0');
            positions.push_back(offset);
        } else {
            for (std::size_t i = 0; i < text.size(); ++i) {
                if (text[i] == '0')
                    throw ParseError(
                        "digit 0 is not a part; use the comma-separated form", offset + i);
                parts.push_back(text[i] - '0');
                positions.push_back(offset + i);
            }
        }
    }

    check_weakly_decreasing(parts, positions);
    return Partition(std::move(parts));
}

} // namespace

Partition parse_partition(std::string_view text) { return parse_partition_at(text, 0); }

SkewShape parse_skew_shape(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return SkewShape(parse_partition_at(text, 0));

    const std::size_t second = text.find('/', slash + 1);
    if (second != std::string_view::npos)
        throw ParseError("unexpected second '/'", second);

    Partition outer = parse_partition_at(text.substr(0, slash), 0);
    Partition inner = parse_partition_at(text.substr(slash + 1), slash + 1);
    if (!is_contained_in(inner, outer))
        throw ParseError("inner partition does not fit inside the outer partition",
                         slash + 1);
    return SkewShape(std::move(outer), std::move(inner));
}

std::string format_partition(const Partition& p) {
    if (p.empty()) return "0";
    const bool compact = p.part(0) <= 9;
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (!compact && i) out += ',';
        out += std::to_string(p.part(i));
    }
    // A lone large part keeps a trailing comma so the literal re-parses in
    // comma-separated form ("12," rather than the compact-looking "12").
    if (!compact && p.length() == 1) out += ',';
    return out;
}

std::string format_skew_shape(const SkewShape& shape) {
    if (shape.empty()) return "0";
    if (shape.is_straight()) return format_partition(shape.outer());
    return format_partition(shape.outer()) + '/' + format_partition(shape.inner());
}

std::string format_word(const std::vector<int>& word) {
    bool compact = true;
    for (int v : word)
        if (v > 9 || v < 0) compact = false;
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!compact && i) out += ',';
        out += std::to_string(word[i]);
    }
    return out;
}

} // namespace schur
