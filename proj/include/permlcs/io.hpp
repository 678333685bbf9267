#pragma once

/**
 * @file io.hpp
 * @brief PERMLINE / PERMSET text formats (version 1) and the +/- Hadamard block.
 *
 *     permline 1 <n>
 *     <pi(1)> <pi(2)> ... <pi(n)>
 *
 *     permset 1 <k> <n>
 *     <k lines, each n space-separated 1-based values>
 *
 * Writers emit single spaces and '\n' line ends. Readers accept any run of
 * blanks between tokens and an optional trailing '\r'.
 */

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permlcs/hadamard.hpp"
#include "permlcs/permutation.hpp"

namespace permlcs {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline std::vector<std::string_view> split_blanks(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<std::string_view> tokens;
    std::size_t t = 0;
    while (t < line.size()) {
        while (t < line.size() && (line[t] == ' ' || line[t] == '\t')) ++t;
        std::size_t start = t;
        while (t < line.size() && line[t] != ' ' && line[t] != '\t') ++t;
        if (t > start) tokens.push_back(line.substr(start, t - start));
    }
    return tokens;
}

inline std::int64_t parse_int(std::string_view token, std::size_t line_no) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(token) + "'");
    return v;
}

inline std::string next_line(std::istream& in, std::size_t& line_no, const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(std::string("unexpected end of input while reading ") + what);
    ++line_no;
    return line;
}

inline Permutation parse_values(std::string_view line, std::size_t n, std::size_t line_no) {
    auto tokens = split_blanks(line);
    if (tokens.size() != n)
        throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) + " values, got " +
                         std::to_string(tokens.size()));
    std::vector<std::int64_t> values;
    values.reserve(n);
    for (auto tok : tokens) values.push_back(parse_int(tok, line_no));
    try {
        return Permutation::from_one_based(std::span<const std::int64_t>(values));
    } catch (const std::invalid_argument& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
}

inline void write_values(std::ostream& out, const Permutation& p) {
    bool first = true;
    for (auto v : p.images()) {
        if (!first) out << ' ';
        out << (static_cast<std::uint64_t>(v) + 1);
        first = false;
    }
    out << '\n';
}

inline void expect_trailing_blank(std::istream& in, std::size_t line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!split_blanks(line).empty())
            throw ParseError("line " + std::to_string(line_no) + ": unexpected content after the last permutation");
    }
}

inline std::size_t parse_positive(std::string_view tok, std::size_t line_no, const char* name) {
    const auto v = parse_int(tok, line_no);
    if (v < 1) throw ParseError(std::string("header: ") + name + " must be positive");
    return static_cast<std::size_t>(v);
}
} // namespace detail

inline void write_permline(std::ostream& out, const Permutation& p) {
    out << "permline 1 " << p.size() << '\n';
    detail::write_values(out, p);
}

inline Permutation read_permline(std::istream& in) {
    std::size_t line_no = 0;
    auto header = detail::split_blanks(detail::next_line(in, line_no, "permline header"));
    if (header.size() != 3 || header[0] != "permline" || header[1] != "1")
        throw ParseError("line 1: expected header 'permline 1 <n>'");
    const std::size_t n = detail::parse_positive(header[2], line_no, "n");
    Permutation p = detail::parse_values(detail::next_line(in, line_no, "permline values"), n, line_no);
    detail::expect_trailing_blank(in, line_no);
    return p;
}

inline void write_permset(std::ostream& out, const PermSet& s) {
    out << "permset 1 " << s.k() << ' ' << s.n() << '\n';
    for (const auto& p : s) detail::write_values(out, p);
}

inline PermSet read_permset(std::istream& in) {
    std::size_t line_no = 0;
    auto header = detail::split_blanks(detail::next_line(in, line_no, "permset header"));
    if (header.size() != 4 || header[0] != "permset" || header[1] != "1")
        throw ParseError("line 1: expected header 'permset 1 <k> <n>'");
    const std::size_t k = detail::parse_positive(header[2], line_no, "k");
    const std::size_t n = detail::parse_positive(header[3], line_no, "n");
    std::vector<Permutation> perms;
    perms.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        perms.push_back(detail::parse_values(detail::next_line(in, line_no, "permset values"), n, line_no));
    detail::expect_trailing_blank(in, line_no);
    return PermSet(std::move(perms), Provenance{Construction::imported, {}});
}

inline std::string to_permset_string(const PermSet& s) {
    std::ostringstream out;
    write_permset(out, s);
    return out.str();
}

/// One row per line, '+' for +1 and '-' for -1.
inline void write_hadamard(std::ostream& out, const HadamardMatrix& h) {
    for (std::size_t i = 0; i < h.order(); ++i) {
        for (std::size_t j = 0; j < h.order(); ++j) out << (h(i, j) == 1 ? '+' : '-');
        out << '\n';
    }
}

inline HadamardMatrix read_hadamard(std::istream& in) {
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<int> row;
        for (char c : line) {
            if (c == '+') row.push_back(1);
            else if (c == '-') row.push_back(-1);
            else throw ParseError("hadamard block: unexpected character '" + std::string(1, c) + "'");
        }
        rows.push_back(std::move(row));
    }
    try {
        return HadamardMatrix::from_rows(rows);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("hadamard block: ") + e.what());
    }
}

} // namespace permlcs
