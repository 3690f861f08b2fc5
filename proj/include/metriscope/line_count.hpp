// line_count.hpp
#ifndef METRISCOPE_LINE_COUNT_HPP
#define METRISCOPE_LINE_COUNT_HPP

#pragma once

#include <string_view>
#include <vector>

namespace metriscope {

struct LineCounts {
    int lines = 0;         // cl_line: physical lines, blanks included
    int comment_lines = 0; // cl_comm: lines touched by a comment

    bool operator==(const LineCounts &) const = default;
};

/// Per-line scan of a source text. Index 0 is line 1.
struct LineScan {
    std::vector<bool> has_comment;

    int line_count() const { return static_cast<int>(has_comment.size()); }
    /// Comment lines within [first, last] (1-based, inclusive, clamped).
    int comment_lines_between(int first, int last) const;
};

/// Newline-terminated lines plus a final unterminated line. Comment
/// delimiters inside string, text-block and char literals are ignored.
LineScan scan_lines(std::string_view text);

LineCounts count_lines(std::string_view text);

} // namespace metriscope

#endif // METRISCOPE_LINE_COUNT_HPP
