#include "metriscope/line_count.hpp"

#include <algorithm>

namespace metriscope {

int LineScan::comment_lines_between(int first, int last) const
{
    first = std::max(first, 1);
    last = std::min(last, line_count());
    int n = 0;
    for (int l = first; l <= last; ++l)
        n += has_comment[l - 1] ? 1 : 0;
    return n;
}

LineScan scan_lines(std::string_view text)
{
    LineScan scan;
    if (text.empty())
        return scan;

    enum class State { Code, LineComment, BlockComment, String, TextBlock, Char };
    State state = State::Code;
    bool current_has_comment = false;

    auto end_line = [&] {
        scan.has_comment.push_back(current_has_comment);
        current_has_comment = state == State::BlockComment;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        char next = i + 1 < text.size() ? text[i + 1] : '\0';
        if (c == '\n') {
            if (state == State::LineComment)
                state = State::Code;
            // An unterminated ordinary string ends at the newline.
            if (state == State::String || state == State::Char)
                state = State::Code;
            end_line();
            continue;
        }
        switch (state) {
        case State::Code:
            if (c == '/' && next == '/') {
                state = State::LineComment;
                current_has_comment = true;
                ++i;
            } else if (c == '/' && next == '*') {
                state = State::BlockComment;
                current_has_comment = true;
                ++i;
            } else if (c == '"') {
                if (text.substr(i, 3) == "\"\"\"") {
                    state = State::TextBlock;
                    i += 2;
                } else {
                    state = State::String;
                }
            } else if (c == '\'') {
                state = State::Char;
            }
            break;
        case State::LineComment:
            break;
        case State::BlockComment:
            current_has_comment = true;
            if (c == '*' && next == '/') {
                state = State::Code;
                ++i;
            }
            break;
        case State::String:
            if (c == '\\' && next != '\n')
                ++i;
            else if (c == '"')
                state = State::Code;
            break;
        case State::TextBlock:
            if (c == '\\' && next != '\n')
                ++i;
            else if (text.substr(i, 3) == "\"\"\"") {
                state = State::Code;
                i += 2;
            }
            break;
        case State::Char:
            if (c == '\\' && next != '\n')
                ++i;
            else if (c == '\'')
                state = State::Code;
            break;
        }
    }
    if (text.back() != '\n')
        scan.has_comment.push_back(current_has_comment);
    return scan;
}

LineCounts count_lines(std::string_view text)
{
    LineScan scan = scan_lines(text);
    LineCounts counts;
    counts.lines = scan.line_count();
    counts.comment_lines = static_cast<int>(std::count(scan.has_comment.begin(), scan.has_comment.end(), true));
    return counts;
}

} // namespace metriscope
