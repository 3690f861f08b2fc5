#include "metriscope/lexer.hpp"

#include "metriscope/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace metriscope {

namespace {

constexpr std::array<std::string_view, 53> kKeywords{
    "abstract", "assert",     "boolean",   "break",     "byte",      "case",     "catch",
    "char",     "class",      "const",     "continue",  "default",   "do",       "double",
    "else",     "enum",       "extends",   "final",     "finally",   "float",    "for",
    "goto",     "if",         "implements", "import",   "instanceof", "int",     "interface",
    "long",     "native",     "new",       "package",   "private",   "protected", "public",
    "return",   "short",      "static",    "strictfp",  "super",     "switch",   "synchronized",
    "this",     "throw",      "throws",    "transient", "try",       "void",     "volatile",
    "while",    "true",       "false",     "null",
};

constexpr std::array<std::string_view, 9> kPrimitives{
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void",
};

// Longest operators first so the scan is maximal munch. ">" handling is
// special-cased in the scanner.
constexpr std::array<std::string_view, 44> kOperators{
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=", "-=", "*=",
    "/=",  "%=",  "&=", "|=", "^=", "<<", "(",  ")",  "{",  "}",  "[",  "]",  ";",  ",",  ".",
    "@",   "=",   "<",  "!",  "~",  "?",  ":",  "+",  "-",  "*",  "/",  "&",  "|",  "^",
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; }
bool ident_part(unsigned char c) { return ident_start(c) || std::isdigit(c); }

class Scanner {
public:
    Scanner(std::string_view text, std::string_view path) : text_(text), path_(path) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        bool glued = false;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
                glued = false;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                glued = false;
                continue;
            }
            if (c == '/' && peek(1) == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    ++pos_;
                glued = false;
                continue;
            }
            if (c == '/' && peek(1) == '*') {
                skip_block_comment();
                glued = false;
                continue;
            }
            Token tok;
            tok.line = line_;
            tok.glued = glued && !out.empty();
            scan_token(tok);
            out.push_back(std::move(tok));
            glued = true;
        }
        Token eof;
        eof.kind = TokenKind::EndOfFile;
        eof.line = line_;
        out.push_back(eof);
        return out;
    }

private:
    char peek(std::size_t ahead) const
    {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    [[noreturn]] void fail(int line, std::string expected)
    {
        throw SyntaxError(std::string(path_), line, {std::move(expected)});
    }

    void skip_block_comment()
    {
        int start = line_;
        pos_ += 2;
        while (pos_ < text_.size()) {
            if (text_[pos_] == '*' && peek(1) == '/') {
                pos_ += 2;
                return;
            }
            if (text_[pos_] == '\n')
                ++line_;
            ++pos_;
        }
        fail(start, "*/");
    }

    void scan_token(Token &tok)
    {
        unsigned char c = static_cast<unsigned char>(text_[pos_]);
        if (ident_start(c)) {
            std::size_t begin = pos_;
            while (pos_ < text_.size() && ident_part(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok.text = std::string(text_.substr(begin, pos_ - begin));
            tok.kind = is_java_keyword(tok.text) ? TokenKind::Keyword : TokenKind::Identifier;
            return;
        }
        if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
            scan_number(tok);
            return;
        }
        if (c == '"') {
            scan_string(tok);
            return;
        }
        if (c == '\'') {
            scan_char(tok);
            return;
        }
        tok.kind = TokenKind::Operator;
        if (c == '>') {
            tok.text = peek(1) == '=' ? ">=" : ">";
            pos_ += tok.text.size();
            return;
        }
        for (std::string_view op : kOperators) {
            if (text_.substr(pos_, op.size()) == op) {
                tok.text = std::string(op);
                pos_ += op.size();
                return;
            }
        }
        // Unknown character (e.g. '#' or '\\'): keep it as an opaque operator.
        tok.text = std::string(1, static_cast<char>(c));
        ++pos_;
    }

    void scan_number(Token &tok)
    {
        std::size_t begin = pos_;
        bool is_float = false;
        if (text_[pos_] == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'b' || peek(1) == 'B')) {
            pos_ += 2;
            while (pos_ < text_.size() && (std::isxdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
        } else {
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isdigit(static_cast<unsigned char>(d)) || d == '_') {
                    ++pos_;
                } else if (d == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
                    is_float = true;
                    ++pos_;
                } else if (d == '.' && !is_float && !ident_start(static_cast<unsigned char>(peek(1)))) {
                    // "1." is a float literal; "1.foo" is not a thing in Java.
                    is_float = true;
                    ++pos_;
                } else if ((d == 'e' || d == 'E') &&
                           (std::isdigit(static_cast<unsigned char>(peek(1))) ||
                            ((peek(1) == '+' || peek(1) == '-') && std::isdigit(static_cast<unsigned char>(peek(2)))))) {
                    is_float = true;
                    pos_ += 2;
                } else {
                    break;
                }
            }
        }
        if (pos_ < text_.size() && std::string_view("lLfFdD").find(text_[pos_]) != std::string_view::npos) {
            if (text_[pos_] != 'l' && text_[pos_] != 'L')
                is_float = true;
            ++pos_;
        }
        tok.kind = is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral;
        tok.text = std::string(text_.substr(begin, pos_ - begin));
    }

    void scan_string(Token &tok)
    {
        std::size_t begin = pos_;
        int start = line_;
        tok.kind = TokenKind::StringLiteral;
        if (text_.substr(pos_, 3) == "\"\"\"") {
            pos_ += 3;
            while (pos_ < text_.size()) {
                if (text_[pos_] == '\\') {
                    if (peek(1) == '\n')
                        ++line_;
                    pos_ += 2;
                    continue;
                }
                if (text_.substr(pos_, 3) == "\"\"\"") {
                    pos_ += 3;
                    tok.text = std::string(text_.substr(begin, pos_ - begin));
                    return;
                }
                if (text_[pos_] == '\n')
                    ++line_;
                ++pos_;
            }
            fail(start, "\"\"\"");
        }
        ++pos_;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\n')
                fail(start, "\"");
            pos_ += text_[pos_] == '\\' ? 2 : 1;
        }
        if (pos_ >= text_.size())
            fail(start, "\"");
        ++pos_;
        tok.text = std::string(text_.substr(begin, pos_ - begin));
    }

    void scan_char(Token &tok)
    {
        std::size_t begin = pos_;
        int start = line_;
        tok.kind = TokenKind::CharLiteral;
        ++pos_;
        while (pos_ < text_.size() && text_[pos_] != '\'') {
            if (text_[pos_] == '\n')
                fail(start, "'");
            pos_ += text_[pos_] == '\\' ? 2 : 1;
        }
        if (pos_ >= text_.size())
            fail(start, "'");
        ++pos_;
        tok.text = std::string(text_.substr(begin, pos_ - begin));
    }

    std::string_view text_;
    std::string_view path_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

} // namespace

bool Token::is_literal() const
{
    return kind == TokenKind::IntLiteral || kind == TokenKind::FloatLiteral ||
           kind == TokenKind::StringLiteral || kind == TokenKind::CharLiteral ||
           is_kw("true") || is_kw("false") || is_kw("null");
}

bool is_java_keyword(std::string_view word)
{
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_primitive_type(std::string_view word)
{
    return std::find(kPrimitives.begin(), kPrimitives.end(), word) != kPrimitives.end();
}

void validate_utf8(std::string_view text, std::string_view path)
{
    std::size_t i = 0;
    while (i < text.size()) {
        auto c = static_cast<unsigned char>(text[i]);
        int extra = 0;
        if (c < 0x80)
            extra = 0;
        else if ((c & 0xE0) == 0xC0 && c >= 0xC2)
            extra = 1;
        else if ((c & 0xF0) == 0xE0)
            extra = 2;
        else if ((c & 0xF8) == 0xF0 && c <= 0xF4)
            extra = 3;
        else
            throw EncodingError(std::string(path), i);
        if (i + extra >= text.size())
            throw EncodingError(std::string(path), i);
        for (int k = 1; k <= extra; ++k) {
            auto cc = static_cast<unsigned char>(text[i + k]);
            if ((cc & 0xC0) != 0x80)
                throw EncodingError(std::string(path), i);
        }
        i += extra + 1;
    }
}

std::vector<Token> tokenize(std::string_view text, std::string_view path)
{
    return Scanner(text, path).run();
}

} // namespace metriscope
