// lexer.hpp
#ifndef METRISCOPE_LEXER_HPP
#define METRISCOPE_LEXER_HPP

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace metriscope {

enum class TokenKind {
    Identifier,
    Keyword,
    IntLiteral,
    FloatLiteral,
    StringLiteral,
    CharLiteral,
    Operator,
    EndOfFile,
};

struct Token {
    TokenKind kind = TokenKind::EndOfFile;
    std::string text;
    int line = 1;
    /// True when no whitespace or comment separates this token from the
    /// previous one; used to glue ">" ">" back into a shift operator.
    bool glued = false;

    bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
    bool is_op(std::string_view t) const { return is(TokenKind::Operator, t); }
    bool is_kw(std::string_view t) const { return is(TokenKind::Keyword, t); }
    bool is_ident() const { return kind == TokenKind::Identifier; }
    bool is_literal() const;
};

bool is_java_keyword(std::string_view word);
bool is_primitive_type(std::string_view word);

/// Throws EncodingError when `text` is not valid UTF-8.
void validate_utf8(std::string_view text, std::string_view path);

/// Splits Java-like source into tokens, dropping whitespace and comments.
/// ">" is always emitted as a single-character token so generic closers need
/// no splitting; shift operators are recovered through Token::glued.
/// Throws SyntaxError for an unterminated comment, string or char literal.
std::vector<Token> tokenize(std::string_view text, std::string_view path = "<input>");

} // namespace metriscope

#endif // METRISCOPE_LEXER_HPP
