#include "metriscope/halstead.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

namespace metriscope {

namespace {

constexpr std::array<std::string_view, 20> kBehaviourKeywords{
    "if",    "else",  "while",  "for",   "do",         "switch",       "case",
    "default", "break", "continue", "return", "throw", "try",        "catch",
    "finally", "new",  "instanceof", "synchronized", "assert", "yield",
};

bool is_behaviour_keyword(std::string_view w)
{
    return std::find(kBehaviourKeywords.begin(), kBehaviourKeywords.end(), w) != kBehaviourKeywords.end();
}

bool is_closer(const Token &t) { return t.is_op(")") || t.is_op("]") || t.is_op("}"); }

} // namespace

double HalsteadCounts::volume() const
{
    int n = vocabulary();
    if (n <= 0 || length() <= 0)
        return 0.0;
    return length() * std::log2(static_cast<double>(n));
}

HalsteadRole halstead_role(std::span<const Token> tokens, std::size_t index)
{
    const Token &t = tokens[index];
    switch (t.kind) {
    case TokenKind::EndOfFile:
        return HalsteadRole::Ignored;
    case TokenKind::IntLiteral:
    case TokenKind::FloatLiteral:
    case TokenKind::StringLiteral:
    case TokenKind::CharLiteral:
        return HalsteadRole::Operand;
    case TokenKind::Operator:
        return is_closer(t) ? HalsteadRole::Ignored : HalsteadRole::Operator;
    case TokenKind::Identifier:
        if (index + 1 < tokens.size() && tokens[index + 1].is_op("("))
            return HalsteadRole::Operator;
        return HalsteadRole::Operand;
    case TokenKind::Keyword:
        if (is_behaviour_keyword(t.text))
            return HalsteadRole::Operator;
        if (is_primitive_type(t.text) || t.text == "this" || t.text == "super" || t.text == "true" ||
            t.text == "false" || t.text == "null")
            return HalsteadRole::Operand;
        return HalsteadRole::Ignored;
    }
    return HalsteadRole::Ignored;
}

std::string halstead_operator_key(const Token &tok)
{
    if (tok.is_op("("))
        return "()";
    if (tok.is_op("["))
        return "[]";
    if (tok.is_op("{"))
        return "{}";
    return tok.text;
}

HalsteadCounts halstead_counts(std::span<const Token> tokens)
{
    std::map<std::string, int> operators;
    std::map<std::string, int> operands;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token &t = tokens[i];
        switch (halstead_role(tokens, i)) {
        case HalsteadRole::Operator: {
            std::string key = halstead_operator_key(t);
            // ">" ">" glued back into a shift; the second half is consumed.
            if (t.is_op(">") && i + 1 < tokens.size() && tokens[i + 1].is_op(">") && tokens[i + 1].glued) {
                key = ">>";
                ++i;
                if (i + 1 < tokens.size() && tokens[i + 1].is_op(">") && tokens[i + 1].glued) {
                    key = ">>>";
                    ++i;
                }
            }
            ++operators[key];
            break;
        }
        case HalsteadRole::Operand:
            ++operands[t.text];
            break;
        case HalsteadRole::Ignored:
            break;
        }
    }
    HalsteadCounts c;
    c.distinct_operators = static_cast<int>(operators.size());
    c.distinct_operands = static_cast<int>(operands.size());
    for (const auto &[_, n] : operators)
        c.total_operators += n;
    for (const auto &[_, n] : operands)
        c.total_operands += n;
    return c;
}

} // namespace metriscope
