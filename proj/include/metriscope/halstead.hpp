// halstead.hpp
#ifndef METRISCOPE_HALSTEAD_HPP
#define METRISCOPE_HALSTEAD_HPP

#pragma once

#include "metriscope/lexer.hpp"

#include <span>
#include <string>
#include <string_view>

namespace metriscope {

struct HalsteadCounts {
    int distinct_operators = 0; // n1
    int distinct_operands = 0;  // n2
    int total_operators = 0;    // N1
    int total_operands = 0;     // N2

    int vocabulary() const { return distinct_operators + distinct_operands; }
    int length() const { return total_operators + total_operands; }
    /// N * log2(n); zero for an empty body.
    double volume() const;

    bool operator==(const HalsteadCounts &) const = default;
};

/// How a token is classified for Halstead counting.
enum class HalsteadRole { Operator, Operand, Ignored };

/// Classification table, exposed so it can be documented and tested.
///
///   operators  behaviour keywords (if else while for do switch case default
///              break continue return throw try catch finally new instanceof
///              synchronized assert yield), every operator/punctuation token
///              ( = + - * / % ++ -- == != < > <= >= && || ! ~ & | ^ << >> >>>
///              op= ? : ; , . -> :: @ ), bracket pairs counted once as "()",
///              "[]", "{}" at the opening token, and method names in call
///              position (identifier followed by "(").
///   operands   identifiers not in call position, literals, primitive type
///              keywords, this, super, true, false, null.
///   ignored    closing brackets and declaration modifiers (public, private,
///              protected, static, final, abstract, native, transient,
///              volatile, strictfp, var-less keywords such as class).
HalsteadRole halstead_role(std::span<const Token> tokens, std::size_t index);

/// Operator spelling used as the distinct-operator key ("()" for "(").
std::string halstead_operator_key(const Token &tok);

/// Counts over a token range (a method body without its outer braces).
HalsteadCounts halstead_counts(std::span<const Token> tokens);

} // namespace metriscope

#endif // METRISCOPE_HALSTEAD_HPP
