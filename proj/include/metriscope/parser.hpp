// parser.hpp
#ifndef METRISCOPE_PARSER_HPP
#define METRISCOPE_PARSER_HPP

#pragma once

#include "metriscope/cfg.hpp"
#include "metriscope/lexer.hpp"
#include "metriscope/model.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace metriscope {

/// What an expression contributes to control flow.
struct ExprInfo {
    int decisions = 0; // &&, || and ?: operators
    bool has_call = false;
};

/// Statement tree of a method body, as far as control flow is concerned.
struct Stmt {
    enum class Kind {
        Block,
        If,
        While,
        Do,
        For,
        ForEach,
        Switch,
        Break,
        Continue,
        Return,
        Throw,
        Try,
        Labeled,
        Expr,
        Decl,
        Sync,
        Opaque,
        Empty,
    };

    struct Case {
        int labels = 0; // case labels; a bare default has none
        bool is_default = false;
        std::vector<Stmt> body;
    };

    Kind kind = Kind::Empty;
    int line = 0;
    std::string label;  // Labeled, Break, Continue
    ExprInfo expr;      // condition, selector or the statement's expression
    bool counted = false; // contributes to the executable statement count

    std::vector<Stmt> body;      // block contents, loop body, then-branch, try block
    std::vector<Stmt> else_body; // if
    std::vector<Stmt> init;      // for
    std::vector<Stmt> update;    // for
    std::vector<Case> cases;     // switch
    std::vector<std::vector<Stmt>> catches;
    std::optional<std::vector<Stmt>> finally_body;
};

/// Executable statements in a statement list (blocks and empty statements
/// are not counted; local declarations count only with an initializer).
int count_statements(const std::vector<Stmt> &stmts);

/// Builds the control-flow graph of a method body. Every `&&`, `||` and
/// `?:` becomes a decision node ahead of its statement; a statement making
/// calls gets a call-bearing node. Unreachable nodes are pruned.
ControlFlowGraph build_cfg(const std::vector<Stmt> &body);

/// Parses a body token range (without the outer braces) and builds its CFG.
/// Throws UnbalancedBlock when braces do not match.
ControlFlowGraph build_cfg(std::span<const Token> body_tokens);

/// Statement tree of a body token range, without model information.
std::vector<Stmt> parse_body(std::span<const Token> body_tokens);

struct MethodSource {
    std::string class_name;
    std::string signature;
    std::vector<Token> tokens; // body without the outer braces
};

struct CompilationFacts {
    std::string path;
    std::string package;
    std::vector<ClassInfo> classes;
    std::vector<MethodSource> methods;
};

/// Parses one source file. Throws EncodingError, SyntaxError for malformed
/// declarations and UnbalancedBlock for mismatched braces; malformed code
/// inside method bodies degrades to opaque statements.
CompilationFacts parse_source(std::string_view text, std::string_view path = "<input>");

struct ParseError {
    std::string path;
    std::string message;
};

struct ParsedSources {
    std::vector<CompilationFacts> files;
    std::vector<ParseError> errors;
    std::vector<std::pair<std::string, std::string>> texts; // path, contents

    std::vector<ClassInfo> classes() const;
};

/// Source files under the given paths (files or directories, searched
/// recursively for `extension`), in sorted order.
std::vector<std::filesystem::path> collect_sources(const std::vector<std::filesystem::path> &paths,
                                                   std::string_view extension = ".java");
ParsedSources parse_files(const std::vector<std::filesystem::path> &files);

} // namespace metriscope

#endif // METRISCOPE_PARSER_HPP
