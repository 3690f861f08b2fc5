// Shared helpers for the unit and acceptance tests: fixture access,
// independent oracles and random generators.
#pragma once

#include "metriscope/cfg.hpp"
#include "metriscope/model.hpp"

#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace metriscope::testing {

std::filesystem::path fixture(const std::string &relative);
std::string read_text(const std::filesystem::path &p);

/// Parses every source under tests/fixtures/<relative> into a model.
SystemModel model_from_sources(const std::string &relative);

// ---------------------------------------------------------------------------
// Complexity

/// Counts decision points in Java source text directly: if, while, for,
/// case labels, catch clauses, &&, ||, ternary ?. Skips comments, strings
/// and character literals. `default` and `do` add nothing.
int textual_decision_count(std::string_view source);

struct GeneratedMethod {
    std::string body;   // statements without the outer braces
    int decisions = 0;  // what v(G) - 1 must equal
};

/// Random structured method body (no jumps except switch-case breaks and
/// returns in tail position).
GeneratedMethod generate_structured_body(std::mt19937 &rng, int max_depth = 3);

struct ReductionRange {
    int min_residual = 0;
    int max_residual = 0;
    std::size_t states = 0;
};

/// Applies the reduction rules one at a time in every possible order and
/// reports the smallest and largest terminal E - N + 2. `protect` nodes are
/// never bypassed; `bypass_into_exit` as for module design.
ReductionRange exhaustive_reduction(const ControlFlowGraph &g, const std::vector<int> &protect,
                                    bool bypass_into_exit);

// ---------------------------------------------------------------------------
// Cohesion

struct CohesionExpect {
    std::optional<double> ck, lh, hm, hs, coh, tcc, lcc, sim;
};

/// Computed from the class facts alone (accesses and own-method calls),
/// by explicit pair enumeration and union-find.
CohesionExpect cohesion_oracle(const ClassInfo &c);

/// Random class with up to `max_methods` methods and `max_attrs`
/// attributes, accesses and intra-class calls qualified by the class name.
ClassInfo random_cohesion_class(std::mt19937 &rng, const std::string &name, int max_methods = 8,
                                int max_attrs = 6);

// ---------------------------------------------------------------------------
// Numerics

/// Symmetric eigen-decomposition by cyclic Jacobi rotations; eigenvalues
/// descending, eigenvectors as columns in matching order.
void jacobi_eigen(std::vector<std::vector<double>> a, std::vector<double> &values,
                  std::vector<std::vector<double>> &vectors);

/// The maintainability index formula evaluated in long double.
long double mi_oracle(long double volume, long double g, long double loc, long double cm, bool natural_log);

// ---------------------------------------------------------------------------
// Source generation

/// A well-formed Java compilation unit with one top-level class (and
/// sometimes a nested one) exercising the supported subset.
std::string random_java_class(std::mt19937 &rng, const std::string &package, const std::string &name,
                              const std::vector<std::string> &peers);

/// Random facts: `n` classes with inheritance, fields, methods, calls.
std::vector<ClassInfo> random_facts(std::mt19937 &rng, int n);

} // namespace metriscope::testing
