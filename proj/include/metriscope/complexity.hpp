// complexity.hpp
#ifndef METRISCOPE_COMPLEXITY_HPP
#define METRISCOPE_COMPLEXITY_HPP

#pragma once

#include "metriscope/cfg.hpp"
#include "metriscope/model.hpp"

#include <set>
#include <string_view>

namespace metriscope {

struct ComplexityTriple {
    int v = 1;  // cyclomatic
    int ev = 1; // essential
    int iv = 1; // module design

    bool operator==(const ComplexityTriple &) const = default;
};

enum class Quadrant { I, II, III, IV };

std::string_view to_string(Quadrant q);
std::string_view quadrant_meaning(Quadrant q);

/// E - N + 2. Validates the graph first (MalformedGraph).
int cyclomatic(const ControlFlowGraph &g);

/// Structured-reduction residual of g. Rules applied to a fixpoint:
///   - drop self loops and duplicate parallel edges;
///   - bypass a node with one predecessor and one successor, unless that
///     successor is the exit (an early exit must survive reduction);
///   - merge v into u when u's only successor is v and v's only
///     predecessor is u (v not the exit).
/// A fully structured body reduces to entry -> exit.
ControlFlowGraph essential_residual(const ControlFlowGraph &g);
int essential(const ControlFlowGraph &g);

/// Same reduction, but nodes in `call_nodes` are never bypassed and
/// bypassing into the exit is allowed: only decision structure that
/// guards a call survives. No calls -> 1.
ControlFlowGraph module_design_residual(const ControlFlowGraph &g, const std::set<int> &call_nodes);
int module_design(const ControlFlowGraph &g, const std::set<int> &call_nodes);
/// Uses the graph's own call-bearing nodes.
int module_design(const ControlFlowGraph &g);

ComplexityTriple complexity_triple(const ControlFlowGraph &g);

/// Per-method v(G): the CFG's cyclomatic number, 1 for bodyless methods.
int method_cyclomatic(const MethodInfo &m);
ComplexityTriple method_complexity(const MethodInfo &m);

/// Sum of method_cyclomatic over declared methods (constructors included).
int class_wmc(const ClassInfo &c);

struct QuadrantThresholds {
    int v = 10;
    int ev = 4;
};

Quadrant quadrant(int v, int ev, QuadrantThresholds t = {});

} // namespace metriscope

#endif // METRISCOPE_COMPLEXITY_HPP
