// cfg.hpp
#ifndef METRISCOPE_CFG_HPP
#define METRISCOPE_CFG_HPP

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metriscope {

enum class NodeKind {
    Entry,
    Exit,
    Plain,
    Decision,
    LoopHead,
    SwitchHead,
    CallBearing,
    Return,
    Jump,
};

std::string_view to_string(NodeKind k);
std::optional<NodeKind> node_kind_from_string(std::string_view s);

/// Per-method directed graph of basic blocks. Parallel edges are allowed
/// (a switch with two labels on one block); node ids are dense indices.
class ControlFlowGraph {
public:
    using Edge = std::pair<int, int>;

    ControlFlowGraph() = default;
    ControlFlowGraph(std::vector<NodeKind> kinds, std::vector<Edge> edges);

    int add_node(NodeKind kind);
    void add_edge(int from, int to);

    int node_count() const { return static_cast<int>(kinds_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<NodeKind> &kinds() const { return kinds_; }
    const std::vector<Edge> &edges() const { return edges_; }
    NodeKind kind(int node) const { return kinds_.at(node); }
    void set_kind(int node, NodeKind k) { kinds_.at(node) = k; }

    /// First node of kind Entry / Exit, or -1.
    int entry() const;
    int exit() const;

    std::vector<int> successors(int node) const;
    std::vector<int> out_degrees() const;

    /// Nodes of kind CallBearing.
    std::vector<int> call_nodes() const;

    /// Throws MalformedGraph unless: exactly one entry and one exit, all
    /// edge endpoints in range, entry has no predecessors, exit has no
    /// successors, every node reachable from entry and reaching exit.
    void validate() const;

    bool operator==(const ControlFlowGraph &) const = default;

private:
    std::vector<NodeKind> kinds_;
    std::vector<Edge> edges_;
};

} // namespace metriscope

#endif // METRISCOPE_CFG_HPP
