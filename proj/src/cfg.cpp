#include "metriscope/cfg.hpp"

#include "metriscope/errors.hpp"

#include <array>

namespace metriscope {

namespace {

constexpr std::array<std::pair<NodeKind, std::string_view>, 9> kKindNames{{
    {NodeKind::Entry, "entry"},
    {NodeKind::Exit, "exit"},
    {NodeKind::Plain, "plain"},
    {NodeKind::Decision, "decision"},
    {NodeKind::LoopHead, "loop-head"},
    {NodeKind::SwitchHead, "switch-head"},
    {NodeKind::CallBearing, "call-bearing"},
    {NodeKind::Return, "return"},
    {NodeKind::Jump, "jump"},
}};

std::vector<bool> reach(int n, const std::vector<std::vector<int>> &adj, int start)
{
    std::vector<bool> seen(n, false);
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

} // namespace

std::string_view to_string(NodeKind k)
{
    for (const auto &[kind, name] : kKindNames) {
        if (kind == k)
            return name;
    }
    return "plain";
}

std::optional<NodeKind> node_kind_from_string(std::string_view s)
{
    for (const auto &[kind, name] : kKindNames) {
        if (name == s)
            return kind;
    }
    return std::nullopt;
}

ControlFlowGraph::ControlFlowGraph(std::vector<NodeKind> kinds, std::vector<Edge> edges)
    : kinds_(std::move(kinds)), edges_(std::move(edges))
{
}

int ControlFlowGraph::add_node(NodeKind kind)
{
    kinds_.push_back(kind);
    return static_cast<int>(kinds_.size()) - 1;
}

void ControlFlowGraph::add_edge(int from, int to) { edges_.emplace_back(from, to); }

int ControlFlowGraph::entry() const
{
    for (int i = 0; i < node_count(); ++i) {
        if (kinds_[i] == NodeKind::Entry)
            return i;
    }
    return -1;
}

int ControlFlowGraph::exit() const
{
    for (int i = 0; i < node_count(); ++i) {
        if (kinds_[i] == NodeKind::Exit)
            return i;
    }
    return -1;
}

std::vector<int> ControlFlowGraph::successors(int node) const
{
    std::vector<int> out;
    for (const auto &[from, to] : edges_) {
        if (from == node)
            out.push_back(to);
    }
    return out;
}

std::vector<int> ControlFlowGraph::out_degrees() const
{
    std::vector<int> deg(kinds_.size(), 0);
    for (const auto &e : edges_)
        ++deg.at(e.first);
    return deg;
}

std::vector<int> ControlFlowGraph::call_nodes() const
{
    std::vector<int> out;
    for (int i = 0; i < node_count(); ++i) {
        if (kinds_[i] == NodeKind::CallBearing)
            out.push_back(i);
    }
    return out;
}

void ControlFlowGraph::validate() const
{
    const int n = node_count();
    int entries = 0;
    int exits = 0;
    for (NodeKind k : kinds_) {
        entries += k == NodeKind::Entry;
        exits += k == NodeKind::Exit;
    }
    if (entries != 1 || exits != 1)
        throw MalformedGraph("graph needs exactly one entry and one exit node");

    std::vector<std::vector<int>> fwd(n), bwd(n);
    for (const auto &[from, to] : edges_) {
        if (from < 0 || from >= n || to < 0 || to >= n)
            throw MalformedGraph("edge endpoint out of range");
        fwd[from].push_back(to);
        bwd[to].push_back(from);
    }
    const int in = entry();
    const int out = exit();
    if (!bwd[in].empty())
        throw MalformedGraph("entry node has predecessors");
    if (!fwd[out].empty())
        throw MalformedGraph("exit node has successors");

    auto from_entry = reach(n, fwd, in);
    auto to_exit = reach(n, bwd, out);
    for (int i = 0; i < n; ++i) {
        if (!from_entry[i])
            throw MalformedGraph("node " + std::to_string(i) + " unreachable from entry");
        if (!to_exit[i])
            throw MalformedGraph("exit unreachable from node " + std::to_string(i));
    }
}

} // namespace metriscope
