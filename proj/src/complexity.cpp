#include "metriscope/complexity.hpp"

#include "metriscope/errors.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace metriscope {

namespace {

// Mutable multigraph used by the reductions.
struct Reducer {
    std::vector<std::multiset<int>> out;
    std::vector<std::multiset<int>> in;
    std::vector<bool> alive;
    std::vector<bool> protect; // never bypassed
    std::vector<NodeKind> kinds;
    int entry = -1;
    int exit = -1;
    bool bypass_into_exit = false;

    explicit Reducer(const ControlFlowGraph &g)
        : out(g.node_count()), in(g.node_count()), alive(g.node_count(), true),
          protect(g.node_count(), false), kinds(g.kinds()), entry(g.entry()), exit(g.exit())
    {
        for (const auto &[f, t] : g.edges()) {
            out[f].insert(t);
            in[t].insert(f);
        }
    }

    void remove_edge(int u, int v)
    {
        out[u].erase(out[u].find(v));
        in[v].erase(in[v].find(u));
    }

    void add_edge(int u, int v)
    {
        out[u].insert(v);
        in[v].insert(u);
    }

    bool drop_self_loops()
    {
        bool changed = false;
        for (int u = 0; u < static_cast<int>(out.size()); ++u) {
            while (alive[u] && out[u].count(u) != 0) {
                remove_edge(u, u);
                changed = true;
            }
        }
        return changed;
    }

    bool collapse_parallel()
    {
        bool changed = false;
        for (int u = 0; u < static_cast<int>(out.size()); ++u) {
            if (!alive[u])
                continue;
            std::set<int> distinct(out[u].begin(), out[u].end());
            for (int v : distinct) {
                while (out[u].count(v) > 1) {
                    remove_edge(u, v);
                    changed = true;
                }
            }
        }
        return changed;
    }

    bool bypass_one()
    {
        for (int x = 0; x < static_cast<int>(out.size()); ++x) {
            if (!alive[x] || x == entry || x == exit || protect[x])
                continue;
            if (in[x].size() != 1 || out[x].size() != 1)
                continue;
            int u = *in[x].begin();
            int w = *out[x].begin();
            if (u == x || w == x)
                continue;
            if (w == exit && !bypass_into_exit)
                continue;
            remove_edge(u, x);
            remove_edge(x, w);
            add_edge(u, w);
            alive[x] = false;
            return true;
        }
        return false;
    }

    bool merge_one()
    {
        for (int u = 0; u < static_cast<int>(out.size()); ++u) {
            if (!alive[u] || u == exit || out[u].size() != 1)
                continue;
            int v = *out[u].begin();
            if (v == u || v == exit || v == entry || in[v].size() != 1)
                continue;
            remove_edge(u, v);
            std::vector<int> succ(out[v].begin(), out[v].end());
            for (int w : succ) {
                remove_edge(v, w);
                add_edge(u, w == v ? u : w);
            }
            protect[u] = protect[u] || protect[v];
            alive[v] = false;
            return true;
        }
        return false;
    }

    void run()
    {
        bool changed = true;
        while (changed) {
            changed = false;
            changed |= drop_self_loops();
            changed |= collapse_parallel();
            if (bypass_one() || merge_one())
                changed = true;
        }
    }

    ControlFlowGraph residual() const
    {
        std::vector<int> remap(out.size(), -1);
        std::vector<NodeKind> k;
        for (int i = 0; i < static_cast<int>(out.size()); ++i) {
            if (alive[i]) {
                remap[i] = static_cast<int>(k.size());
                NodeKind kind = kinds[i];
                if (protect[i] && kind != NodeKind::Entry && kind != NodeKind::Exit)
                    kind = NodeKind::CallBearing;
                k.push_back(kind);
            }
        }
        std::vector<ControlFlowGraph::Edge> e;
        for (int u = 0; u < static_cast<int>(out.size()); ++u) {
            if (!alive[u])
                continue;
            for (int v : out[u])
                e.emplace_back(remap[u], remap[v]);
        }
        std::sort(e.begin(), e.end());
        return ControlFlowGraph(std::move(k), std::move(e));
    }
};

int edges_minus_nodes(const ControlFlowGraph &g) { return g.edge_count() - g.node_count() + 2; }

} // namespace

std::string_view to_string(Quadrant q)
{
    switch (q) {
    case Quadrant::I:
        return "I";
    case Quadrant::II:
        return "II";
    case Quadrant::III:
        return "III";
    case Quadrant::IV:
        return "IV";
    }
    return "III";
}

std::string_view quadrant_meaning(Quadrant q)
{
    switch (q) {
    case Quadrant::I:
        return "unreliable and unmaintainable";
    case Quadrant::II:
        return "reliable but unmaintainable";
    case Quadrant::III:
        return "reliable and maintainable";
    case Quadrant::IV:
        return "unreliable but maintainable";
    }
    return "";
}

int cyclomatic(const ControlFlowGraph &g)
{
    g.validate();
    return edges_minus_nodes(g);
}

ControlFlowGraph essential_residual(const ControlFlowGraph &g)
{
    g.validate();
    Reducer r(g);
    r.run();
    return r.residual();
}

int essential(const ControlFlowGraph &g) { return edges_minus_nodes(essential_residual(g)); }

ControlFlowGraph module_design_residual(const ControlFlowGraph &g, const std::set<int> &call_nodes)
{
    g.validate();
    Reducer r(g);
    r.bypass_into_exit = true;
    for (int c : call_nodes) {
        if (c < 0 || c >= g.node_count())
            throw MalformedGraph("call node " + std::to_string(c) + " out of range");
        r.protect[c] = true;
    }
    r.run();
    return r.residual();
}

int module_design(const ControlFlowGraph &g, const std::set<int> &call_nodes)
{
    if (call_nodes.empty()) {
        g.validate();
        return 1;
    }
    return edges_minus_nodes(module_design_residual(g, call_nodes));
}

int module_design(const ControlFlowGraph &g)
{
    auto calls = g.call_nodes();
    return module_design(g, std::set<int>(calls.begin(), calls.end()));
}

ComplexityTriple complexity_triple(const ControlFlowGraph &g)
{
    return {cyclomatic(g), essential(g), module_design(g)};
}

int method_cyclomatic(const MethodInfo &m) { return m.cfg ? cyclomatic(*m.cfg) : 1; }

ComplexityTriple method_complexity(const MethodInfo &m)
{
    return m.cfg ? complexity_triple(*m.cfg) : ComplexityTriple{};
}

int class_wmc(const ClassInfo &c)
{
    int sum = 0;
    for (const auto &m : c.methods)
        sum += method_cyclomatic(m);
    return sum;
}

Quadrant quadrant(int v, int ev, QuadrantThresholds t)
{
    bool complex = v > t.v;
    bool unstructured = ev > t.ev;
    if (complex && unstructured)
        return Quadrant::I;
    if (unstructured)
        return Quadrant::II;
    if (complex)
        return Quadrant::IV;
    return Quadrant::III;
}

} // namespace metriscope
