#include "metriscope/parser.hpp"

#include <algorithm>

namespace metriscope {

int count_statements(const std::vector<Stmt> &stmts)
{
    int n = 0;
    for (const auto &s : stmts) {
        n += s.counted ? 1 : 0;
        n += count_statements(s.body) + count_statements(s.else_body) + count_statements(s.init) +
             count_statements(s.update);
        for (const auto &c : s.cases)
            n += count_statements(c.body);
        for (const auto &c : s.catches)
            n += count_statements(c);
        if (s.finally_body)
            n += count_statements(*s.finally_body);
    }
    return n;
}

namespace {

// Builds backwards: each statement is given the node control reaches after
// it ("next") and returns its own entry node.
class Builder {
public:
    Builder()
    {
        entry_ = g_.add_node(NodeKind::Entry);
        exit_ = g_.add_node(NodeKind::Exit);
    }

    ControlFlowGraph run(const std::vector<Stmt> &body)
    {
        int first = build_list(body, exit_, true);
        g_.add_edge(entry_, first);
        return prune();
    }

private:
    struct Target {
        std::string label;
        int break_to = -1;
        int continue_to = -1; // -1 for non-loops
        bool unlabeled_break = false;
    };

    int node(NodeKind k) { return g_.add_node(k); }

    void edge(int from, int to) { g_.add_edge(from, to); }

    // Decision diamonds for short-circuit and conditional operators, then a
    // call-bearing node, in front of `target`.
    int with_prefix(const ExprInfo &e, int target, bool separate_call = true)
    {
        int cur = target;
        if (e.has_call && separate_call) {
            int c = node(NodeKind::CallBearing);
            edge(c, cur);
            cur = c;
        }
        for (int i = 0; i < e.decisions; ++i) {
            int d = node(NodeKind::Decision);
            int arm = node(NodeKind::Plain);
            edge(d, arm);
            edge(arm, cur);
            edge(d, cur);
            cur = d;
        }
        return cur;
    }

    int build_list(const std::vector<Stmt> &stmts, int next, bool tail)
    {
        int cur = next;
        for (std::size_t i = stmts.size(); i-- > 0;) {
            bool is_tail = tail && i + 1 == stmts.size();
            cur = build(stmts[i], cur, is_tail);
        }
        return cur;
    }

    std::string take_label()
    {
        std::string l = std::move(pending_label_);
        pending_label_.clear();
        return l;
    }

    int build(const Stmt &s, int next, bool tail)
    {
        using K = Stmt::Kind;
        switch (s.kind) {
        case K::Empty:
            return next;
        case K::Block:
            return build_list(s.body, next, tail);
        case K::Expr:
        case K::Decl:
        case K::Opaque: {
            int n = node(s.expr.has_call ? NodeKind::CallBearing : NodeKind::Plain);
            edge(n, next);
            return with_prefix(s.expr, n, false);
        }
        case K::If: {
            int join = node(NodeKind::Plain);
            edge(join, next);
            int then_entry = build_list(s.body, join, tail);
            int else_entry = build_list(s.else_body, join, tail);
            int d = node(NodeKind::Decision);
            edge(d, then_entry);
            edge(d, else_entry);
            return with_prefix(s.expr, d);
        }
        case K::While: {
            std::string label = take_label();
            int after = node(NodeKind::Plain);
            edge(after, next);
            int head = node(NodeKind::LoopHead);
            int cond = with_prefix(s.expr, head);
            targets_.push_back({label, after, cond, true});
            int body = build_list(s.body, cond, false);
            targets_.pop_back();
            edge(head, body);
            edge(head, after);
            return cond;
        }
        case K::Do: {
            std::string label = take_label();
            int after = node(NodeKind::Plain);
            edge(after, next);
            int head = node(NodeKind::LoopHead);
            int cond = with_prefix(s.expr, head);
            targets_.push_back({label, after, cond, true});
            int body = build_list(s.body, cond, false);
            targets_.pop_back();
            edge(head, body);
            edge(head, after);
            // A body node gives the back edge somewhere to land.
            int start = node(NodeKind::Plain);
            edge(start, body);
            return start;
        }
        case K::For: {
            std::string label = take_label();
            int after = node(NodeKind::Plain);
            edge(after, next);
            int head = node(NodeKind::LoopHead);
            int cond = with_prefix(s.expr, head);
            int update = build_list(s.update, cond, false);
            targets_.push_back({label, after, update, true});
            int body = build_list(s.body, update, false);
            targets_.pop_back();
            edge(head, body);
            edge(head, after);
            return build_list(s.init, cond, false);
        }
        case K::ForEach: {
            std::string label = take_label();
            int after = node(NodeKind::Plain);
            edge(after, next);
            int head = node(NodeKind::LoopHead);
            targets_.push_back({label, after, head, true});
            int body = build_list(s.body, head, false);
            targets_.pop_back();
            edge(head, body);
            edge(head, after);
            return with_prefix(s.expr, head);
        }
        case K::Switch: {
            std::string label = take_label();
            int after = node(NodeKind::Plain);
            edge(after, next);
            int head = node(NodeKind::SwitchHead);
            targets_.push_back({label, after, -1, true});
            std::vector<int> entries(s.cases.size());
            int fall = after;
            for (std::size_t i = s.cases.size(); i-- > 0;) {
                entries[i] = build_list(s.cases[i].body, fall, false);
                fall = entries[i];
            }
            targets_.pop_back();
            bool has_default = false;
            for (std::size_t i = 0; i < s.cases.size(); ++i) {
                const auto &c = s.cases[i];
                int edges = c.labels + (c.is_default ? 1 : 0);
                has_default = has_default || c.is_default;
                for (int k = 0; k < edges; ++k)
                    edge(head, entries[i]);
            }
            if (!has_default)
                edge(head, after);
            return with_prefix(s.expr, head);
        }
        case K::Break:
        case K::Continue: {
            int j = node(NodeKind::Jump);
            edge(j, jump_target(s));
            return j;
        }
        case K::Return:
        case K::Throw: {
            int r = node(NodeKind::Return);
            // A return in tail position reaches the end anyway; routing it
            // along normal flow keeps a structured method structured.
            edge(r, tail ? next : exit_);
            return with_prefix(s.expr, r);
        }
        case K::Try: {
            int after = node(NodeKind::Plain);
            edge(after, next);
            int rejoin = after;
            bool inner_tail = tail && !s.finally_body;
            if (s.finally_body)
                rejoin = build_list(*s.finally_body, after, tail);
            int dispatch = node(NodeKind::Decision);
            int body = build_list(s.body, rejoin, inner_tail);
            edge(dispatch, body);
            for (const auto &c : s.catches)
                edge(dispatch, build_list(c, rejoin, inner_tail));
            return with_prefix(s.expr, dispatch);
        }
        case K::Labeled: {
            bool loop = !s.body.empty() &&
                        (s.body.front().kind == K::While || s.body.front().kind == K::Do ||
                         s.body.front().kind == K::For || s.body.front().kind == K::ForEach ||
                         s.body.front().kind == K::Switch);
            if (loop) {
                pending_label_ = s.label;
                return build_list(s.body, next, tail);
            }
            targets_.push_back({s.label, next, -1, false});
            int entry = build_list(s.body, next, tail);
            targets_.pop_back();
            return entry;
        }
        case K::Sync: {
            int body = build_list(s.body, next, tail);
            return with_prefix(s.expr, body);
        }
        }
        return next;
    }

    int jump_target(const Stmt &s)
    {
        bool is_break = s.kind == Stmt::Kind::Break;
        for (auto it = targets_.rbegin(); it != targets_.rend(); ++it) {
            if (!s.label.empty()) {
                if (it->label != s.label)
                    continue;
                return is_break ? it->break_to : (it->continue_to >= 0 ? it->continue_to : it->break_to);
            }
            if (is_break && it->unlabeled_break)
                return it->break_to;
            if (!is_break && it->continue_to >= 0)
                return it->continue_to;
        }
        // A jump with no enclosing target cannot compile; treat it as a
        // method exit so the graph stays well formed.
        return exit_;
    }

    ControlFlowGraph prune()
    {
        const int n = g_.node_count();
        std::vector<std::vector<int>> succ(n);
        for (const auto &[f, t] : g_.edges())
            succ[f].push_back(t);
        std::vector<bool> seen(n, false);
        std::vector<int> stack{entry_};
        seen[entry_] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : succ[u]) {
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        seen[exit_] = true;
        std::vector<int> remap(n, -1);
        std::vector<NodeKind> kinds;
        // Entry first, exit second, then the rest in creation order.
        for (int i = 0; i < n; ++i) {
            if (seen[i]) {
                remap[i] = static_cast<int>(kinds.size());
                kinds.push_back(g_.kind(i));
            }
        }
        std::vector<ControlFlowGraph::Edge> edges;
        for (const auto &[f, t] : g_.edges()) {
            if (seen[f])
                edges.emplace_back(remap[f], remap[t]);
        }
        return ControlFlowGraph(std::move(kinds), std::move(edges));
    }

    ControlFlowGraph g_;
    int entry_ = 0;
    int exit_ = 1;
    std::vector<Target> targets_;
    std::string pending_label_;
};

} // namespace

ControlFlowGraph build_cfg(const std::vector<Stmt> &body) { return Builder().run(body); }

ControlFlowGraph build_cfg(std::span<const Token> body_tokens) { return build_cfg(parse_body(body_tokens)); }

} // namespace metriscope
