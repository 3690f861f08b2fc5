#include "support.hpp"

#include "metriscope/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace metriscope::testing {

std::filesystem::path fixture(const std::string &relative) { return std::filesystem::path(METRISCOPE_FIXTURES) / relative; }

std::string read_text(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SystemModel model_from_sources(const std::string &relative)
{
    ParsedSources parsed = parse_files(collect_sources({fixture(relative)}));
    if (!parsed.errors.empty())
        throw std::runtime_error(parsed.errors.front().path + ": " + parsed.errors.front().message);
    return build_system_model(parsed.classes());
}

// ---------------------------------------------------------------------------

int textual_decision_count(std::string_view s)
{
    int n = 0;
    auto word_at = [&](std::size_t i, std::string_view w) {
        if (s.compare(i, w.size(), w) != 0)
            return false;
        bool left = i == 0 || !(std::isalnum(static_cast<unsigned char>(s[i - 1])) || s[i - 1] == '_');
        std::size_t e = i + w.size();
        bool right = e >= s.size() || !(std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_');
        return left && right;
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/' && i + 1 < s.size() && s[i + 1] == '/') {
            while (i < s.size() && s[i] != '\n')
                ++i;
            continue;
        }
        if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
            i = s.find("*/", i + 2);
            if (i == std::string_view::npos)
                break;
            ++i;
            continue;
        }
        if (c == '"' || c == '\'') {
            for (++i; i < s.size() && s[i] != c; ++i) {
                if (s[i] == '\\')
                    ++i;
            }
            continue;
        }
        if ((c == '&' && i + 1 < s.size() && s[i + 1] == '&') || (c == '|' && i + 1 < s.size() && s[i + 1] == '|')) {
            ++n;
            ++i;
            continue;
        }
        if (c == '?') {
            std::size_t k = i + 1;
            while (k < s.size() && s[k] == ' ')
                ++k;
            bool wildcard = (i > 0 && s[i - 1] == '<') || (k < s.size() && (s[k] == '>' || s[k] == ','));
            n += wildcard ? 0 : 1;
            continue;
        }
        for (std::string_view w : {"if", "while", "for", "case", "catch"}) {
            if (word_at(i, w)) {
                // A do-while's closing "while" is a decision too; both forms
                // count once, which is what the generator relies on.
                ++n;
                i += w.size() - 1;
                break;
            }
        }
    }
    return n;
}

namespace {

class BodyGen {
public:
    explicit BodyGen(std::mt19937 &rng) : rng_(rng) {}

    GeneratedMethod run(int max_depth)
    {
        std::ostringstream out;
        out << "int x = " << pick(0, 9) << ";\n";
        out << "int y = x + " << pick(1, 5) << ";\n";
        out << "int[] items = {1, 2, 3};\n";
        int n = pick(1, 4);
        for (int i = 0; i < n; ++i)
            statement(out, max_depth, 1);
        if (pick(0, 2) == 0) {
            // Returns in tail position keep the body structured.
            std::string c = condition();
            out << "if (" << c << ") {\n";
            statement(out, max_depth - 1, 2);
            out << "return x;\n} else {\nreturn y;\n}\n";
            decisions_ += 1;
        } else if (pick(0, 1) == 0) {
            out << "return x + y;\n";
        }
        return {out.str(), decisions_};
    }

private:
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::string condition()
    {
        static const char *atoms[] = {"x > 3", "y < 10", "x != y", "helper(x) > 0", "items.length > 2"};
        std::string c = atoms[pick(0, 4)];
        int ops = pick(0, 2);
        for (int i = 0; i < ops; ++i) {
            c += pick(0, 1) ? " && " : " || ";
            c += atoms[pick(0, 4)];
            ++decisions_;
        }
        return c;
    }

    void simple(std::ostringstream &out)
    {
        switch (pick(0, 4)) {
        case 0:
            out << "x = x + 1;\n";
            break;
        case 1:
            out << "helper(y);\n";
            break;
        case 2:
            out << "System.out.println(x);\n";
            break;
        case 3:
            out << "y = " << condition() << " ? x : y;\n";
            ++decisions_;
            break;
        default:
            out << "int t" << counter_++ << " = x * 2;\n";
            break;
        }
    }

    void block(std::ostringstream &out, int depth, int indent)
    {
        int n = pick(1, 3);
        for (int i = 0; i < n; ++i)
            statement(out, depth, indent);
    }

    void statement(std::ostringstream &out, int depth, int indent)
    {
        if (depth <= 0) {
            simple(out);
            return;
        }
        switch (pick(0, 9)) {
        case 0:
        case 1:
            out << "if (" << condition() << ") {\n";
            ++decisions_;
            block(out, depth - 1, indent + 1);
            if (pick(0, 1)) {
                out << "} else {\n";
                block(out, depth - 1, indent + 1);
            }
            out << "}\n";
            break;
        case 2:
            out << "while (" << condition() << ") {\n";
            ++decisions_;
            block(out, depth - 1, indent + 1);
            out << "}\n";
            break;
        case 3:
            out << "for (int i" << counter_ << " = 0; " << condition() << "; i" << counter_ << "++) {\n";
            ++counter_;
            ++decisions_;
            block(out, depth - 1, indent + 1);
            out << "}\n";
            break;
        case 4:
            out << "for (int v" << counter_++ << " : items) {\n";
            ++decisions_;
            block(out, depth - 1, indent + 1);
            out << "}\n";
            break;
        case 5:
            out << "do {\n";
            block(out, depth - 1, indent + 1);
            out << "} while (" << condition() << ");\n";
            ++decisions_;
            break;
        case 6: {
            out << "switch (x) {\n";
            int cases = pick(1, 3);
            int label = 0;
            for (int c = 0; c < cases; ++c) {
                int labels = pick(1, 2);
                for (int l = 0; l < labels; ++l) {
                    out << "case " << label++ << ":\n";
                    ++decisions_;
                }
                block(out, depth - 1, indent + 1);
                out << "break;\n";
            }
            if (pick(0, 1)) {
                out << "default:\n";
                block(out, depth - 1, indent + 1);
                out << "break;\n";
            }
            out << "}\n";
            break;
        }
        case 7: {
            out << "try {\n";
            block(out, depth - 1, indent + 1);
            int catches = pick(1, 2);
            static const char *types[] = {"IllegalStateException", "RuntimeException"};
            for (int c = 0; c < catches; ++c) {
                out << "} catch (" << types[c] << " e" << counter_++ << ") {\n";
                ++decisions_;
                block(out, depth - 1, indent + 1);
            }
            if (pick(0, 1)) {
                out << "} finally {\n";
                simple(out);
            }
            out << "}\n";
            break;
        }
        default:
            simple(out);
            break;
        }
    }

    std::mt19937 &rng_;
    int decisions_ = 0;
    int counter_ = 0;
};

// Exhaustive reduction over a small multigraph.
struct RState {
    std::vector<int> nodes;                 // alive ids, sorted
    std::multiset<std::pair<int, int>> edges;
    std::set<int> protect;

    std::string key() const
    {
        std::ostringstream k;
        for (int n : nodes)
            k << n << (protect.count(n) ? "p" : "") << ',';
        k << '|';
        for (const auto &[a, b] : edges)
            k << a << '>' << b << ',';
        return k.str();
    }
};

std::multiset<int> outs(const RState &s, int u)
{
    std::multiset<int> r;
    for (const auto &[a, b] : s.edges)
        if (a == u)
            r.insert(b);
    return r;
}

std::multiset<int> ins(const RState &s, int v)
{
    std::multiset<int> r;
    for (const auto &[a, b] : s.edges)
        if (b == v)
            r.insert(a);
    return r;
}

void erase_one(std::multiset<std::pair<int, int>> &e, std::pair<int, int> x) { e.erase(e.find(x)); }

} // namespace

GeneratedMethod generate_structured_body(std::mt19937 &rng, int max_depth) { return BodyGen(rng).run(max_depth); }

ReductionRange exhaustive_reduction(const ControlFlowGraph &g, const std::vector<int> &protect, bool bypass_into_exit)
{
    RState start;
    for (int i = 0; i < g.node_count(); ++i)
        start.nodes.push_back(i);
    for (const auto &e : g.edges())
        start.edges.insert(e);
    start.protect.insert(protect.begin(), protect.end());
    const int entry = g.entry(), exit = g.exit();

    ReductionRange r;
    r.min_residual = 1 << 30;
    r.max_residual = -(1 << 30);
    std::unordered_set<std::string> seen;
    std::vector<RState> stack{start};
    while (!stack.empty()) {
        RState s = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(s.key()).second)
            continue;
        std::vector<RState> next;
        // Self-loops and parallel duplicates.
        for (const auto &e : std::set<std::pair<int, int>>(s.edges.begin(), s.edges.end())) {
            if (e.first == e.second || s.edges.count(e) > 1) {
                RState t = s;
                erase_one(t.edges, e);
                next.push_back(std::move(t));
            }
        }
        for (int x : s.nodes) {
            auto in = ins(s, x), out = outs(s, x);
            // Series bypass.
            if (x != entry && x != exit && !s.protect.count(x) && in.size() == 1 && out.size() == 1) {
                int u = *in.begin(), w = *out.begin();
                if (u != x && w != x && (w != exit || bypass_into_exit)) {
                    RState t = s;
                    erase_one(t.edges, {u, x});
                    erase_one(t.edges, {x, w});
                    t.edges.insert({u, w});
                    t.nodes.erase(std::find(t.nodes.begin(), t.nodes.end(), x));
                    next.push_back(std::move(t));
                }
            }
            // Sequence merge of x's single successor into x.
            if (x != exit && out.size() == 1) {
                int v = *out.begin();
                if (v != x && v != exit && v != entry && ins(s, v).size() == 1) {
                    RState t = s;
                    erase_one(t.edges, {x, v});
                    for (int w : outs(s, v)) {
                        erase_one(t.edges, {v, w});
                        t.edges.insert({x, w == v ? x : w});
                    }
                    if (t.protect.count(v)) {
                        t.protect.erase(v);
                        t.protect.insert(x);
                    }
                    t.nodes.erase(std::find(t.nodes.begin(), t.nodes.end(), v));
                    next.push_back(std::move(t));
                }
            }
        }
        if (next.empty()) {
            int v = static_cast<int>(s.edges.size()) - static_cast<int>(s.nodes.size()) + 2;
            r.min_residual = std::min(r.min_residual, v);
            r.max_residual = std::max(r.max_residual, v);
        }
        for (auto &t : next)
            stack.push_back(std::move(t));
    }
    r.states = seen.size();
    return r;
}

// ---------------------------------------------------------------------------

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
    int groups()
    {
        std::set<int> r;
        for (int i = 0; i < static_cast<int>(p.size()); ++i)
            r.insert(find(i));
        return static_cast<int>(r.size());
    }
};

} // namespace

CohesionExpect cohesion_oracle(const ClassInfo &c)
{
    const std::string prefix = c.name + ".";
    std::vector<const MethodInfo *> ms;
    for (const auto &m : c.methods)
        if (m.name != c.simple_name())
            ms.push_back(&m);
    std::set<std::string> declared;
    for (const auto &a : c.attributes)
        declared.insert(a.name);

    const int m = static_cast<int>(ms.size());
    const int a = static_cast<int>(declared.size());
    std::vector<std::set<std::string>> I(m);
    for (int i = 0; i < m; ++i) {
        for (const auto &ref : ms[i]->accessed_attributes) {
            if (ref.rfind(prefix, 0) == 0 && declared.count(ref.substr(prefix.size())))
                I[i].insert(ref.substr(prefix.size()));
        }
    }
    auto shares = [&](int i, int j) {
        for (const auto &x : I[i])
            if (I[j].count(x))
                return true;
        return false;
    };
    auto calls = [&](int i, int j) {
        for (const auto &inv : ms[i]->invocations) {
            if (inv.target_class == c.name && inv.method == ms[j]->name)
                return true;
        }
        return false;
    };

    CohesionExpect e;
    if (m >= 1) {
        int P = 0, Q = 0;
        Dsu lh(m), hm(m);
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                if (shares(i, j)) {
                    ++Q;
                    lh.unite(i, j);
                    hm.unite(i, j);
                } else {
                    ++P;
                }
                if (calls(i, j) || calls(j, i))
                    hm.unite(i, j);
            }
        }
        e.ck = std::max(P - Q, 0);
        e.lh = lh.groups();
        e.hm = hm.groups();
    }
    if (m >= 1 && a >= 1) {
        double total = 0;
        for (const auto &attr : declared)
            for (int i = 0; i < m; ++i)
                total += I[i].count(attr);
        e.coh = total / (static_cast<double>(m) * a);
        if (m >= 2)
            e.hs = (m - total / a) / (m - 1.0);
    }
    if (m >= 2) {
        double pairs = m * (m - 1) / 2.0;
        int direct = 0, indirect = 0;
        // Transitive closure by Floyd-Warshall on the share relation.
        std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                reach[i][j] = i != j && shares(i, j);
        for (int k = 0; k < m; ++k)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (reach[i][k] && reach[k][j])
                        reach[i][j] = true;
        double sim = 0;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                direct += shares(i, j) ? 1 : 0;
                indirect += reach[i][j] ? 1 : 0;
                std::set<std::string> u = I[i];
                u.insert(I[j].begin(), I[j].end());
                int inter = 0;
                for (const auto &x : I[i])
                    inter += I[j].count(x) ? 1 : 0;
                if (!u.empty())
                    sim += static_cast<double>(inter) / static_cast<double>(u.size());
            }
        }
        e.tcc = direct / pairs;
        e.lcc = indirect / pairs;
        e.sim = sim / pairs;
    }
    return e;
}

ClassInfo random_cohesion_class(std::mt19937 &rng, const std::string &name, int max_methods, int max_attrs)
{
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    ClassInfo c;
    c.name = name;
    int m = pick(0, max_methods);
    int a = pick(0, max_attrs);
    for (int k = 0; k < a; ++k)
        c.attributes.push_back({"f" + std::to_string(k), "int", Visibility::Private, pick(0, 4) == 0});
    if (pick(0, 3) == 0) {
        MethodInfo ctor;
        ctor.name = c.simple_name();
        for (int k = 0; k < a; ++k)
            ctor.accessed_attributes.push_back(name + ".f" + std::to_string(k));
        c.methods.push_back(ctor);
    }
    for (int i = 0; i < m; ++i) {
        MethodInfo mi;
        mi.name = "m" + std::to_string(i);
        mi.visibility = Visibility::Public;
        std::set<std::string> acc;
        for (int k = 0; k < a; ++k)
            if (pick(0, 2) == 0)
                acc.insert(name + ".f" + std::to_string(k));
        if (pick(0, 5) == 0)
            acc.insert(name + ".missing"); // not declared: ignored
        mi.accessed_attributes.assign(acc.begin(), acc.end());
        for (int j = 0; j < m; ++j) {
            if (j != i && pick(0, 6) == 0) {
                Invocation inv;
                inv.target_class = name;
                inv.method = "m" + std::to_string(j);
                mi.invocations.push_back(inv);
            }
        }
        c.methods.push_back(std::move(mi));
    }
    return c;
}

// ---------------------------------------------------------------------------

void jacobi_eigen(std::vector<std::vector<double>> a, std::vector<double> &values,
                  std::vector<std::vector<double>> &vectors)
{
    const std::size_t n = a.size();
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        v[i][i] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += a[p][q] * a[p][q];
        if (off < 1e-30)
            break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300)
                    continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x][x] > a[y][y]; });
    values.clear();
    vectors.assign(n, std::vector<double>(n));
    for (std::size_t c = 0; c < n; ++c) {
        values.push_back(a[order[c]][order[c]]);
        for (std::size_t r = 0; r < n; ++r)
            vectors[r][c] = v[r][order[c]];
    }
}

long double mi_oracle(long double volume, long double g, long double loc, long double cm, bool natural_log)
{
    auto lg = [&](long double x) { return natural_log ? std::log(x) : std::log2(x); };
    return 171.0L - 5.2L * lg(volume) - 0.23L * g - 16.2L * lg(loc) + 50.0L * std::sin(std::sqrt(2.4L * cm));
}

// ---------------------------------------------------------------------------

std::string random_java_class(std::mt19937 &rng, const std::string &package, const std::string &name,
                              const std::vector<std::string> &peers)
{
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    static const char *vis[] = {"public ", "protected ", "private ", ""};
    static const char *types[] = {"int", "String", "double", "List<String>", "Map<String, Integer>", "long[]"};
    std::ostringstream out;
    out << "package " << package << ";\n\nimport java.util.List;\nimport java.util.Map;\n\n";
    if (pick(0, 1))
        out << "/**\n * Generated class " << name << ".\n */\n";
    bool abstract_class = pick(0, 5) == 0;
    out << "public " << (abstract_class ? "abstract " : "") << "class " << name;
    if (!peers.empty() && pick(0, 2) == 0)
        out << " extends " << peers[pick(0, static_cast<int>(peers.size()) - 1)];
    if (pick(0, 3) == 0)
        out << " implements Runnable";
    out << " {\n";
    int fields = pick(0, 4);
    for (int i = 0; i < fields; ++i) {
        out << "    " << vis[pick(0, 3)] << (pick(0, 4) == 0 ? "static " : "") << types[pick(0, 5)] << " field" << i;
        if (pick(0, 2) == 0)
            out << " = null";
        out << ";\n";
    }
    if (!peers.empty() && pick(0, 1))
        out << "    private " << peers[pick(0, static_cast<int>(peers.size()) - 1)] << " peer;\n";
    if (pick(0, 1)) {
        out << "\n    public " << name << "(int seed) {\n        // initial state\n        this.count = seed;\n    }\n";
    }
    out << "    private int count;\n";
    int methods = pick(1, 4);
    for (int i = 0; i < methods; ++i) {
        out << "\n    " << vis[pick(0, 3)] << "int method" << i << "(";
        int params = pick(0, 2);
        for (int p = 0; p < params; ++p)
            out << (p ? ", " : "") << types[pick(0, 5)] << " p" << p;
        out << ") {\n";
        GeneratedMethod body = generate_structured_body(rng, 2);
        out << body.body;
        out << "        return count;\n    }\n";
    }
    if (abstract_class)
        out << "\n    protected abstract void hook(String reason);\n";
    out << "\n    int helper(int v) {\n        return v + count; /* trailing */\n    }\n";
    if (pick(0, 3) == 0)
        out << "\n    static class Inner {\n        private int depth;\n\n        int depth() {\n            return depth;\n        }\n    }\n";
    out << "}\n";
    return out.str();
}

std::vector<ClassInfo> random_facts(std::mt19937 &rng, int n)
{
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<ClassInfo> out;
    static const Visibility vis[] = {Visibility::Public, Visibility::Protected, Visibility::Private,
                                     Visibility::Default};
    for (int i = 0; i < n; ++i) {
        ClassInfo c;
        c.name = "pkg.C" + std::to_string(i);
        c.kind = pick(0, 6) == 0 ? ClassKind::AbstractClass : ClassKind::Class;
        if (i > 0 && pick(0, 2) == 0)
            c.superclasses.push_back("pkg.C" + std::to_string(pick(0, i - 1)));
        if (pick(0, 4) == 0)
            c.superclasses.push_back("java.io.Serializable");
        int attrs = pick(0, 4);
        for (int a = 0; a < attrs; ++a) {
            std::string type = pick(0, 2) == 0 && n > 1 ? "pkg.C" + std::to_string(pick(0, n - 1)) : "int";
            c.attributes.push_back({"a" + std::to_string(a), type, vis[pick(0, 3)], pick(0, 5) == 0});
        }
        int methods = pick(0, 5);
        for (int m = 0; m < methods; ++m) {
            MethodInfo mi;
            mi.name = "op" + std::to_string(m);
            mi.visibility = vis[pick(0, 3)];
            mi.is_abstract = c.kind == ClassKind::AbstractClass && pick(0, 2) == 0;
            int params = pick(0, 2);
            for (int p = 0; p < params; ++p)
                mi.parameter_types.push_back(pick(0, 1) ? "int" : "pkg.C" + std::to_string(pick(0, n - 1)));
            std::set<std::string> acc;
            for (int a = 0; a < attrs; ++a)
                if (pick(0, 2) == 0)
                    acc.insert(c.name + ".a" + std::to_string(a));
            mi.accessed_attributes.assign(acc.begin(), acc.end());
            int calls = pick(0, 3);
            for (int k = 0; k < calls; ++k) {
                Invocation inv;
                inv.target_class = "pkg.C" + std::to_string(pick(0, n - 1));
                inv.method = "op" + std::to_string(pick(0, 4));
                inv.multiplicity = pick(1, 3);
                bool dup = false;
                for (const auto &x : mi.invocations)
                    dup = dup || (x.target_class == inv.target_class && x.method == inv.method);
                if (!dup)
                    mi.invocations.push_back(inv);
            }
            if (!mi.is_abstract) {
                // A chain of decisions: v(G) = 1 + d.
                int d = pick(0, 3);
                std::vector<NodeKind> kinds{NodeKind::Entry, NodeKind::Exit};
                std::vector<ControlFlowGraph::Edge> edges;
                int prev = 0;
                for (int k = 0; k < d; ++k) {
                    int dn = static_cast<int>(kinds.size());
                    kinds.push_back(NodeKind::Decision);
                    kinds.push_back(NodeKind::Plain);
                    edges.emplace_back(prev, dn);
                    edges.emplace_back(dn, dn + 1);
                    int join = static_cast<int>(kinds.size());
                    kinds.push_back(NodeKind::Plain);
                    edges.emplace_back(dn, join);
                    edges.emplace_back(dn + 1, join);
                    prev = join;
                }
                edges.emplace_back(prev, 1);
                mi.cfg = ControlFlowGraph(std::move(kinds), std::move(edges));
                mi.statements = pick(0, 20);
                mi.lines = pick(1, 40);
            }
            c.methods.push_back(std::move(mi));
        }
        c.line_count = pick(1, 400);
        c.comment_lines = pick(0, c.line_count);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace metriscope::testing
