#include "metriscope/cohesion.hpp"

#include "metriscope/errors.hpp"

#include <algorithm>
#include <numeric>

namespace metriscope {

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int components()
    {
        int n = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            n += find(i) == i ? 1 : 0;
        return n;
    }
};

std::size_t intersection_size(const std::set<std::string> &a, const std::set<std::string> &b)
{
    std::size_t n = 0;
    for (const auto &x : a)
        n += b.count(x);
    return n;
}

} // namespace

std::string_view to_string(LcomVariant v)
{
    switch (v) {
    case LcomVariant::CK:
        return "LCOM-CK";
    case LcomVariant::LH:
        return "LCOM-LH";
    case LcomVariant::HM:
        return "LCOM-HM";
    case LcomVariant::HS:
        return "LCOM-HS";
    }
    return "LCOM";
}

bool CohesionGraph::shares(int i, int j) const { return intersection_size(accesses[i], accesses[j]) > 0; }

int CohesionGraph::accessors(const std::string &a) const
{
    int n = 0;
    for (const auto &acc : accesses)
        n += acc.count(a) != 0 ? 1 : 0;
    return n;
}

CohesionGraph cohesion_graph(const SystemModel &model, std::string_view c)
{
    const ClassInfo &cls = model.get(c);
    CohesionGraph g;
    for (const auto &a : cls.attributes)
        g.attributes.push_back(a.name);

    std::vector<const MethodInfo *> methods;
    for (const auto &m : cls.methods) {
        if (!cls.is_constructor(m))
            methods.push_back(&m);
    }
    for (const auto *m : methods) {
        g.methods.push_back(m->signature());
        std::set<std::string> acc;
        for (const auto &ref : m->accessed_attributes) {
            auto res = model.resolve_access(c, ref);
            if (res && res->first == cls.name)
                acc.insert(res->second);
        }
        g.accesses.push_back(std::move(acc));
    }
    for (int i = 0; i < static_cast<int>(methods.size()); ++i) {
        for (const auto &inv : methods[i]->invocations) {
            ResolvedCall rc = model.resolve_call(c, inv);
            if (rc.declaring_class != cls.name)
                continue;
            std::string sig = rc.key.substr(cls.name.size() + 1);
            for (int j = 0; j < static_cast<int>(methods.size()); ++j) {
                if (j != i && g.methods[j] == sig)
                    g.call_edges.insert({std::min(i, j), std::max(i, j)});
            }
        }
    }
    return g;
}

double lcom(const CohesionGraph &g, LcomVariant v)
{
    const int m = g.method_count();
    switch (v) {
    case LcomVariant::CK: {
        if (m < 1)
            throw Undefined("LCOM-CK", "class has no methods");
        long p = 0;
        long q = 0;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j)
                (g.shares(i, j) ? q : p) += 1;
        }
        return static_cast<double>(std::max(p - q, 0L));
    }
    case LcomVariant::LH:
    case LcomVariant::HM: {
        if (m < 1)
            throw Undefined(std::string(to_string(v)), "class has no methods");
        DisjointSets ds(m);
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                if (g.shares(i, j))
                    ds.unite(i, j);
            }
        }
        if (v == LcomVariant::HM) {
            for (const auto &[i, j] : g.call_edges)
                ds.unite(i, j);
        }
        return static_cast<double>(ds.components());
    }
    case LcomVariant::HS: {
        if (m < 2)
            throw Undefined("LCOM-HS", "needs at least two methods");
        const int a = g.attribute_count();
        if (a < 1)
            throw Undefined("LCOM-HS", "class declares no attributes");
        double sum = 0;
        for (const auto &attr : g.attributes)
            sum += g.accessors(attr);
        return (m - sum / a) / (m - 1);
    }
    }
    return 0;
}

double coh(const CohesionGraph &g)
{
    const int m = g.method_count();
    const int a = g.attribute_count();
    if (m == 0 || a == 0)
        throw Undefined("Coh", m == 0 ? "class has no methods" : "class declares no attributes");
    double sum = 0;
    for (const auto &attr : g.attributes)
        sum += g.accessors(attr);
    return sum / (static_cast<double>(m) * a);
}

TccLcc tcc_lcc(const CohesionGraph &g)
{
    const int m = g.method_count();
    if (m < 2)
        throw Undefined("TCC/LCC", "needs at least two methods");
    DisjointSets ds(m);
    long direct = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (g.shares(i, j)) {
                ++direct;
                ds.unite(i, j);
            }
        }
    }
    long indirect = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j)
            indirect += ds.find(i) == ds.find(j) ? 1 : 0;
    }
    double pairs = m * (m - 1) / 2.0;
    return {direct / pairs, indirect / pairs};
}

double similarity_cohesion(const CohesionGraph &g)
{
    const int m = g.method_count();
    if (m < 2)
        throw Undefined("SimCohesion", "needs at least two methods");
    double sum = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            std::size_t inter = intersection_size(g.accesses[i], g.accesses[j]);
            std::size_t uni = g.accesses[i].size() + g.accesses[j].size() - inter;
            if (uni > 0)
                sum += static_cast<double>(inter) / static_cast<double>(uni);
        }
    }
    return sum / (m * (m - 1) / 2.0);
}

} // namespace metriscope
