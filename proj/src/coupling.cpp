#include "metriscope/coupling.hpp"

#include "metriscope/errors.hpp"

#include <algorithm>
#include <map>

namespace metriscope {

std::set<std::string> coupled_classes(const SystemModel &model, std::string_view c)
{
    std::set<std::string> out = model.used_classes(c);
    const auto &users = model.user_classes(c);
    out.insert(users.begin(), users.end());
    out.erase(std::string(c));
    return out;
}

int cbo(const SystemModel &model, std::string_view c)
{
    return static_cast<int>(coupled_classes(model, c).size());
}

std::set<std::string> response_set(const SystemModel &model, std::string_view c)
{
    const ClassInfo &cls = model.get(c);
    std::set<std::string> rs;
    for (const auto &m : cls.methods) {
        rs.insert(cls.name + "." + m.signature());
        for (const auto &inv : m.invocations)
            rs.insert(model.resolve_call(c, inv).key);
    }
    return rs;
}

int rfc(const SystemModel &model, std::string_view c) { return static_cast<int>(response_set(model, c).size()); }

int mpc(const SystemModel &model, std::string_view c)
{
    const ClassInfo &cls = model.get(c);
    int sum = 0;
    for (const auto &m : cls.methods) {
        for (const auto &inv : m.invocations) {
            ResolvedCall rc = model.resolve_call(c, inv);
            if (rc.declaring_class != cls.name)
                sum += inv.multiplicity;
        }
    }
    return sum;
}

int dac(const SystemModel &model, std::string_view c)
{
    const ClassInfo &cls = model.get(c);
    int n = 0;
    for (const auto &a : cls.attributes) {
        if (model.resolve_system_type(a.declared_type, c))
            ++n;
    }
    return n;
}

double coupling_factor(const SystemModel &model)
{
    const auto &classes = model.system_classes();
    long tc = static_cast<long>(classes.size());
    long inheritance_pairs = 0;
    long clients = 0;
    for (const auto &c : classes) {
        const auto &desc = model.descendants(c);
        const auto &anc = model.ancestors(c);
        inheritance_pairs += static_cast<long>(desc.size());
        for (const auto &d : model.used_classes(c)) {
            bool related = std::find(anc.begin(), anc.end(), d) != anc.end() ||
                           std::find(desc.begin(), desc.end(), d) != desc.end();
            if (!related)
                ++clients;
        }
    }
    long denominator = tc * tc - tc - 2 * inheritance_pairs;
    if (denominator <= 0)
        throw DegenerateSystem("coupling factor denominator is " + std::to_string(denominator));
    return static_cast<double>(clients) / static_cast<double>(denominator);
}

int dit(const SystemModel &model, std::string_view c)
{
    // Longest path upward through system parents; memoised per call.
    std::map<std::string, int, std::less<>> depth;
    auto walk = [&](auto &&self, const std::string &n) -> int {
        if (auto it = depth.find(n); it != depth.end())
            return it->second;
        int best = 0;
        for (const auto &p : model.parents(n)) {
            if (model.is_system(p))
                best = std::max(best, 1 + self(self, p));
        }
        depth[n] = best;
        return best;
    };
    model.get(c);
    return walk(walk, std::string(c));
}

int noc(const SystemModel &model, std::string_view c) { return static_cast<int>(model.children(c).size()); }

} // namespace metriscope
