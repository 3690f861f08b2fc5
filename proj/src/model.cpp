#include "metriscope/model.hpp"

#include "metriscope/errors.hpp"
#include "metriscope/lexer.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>

namespace metriscope {

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::string simple_of(std::string_view name)
{
    auto dot = name.rfind('.');
    return std::string(dot == std::string_view::npos ? name : name.substr(dot + 1));
}

std::string join(const std::vector<std::string> &parts, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out += sep;
        out += parts[i];
    }
    return out;
}

bool types_match(std::string_view written, std::string_view declared)
{
    if (written == "?")
        return true;
    std::string a = erase_type(written);
    std::string b = erase_type(declared);
    return a == b || simple_of(a) == simple_of(b);
}

} // namespace

InheritanceCycle::InheritanceCycle(std::vector<std::string> path)
    : Error("inheritance cycle: " + join(path, " -> ")), path_(std::move(path))
{
}

SyntaxError::SyntaxError(std::string path, int line, std::vector<std::string> expected)
    : Error(path + ":" + std::to_string(line) + ": syntax error, expected " +
            (expected.empty() ? std::string("declaration") : join(expected, " | "))),
      line_(line), expected_(std::move(expected))
{
}

std::string_view to_string(Visibility v)
{
    switch (v) {
    case Visibility::Public:
        return "public";
    case Visibility::Protected:
        return "protected";
    case Visibility::Private:
        return "private";
    case Visibility::Default:
        return "default";
    }
    return "default";
}

std::string_view to_string(ClassKind k)
{
    switch (k) {
    case ClassKind::Class:
        return "class";
    case ClassKind::Interface:
        return "interface";
    case ClassKind::AbstractClass:
        return "abstract-class";
    }
    return "class";
}

std::optional<Visibility> visibility_from_string(std::string_view s)
{
    for (auto v : {Visibility::Public, Visibility::Protected, Visibility::Private, Visibility::Default}) {
        if (to_string(v) == s)
            return v;
    }
    return std::nullopt;
}

std::optional<ClassKind> class_kind_from_string(std::string_view s)
{
    for (auto k : {ClassKind::Class, ClassKind::Interface, ClassKind::AbstractClass}) {
        if (to_string(k) == s)
            return k;
    }
    return std::nullopt;
}

std::string erase_type(std::string_view type_ref)
{
    std::string out;
    int depth = 0;
    for (char c : type_ref) {
        if (c == '<') {
            ++depth;
        } else if (c == '>') {
            depth = std::max(0, depth - 1);
        } else if (depth == 0 && c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c))) {
            out += c;
        }
    }
    while (!out.empty() && out.back() == '.')
        out.pop_back();
    return out;
}

std::string Invocation::target() const
{
    return target_class + "." + method + "(" + join(argument_types, ",") + ")";
}

std::optional<Invocation> Invocation::parse(std::string_view target, int count)
{
    auto open = target.find('(');
    if (open == std::string_view::npos || target.back() != ')')
        return std::nullopt;
    std::string_view head = target.substr(0, open);
    auto dot = head.rfind('.');
    if (dot == std::string_view::npos || dot == 0 || dot + 1 == head.size())
        return std::nullopt;
    Invocation inv;
    inv.target_class = std::string(head.substr(0, dot));
    inv.method = std::string(head.substr(dot + 1));
    std::string_view args = target.substr(open + 1, target.size() - open - 2);
    // Split on top-level commas; generic arguments may contain commas.
    int depth = 0;
    std::string cur;
    for (char c : args) {
        if (c == '<')
            ++depth;
        if (c == '>')
            --depth;
        if (c == ',' && depth == 0) {
            inv.argument_types.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !inv.argument_types.empty())
        inv.argument_types.push_back(trim(cur));
    inv.multiplicity = count;
    return inv;
}

std::string MethodInfo::signature() const
{
    std::vector<std::string> erased;
    erased.reserve(parameter_types.size());
    for (const auto &p : parameter_types)
        erased.push_back(erase_type(p));
    return name + "(" + join(erased, ",") + ")";
}

std::string ClassInfo::simple_name() const { return simple_of(name); }

std::string ClassInfo::package_name() const
{
    auto dot = name.rfind('.');
    return dot == std::string::npos ? std::string() : name.substr(0, dot);
}

const AttributeInfo *ClassInfo::find_attribute(std::string_view attr) const
{
    for (const auto &a : attributes) {
        if (a.name == attr)
            return &a;
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// SystemModel queries

const ClassInfo *SystemModel::find(std::string_view name) const
{
    auto it = classes_.find(name);
    return it == classes_.end() ? nullptr : &it->second;
}

const ClassInfo &SystemModel::get(std::string_view name) const
{
    const ClassInfo *c = find(name);
    if (c == nullptr)
        throw UnknownClass(std::string(name));
    return *c;
}

bool SystemModel::is_system(std::string_view name) const
{
    const ClassInfo *c = find(name);
    return c != nullptr && !c->is_external;
}

std::vector<std::string> SystemModel::all_classes() const
{
    std::vector<std::string> out;
    out.reserve(classes_.size());
    for (const auto &[name, _] : classes_)
        out.push_back(name);
    return out;
}

const SystemModel::Relations &SystemModel::rel(std::string_view c) const
{
    auto it = relations_.find(c);
    if (it == relations_.end())
        throw UnknownClass(std::string(c));
    return it->second;
}

std::optional<std::string> SystemModel::resolve_type(std::string_view type_ref, std::string_view context) const
{
    std::string erased = erase_type(type_ref);
    if (erased.empty() || erased == "?" || is_primitive_type(erased))
        return std::nullopt;
    if (classes_.count(erased) != 0)
        return erased;

    std::string simple = simple_of(erased);
    std::vector<std::string> candidates;
    auto [lo, hi] = by_simple_name_.equal_range(simple);
    for (auto it = lo; it != hi; ++it) {
        const std::string &full = it->second;
        if (erased.find('.') == std::string::npos ||
            (full.size() > erased.size() && full.compare(full.size() - erased.size(), erased.size(), erased) == 0 &&
             full[full.size() - erased.size() - 1] == '.'))
            candidates.push_back(full);
    }
    if (candidates.empty())
        return std::nullopt;

    std::string context_pkg;
    if (const ClassInfo *ctx = find(context))
        context_pkg = ctx->package_name();
    auto score = [&](const std::string &name) {
        const ClassInfo &ci = classes_.find(name)->second;
        int s = 0;
        if (!ci.is_external)
            s += 2;
        if (ci.package_name() == context_pkg || name.rfind(std::string(context) + ".", 0) == 0)
            s += 1;
        return s;
    };
    std::sort(candidates.begin(), candidates.end(), [&](const std::string &a, const std::string &b) {
        int sa = score(a);
        int sb = score(b);
        return sa != sb ? sa > sb : a < b;
    });
    return candidates.front();
}

std::optional<std::string> SystemModel::resolve_system_type(std::string_view type_ref,
                                                            std::string_view context) const
{
    auto r = resolve_type(type_ref, context);
    if (r && is_system(*r))
        return r;
    return std::nullopt;
}

const std::vector<std::string> &SystemModel::parents(std::string_view c) const { return rel(c).parents; }
const std::vector<std::string> &SystemModel::children(std::string_view c) const { return rel(c).children; }
const std::vector<std::string> &SystemModel::ancestors(std::string_view c) const { return rel(c).ancestors; }
int SystemModel::external_depth(std::string_view c) const { return rel(c).external_depth; }
const std::vector<std::string> &SystemModel::descendants(std::string_view c) const { return rel(c).descendants; }
const std::set<std::string> &SystemModel::used_classes(std::string_view c) const { return rel(c).uses; }
const std::set<std::string> &SystemModel::user_classes(std::string_view c) const { return rel(c).users; }

bool SystemModel::uses(std::string_view c, std::string_view d) const
{
    rel(d);
    return rel(c).uses.count(std::string(d)) != 0;
}

std::optional<std::pair<std::string, const MethodInfo *>>
SystemModel::find_method(std::string_view cls, const Invocation &inv) const
{
    std::vector<std::string> search{std::string(cls)};
    if (relations_.count(cls) != 0) {
        const auto &anc = rel(cls).ancestors;
        search.insert(search.end(), anc.begin(), anc.end());
    }
    for (const auto &name : search) {
        const ClassInfo *ci = find(name);
        if (ci == nullptr)
            continue;
        for (const auto &m : ci->methods) {
            if (m.name != inv.method || m.parameter_types.size() != inv.argument_types.size())
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < m.parameter_types.size() && ok; ++i)
                ok = types_match(inv.argument_types[i], m.parameter_types[i]);
            if (ok)
                return std::make_pair(name, &m);
        }
    }
    return std::nullopt;
}

ResolvedCall SystemModel::resolve_call(std::string_view c, const Invocation &inv) const
{
    ResolvedCall out;
    if (inv.target_class != "?")
        out.receiver = resolve_type(inv.target_class, c);
    if (out.receiver) {
        if (auto found = find_method(*out.receiver, inv)) {
            out.declaring_class = found->first;
            out.key = found->first + "." + found->second->signature();
            return out;
        }
        out.key = *out.receiver + "." + inv.method + "(" + join(inv.argument_types, ",") + ")";
        return out;
    }
    out.key = (inv.target_class == "?" ? std::string("?") : erase_type(inv.target_class)) + "." + inv.method +
              "(" + join(inv.argument_types, ",") + ")";
    return out;
}

std::optional<std::pair<std::string, std::string>> SystemModel::resolve_access(std::string_view c,
                                                                               std::string_view ref) const
{
    auto dot = ref.rfind('.');
    if (dot == std::string_view::npos)
        return std::nullopt;
    auto owner = resolve_type(ref.substr(0, dot), c);
    if (!owner)
        return std::nullopt;
    std::string attr(ref.substr(dot + 1));
    std::vector<std::string> search{*owner};
    if (is_system(*owner)) {
        const auto &anc = rel(*owner).ancestors;
        search.insert(search.end(), anc.begin(), anc.end());
    } else {
        return std::make_pair(*owner, attr);
    }
    for (const auto &name : search) {
        if (get(name).find_attribute(attr) != nullptr)
            return std::make_pair(name, attr);
    }
    return std::nullopt;
}

std::vector<MethodInfo> SystemModel::inherited_methods(std::string_view c) const
{
    const ClassInfo &cls = get(c);
    std::set<std::string> seen;
    for (const auto &m : cls.methods)
        seen.insert(m.signature());
    std::vector<MethodInfo> out;
    for (const auto &a : ancestors(c)) {
        const ClassInfo &anc = get(a);
        for (const auto &m : anc.methods) {
            if (anc.is_constructor(m) || m.visibility == Visibility::Private)
                continue;
            if (!seen.insert(m.signature()).second)
                continue;
            MethodInfo copy = m;
            copy.is_inherited_copy = true;
            out.push_back(std::move(copy));
        }
    }
    return out;
}

std::vector<AttributeInfo> SystemModel::inherited_attributes(std::string_view c) const
{
    const ClassInfo &cls = get(c);
    std::set<std::string> seen;
    for (const auto &a : cls.attributes)
        seen.insert(a.name);
    std::vector<AttributeInfo> out;
    for (const auto &anc_name : ancestors(c)) {
        for (const auto &a : get(anc_name).attributes) {
            if (a.visibility == Visibility::Private)
                continue;
            if (seen.insert(a.name).second)
                out.push_back(a);
        }
    }
    return out;
}

bool SystemModel::overrides(std::string_view c, const MethodInfo &m) const
{
    const ClassInfo &cls = get(c);
    if (cls.is_constructor(m) || m.visibility == Visibility::Private || m.is_static)
        return false;
    const std::string sig = m.signature();
    for (const auto &a : ancestors(c)) {
        for (const auto &am : get(a).methods) {
            if (am.visibility != Visibility::Private && !am.is_static && am.signature() == sig)
                return true;
        }
    }
    return false;
}

std::vector<ClassInfo> SystemModel::facts() const
{
    std::vector<ClassInfo> out;
    for (const auto &name : system_)
        out.push_back(get(name));
    return out;
}

bool SystemModel::operator==(const SystemModel &other) const
{
    return classes_ == other.classes_ && baseline_id_ == other.baseline_id_;
}

// ---------------------------------------------------------------------------
// Construction

SystemModel build_system_model(std::vector<ClassInfo> classes, std::optional<std::string> baseline_id)
{
    SystemModel model;
    model.baseline_id_ = std::move(baseline_id);

    for (auto &c : classes) {
        c.is_external = false;
        for (auto &m : c.methods) {
            std::sort(m.accessed_attributes.begin(), m.accessed_attributes.end());
            m.accessed_attributes.erase(std::unique(m.accessed_attributes.begin(), m.accessed_attributes.end()),
                                        m.accessed_attributes.end());
        }
        std::string name = c.name;
        if (!model.classes_.emplace(name, std::move(c)).second)
            throw DuplicateClass(name);
        model.by_simple_name_.emplace(simple_of(name), name);
        model.system_.push_back(name);
    }
    std::sort(model.system_.begin(), model.system_.end());

    // External stubs for every non-primitive reference that does not resolve
    // to a system class.
    std::vector<std::pair<std::string, std::string>> refs; // (context, ref)
    for (const auto &name : model.system_) {
        const ClassInfo &c = model.get(name);
        for (const auto &s : c.superclasses)
            refs.emplace_back(name, s);
        for (const auto &a : c.attributes)
            refs.emplace_back(name, a.declared_type);
        for (const auto &m : c.methods) {
            for (const auto &p : m.parameter_types)
                refs.emplace_back(name, p);
            for (const auto &inv : m.invocations) {
                if (inv.target_class != "?")
                    refs.emplace_back(name, inv.target_class);
            }
            for (const auto &acc : m.accessed_attributes) {
                auto dot = acc.rfind('.');
                if (dot != std::string::npos)
                    refs.emplace_back(name, acc.substr(0, dot));
            }
        }
    }
    for (const auto &[ctx, ref] : refs) {
        std::string erased = erase_type(ref);
        if (erased.empty() || erased == "?" || is_primitive_type(erased))
            continue;
        if (model.resolve_system_type(erased, ctx))
            continue;
        if (model.classes_.count(erased) != 0)
            continue;
        ClassInfo stub;
        stub.name = erased;
        stub.is_external = true;
        model.classes_.emplace(erased, std::move(stub));
        model.by_simple_name_.emplace(simple_of(erased), erased);
    }

    for (const auto &[name, _] : model.classes_)
        model.relations_[name];

    // Parents and children.
    for (const auto &name : model.system_) {
        auto &r = model.relations_[name];
        for (const auto &s : model.get(name).superclasses) {
            auto resolved = model.resolve_type(s, name);
            if (!resolved || *resolved == name) {
                if (resolved && *resolved == name)
                    throw InheritanceCycle({name, name});
                continue;
            }
            if (std::find(r.parents.begin(), r.parents.end(), *resolved) == r.parents.end())
                r.parents.push_back(*resolved);
        }
    }
    for (const auto &name : model.system_) {
        for (const auto &p : model.relations_[name].parents) {
            if (model.is_system(p))
                model.relations_[p].children.push_back(name);
        }
    }
    for (auto &[_, r] : model.relations_)
        std::sort(r.children.begin(), r.children.end());

    // Cycle detection over system parents.
    {
        enum Color { White, Grey, Black };
        std::map<std::string, Color, std::less<>> color;
        std::vector<std::string> stack;
        std::function<void(const std::string &)> visit = [&](const std::string &n) {
            color[n] = Grey;
            stack.push_back(n);
            for (const auto &p : model.relations_[n].parents) {
                if (!model.is_system(p))
                    continue;
                if (color[p] == Grey) {
                    std::vector<std::string> path(std::find(stack.begin(), stack.end(), p), stack.end());
                    path.push_back(p);
                    throw InheritanceCycle(path);
                }
                if (color[p] == White)
                    visit(p);
            }
            stack.pop_back();
            color[n] = Black;
        };
        for (const auto &name : model.system_) {
            if (color[name] == White)
                visit(name);
        }
    }

    // Ancestors (breadth first, nearest first) and external depth.
    for (const auto &name : model.system_) {
        auto &r = model.relations_[name];
        std::set<std::string> seen{name};
        std::set<std::string> externals;
        std::deque<std::string> queue(r.parents.begin(), r.parents.end());
        while (!queue.empty()) {
            std::string p = queue.front();
            queue.pop_front();
            if (!seen.insert(p).second)
                continue;
            if (!model.is_system(p)) {
                externals.insert(p);
                continue;
            }
            r.ancestors.push_back(p);
            for (const auto &pp : model.relations_[p].parents)
                queue.push_back(pp);
        }
        r.external_depth = static_cast<int>(externals.size());
    }
    for (const auto &name : model.system_) {
        for (const auto &a : model.relations_[name].ancestors)
            model.relations_[a].descendants.push_back(name);
    }
    for (auto &[_, r] : model.relations_)
        std::sort(r.descendants.begin(), r.descendants.end());

    // Use relation.
    for (const auto &name : model.system_) {
        const ClassInfo &c = model.get(name);
        std::set<std::string> used;
        auto add = [&](const std::optional<std::string> &d) {
            if (d && *d != name && model.is_system(*d))
                used.insert(*d);
        };
        for (const auto &a : c.attributes)
            add(model.resolve_type(a.declared_type, name));
        for (const auto &m : c.methods) {
            for (const auto &p : m.parameter_types)
                add(model.resolve_type(p, name));
            for (const auto &inv : m.invocations) {
                ResolvedCall rc = model.resolve_call(name, inv);
                if (rc.receiver && *rc.receiver == name)
                    add(rc.declaring_class);
                else
                    add(rc.receiver);
            }
            for (const auto &acc : m.accessed_attributes) {
                auto dot = acc.rfind('.');
                if (dot == std::string::npos)
                    continue;
                auto owner = model.resolve_type(acc.substr(0, dot), name);
                if (owner && *owner == name) {
                    if (auto res = model.resolve_access(name, acc))
                        add(res->first);
                } else {
                    add(owner);
                }
            }
        }
        model.relations_[name].uses = std::move(used);
    }
    for (const auto &name : model.system_) {
        for (const auto &d : model.relations_[name].uses)
            model.relations_[d].users.insert(name);
    }

    return model;
}

} // namespace metriscope
