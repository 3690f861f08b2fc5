#include "metriscope/facts_io.hpp"

#include "metriscope/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace metriscope {

using nlohmann::json;

namespace {

class FactsError : public Error {
public:
    explicit FactsError(const std::string &msg) : Error("facts: " + msg) {}
};

template <typename T>
T field(const json &obj, const char *key, T fallback)
{
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null())
        return fallback;
    try {
        return it->get<T>();
    } catch (const json::exception &e) {
        throw FactsError(std::string("field '") + key + "': " + e.what());
    }
}

Visibility parse_visibility(const json &obj)
{
    auto s = field<std::string>(obj, "visibility", "default");
    auto v = visibility_from_string(s);
    if (!v)
        throw FactsError("bad visibility '" + s + "'");
    return *v;
}

ControlFlowGraph parse_cfg(const json &j)
{
    int nodes = field<int>(j, "nodes", 0);
    std::vector<NodeKind> kinds(static_cast<std::size_t>(std::max(nodes, 0)), NodeKind::Plain);
    if (auto it = j.find("kinds"); it != j.end()) {
        if (it->size() != kinds.size())
            throw FactsError("cfg kinds length differs from node count");
        for (std::size_t i = 0; i < kinds.size(); ++i) {
            auto k = node_kind_from_string((*it)[i].get<std::string>());
            if (!k)
                throw FactsError("bad node kind " + (*it)[i].dump());
            kinds[i] = *k;
        }
    } else if (nodes >= 2) {
        kinds.front() = NodeKind::Entry;
        kinds.back() = NodeKind::Exit;
    }
    std::vector<ControlFlowGraph::Edge> edges;
    for (const auto &e : j.value("edges", json::array())) {
        if (!e.is_array() || e.size() != 2)
            throw FactsError("cfg edge must be a [from, to] pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return ControlFlowGraph(std::move(kinds), std::move(edges));
}

json cfg_json(const ControlFlowGraph &g)
{
    json kinds = json::array();
    for (auto k : g.kinds())
        kinds.push_back(std::string(to_string(k)));
    json edges = json::array();
    for (const auto &[f, t] : g.edges())
        edges.push_back({f, t});
    return {{"nodes", g.node_count()}, {"edges", edges}, {"kinds", kinds}};
}

MethodInfo parse_method(const json &j)
{
    MethodInfo m;
    m.name = field<std::string>(j, "name", "");
    if (m.name.empty())
        throw FactsError("method without a name");
    m.parameter_types = field<std::vector<std::string>>(j, "paramTypes", {});
    m.visibility = parse_visibility(j);
    m.is_abstract = field<bool>(j, "abstract", false);
    m.is_static = field<bool>(j, "static", false);
    m.accessed_attributes = field<std::vector<std::string>>(j, "accesses", {});
    std::sort(m.accessed_attributes.begin(), m.accessed_attributes.end());
    m.accessed_attributes.erase(std::unique(m.accessed_attributes.begin(), m.accessed_attributes.end()),
                                m.accessed_attributes.end());
    for (const auto &inv : j.value("invokes", json::array())) {
        std::string target = field<std::string>(inv, "target", "");
        auto parsed = Invocation::parse(target, field<int>(inv, "count", 1));
        if (!parsed)
            throw FactsError("bad invocation target '" + target + "'");
        m.invocations.push_back(std::move(*parsed));
    }
    if (auto it = j.find("cfg"); it != j.end() && !it->is_null())
        m.cfg = parse_cfg(*it);
    if (auto it = j.find("statements"); it != j.end())
        m.statements = it->get<int>();
    if (auto it = j.find("lines"); it != j.end())
        m.lines = it->get<int>();
    if (auto it = j.find("halstead"); it != j.end()) {
        HalsteadCounts h;
        h.distinct_operators = field<int>(*it, "n1", 0);
        h.distinct_operands = field<int>(*it, "n2", 0);
        h.total_operators = field<int>(*it, "N1", 0);
        h.total_operands = field<int>(*it, "N2", 0);
        m.halstead = h;
    }
    return m;
}

ClassInfo parse_class(const json &j)
{
    ClassInfo c;
    c.name = field<std::string>(j, "name", "");
    if (c.name.empty())
        throw FactsError("class without a name");
    auto kind = field<std::string>(j, "kind", "class");
    auto k = class_kind_from_string(kind);
    if (!k)
        throw FactsError("bad class kind '" + kind + "'");
    c.kind = *k;
    c.superclasses = field<std::vector<std::string>>(j, "extends", {});
    c.line_count = field<int>(j, "lines", 0);
    c.comment_lines = field<int>(j, "commentLines", 0);
    for (const auto &a : j.value("attributes", json::array())) {
        AttributeInfo attr;
        attr.name = field<std::string>(a, "name", "");
        attr.declared_type = field<std::string>(a, "type", "");
        attr.visibility = parse_visibility(a);
        attr.is_static = field<bool>(a, "static", false);
        c.attributes.push_back(std::move(attr));
    }
    for (const auto &m : j.value("methods", json::array()))
        c.methods.push_back(parse_method(m));
    if (auto it = j.find("file"); it != j.end())
        c.file = it->get<std::string>();
    c.initializer_statements = field<int>(j, "initializerStatements", 0);
    return c;
}

json method_json(const MethodInfo &m)
{
    json j;
    j["name"] = m.name;
    j["paramTypes"] = m.parameter_types;
    j["visibility"] = std::string(to_string(m.visibility));
    j["abstract"] = m.is_abstract;
    j["static"] = m.is_static;
    j["accesses"] = m.accessed_attributes;
    json inv = json::array();
    for (const auto &i : m.invocations)
        inv.push_back({{"target", i.target()}, {"count", i.multiplicity}});
    j["invokes"] = inv;
    if (m.cfg)
        j["cfg"] = cfg_json(*m.cfg);
    if (m.statements)
        j["statements"] = *m.statements;
    if (m.lines)
        j["lines"] = *m.lines;
    if (m.halstead) {
        j["halstead"] = {{"n1", m.halstead->distinct_operators},
                         {"n2", m.halstead->distinct_operands},
                         {"N1", m.halstead->total_operators},
                         {"N2", m.halstead->total_operands}};
    }
    return j;
}

json class_json(const ClassInfo &c)
{
    json j;
    j["name"] = c.name;
    j["kind"] = std::string(to_string(c.kind));
    j["extends"] = c.superclasses;
    j["lines"] = c.line_count;
    j["commentLines"] = c.comment_lines;
    json attrs = json::array();
    for (const auto &a : c.attributes) {
        attrs.push_back({{"name", a.name},
                         {"type", a.declared_type},
                         {"visibility", std::string(to_string(a.visibility))},
                         {"static", a.is_static}});
    }
    j["attributes"] = attrs;
    json methods = json::array();
    for (const auto &m : c.methods)
        methods.push_back(method_json(m));
    j["methods"] = methods;
    if (c.file)
        j["file"] = *c.file;
    if (c.initializer_statements != 0)
        j["initializerStatements"] = c.initializer_statements;
    return j;
}

std::string slurp(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw NoInput(path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::vector<ClassInfo> facts_from_json(const std::string &text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw FactsError(e.what());
    }
    const json *classes = &doc;
    if (doc.is_object()) {
        auto it = doc.find("classes");
        if (it == doc.end())
            throw FactsError("missing 'classes' array");
        classes = &*it;
    }
    if (!classes->is_array())
        throw FactsError("'classes' must be an array");
    std::vector<ClassInfo> out;
    for (const auto &c : *classes)
        out.push_back(parse_class(c));
    return out;
}

std::vector<ClassInfo> read_facts_file(const std::filesystem::path &path)
{
    return facts_from_json(slurp(path));
}

std::string facts_to_json(const std::vector<ClassInfo> &classes)
{
    std::vector<const ClassInfo *> sorted;
    for (const auto &c : classes) {
        if (!c.is_external)
            sorted.push_back(&c);
    }
    std::sort(sorted.begin(), sorted.end(), [](auto *a, auto *b) { return a->name < b->name; });
    json arr = json::array();
    for (const auto *c : sorted)
        arr.push_back(class_json(*c));
    json doc;
    doc["classes"] = arr;
    return doc.dump(2) + "\n";
}

void write_facts_file(const std::filesystem::path &path, const std::vector<ClassInfo> &classes)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path.string());
    out << facts_to_json(classes);
}

SystemModel load_model(const std::filesystem::path &facts_path)
{
    return build_system_model(read_facts_file(facts_path));
}

} // namespace metriscope
