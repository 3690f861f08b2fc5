#include "metriscope/class_metrics.hpp"

#include "metriscope/cohesion.hpp"
#include "metriscope/complexity.hpp"
#include "metriscope/coupling.hpp"
#include "metriscope/errors.hpp"
#include "metriscope/maintainability.hpp"

#include <algorithm>

namespace metriscope {

namespace {

template <typename F>
std::optional<double> defined_or_empty(F &&f)
{
    try {
        return f();
    } catch (const Undefined &) {
        return std::nullopt;
    }
}

} // namespace

const std::array<std::string_view, kMnemonicCount> &mnemonic_names()
{
    static const std::array<std::string_view, kMnemonicCount> names{
        "cl_comf", "cl_comm",   "cl_data",    "cl_data_publ", "cl_func",  "cl_func_publ", "cl_line",
        "cl_stat", "cl_wmc",    "cu_cdused",  "cu_cdusers",   "in_bases", "in_noc",
    };
    return names;
}

std::size_t mnemonic_index(std::string_view mnemonic)
{
    const auto &names = mnemonic_names();
    auto it = std::find(names.begin(), names.end(), mnemonic);
    if (it == names.end())
        throw UnknownMnemonic(std::string(mnemonic));
    return static_cast<std::size_t>(it - names.begin());
}

int method_statements(const MethodInfo &m)
{
    if (m.statements)
        return *m.statements;
    if (m.cfg)
        return std::max(0, m.cfg->node_count() - 2);
    return 0;
}

LogiscopeValues logiscope_mnemonics(const SystemModel &model, std::string_view c)
{
    const ClassInfo &cls = model.get(c);
    LogiscopeValues v;
    if (cls.line_count > 0)
        v.set("cl_comf", static_cast<double>(cls.comment_lines) / cls.line_count);
    v.set("cl_comm", cls.comment_lines);
    v.set("cl_line", cls.line_count);

    int data_publ = 0;
    for (const auto &a : cls.attributes)
        data_publ += a.visibility == Visibility::Public ? 1 : 0;
    v.set("cl_data", static_cast<double>(cls.attributes.size()));
    v.set("cl_data_publ", data_publ);

    int func_publ = 0;
    int stat = cls.initializer_statements;
    for (const auto &m : cls.methods) {
        func_publ += m.visibility == Visibility::Public ? 1 : 0;
        stat += method_statements(m);
    }
    v.set("cl_func", static_cast<double>(cls.methods.size()));
    v.set("cl_func_publ", func_publ);
    v.set("cl_stat", stat);
    v.set("cl_wmc", class_wmc(cls));
    v.set("cu_cdused", static_cast<double>(model.used_classes(c).size()));
    v.set("cu_cdusers", static_cast<double>(model.user_classes(c).size()));
    v.set("in_bases", static_cast<double>(model.ancestors(c).size()) + model.external_depth(c));
    v.set("in_noc", static_cast<double>(model.children(c).size()));
    return v;
}

ClassMetricsRecord class_metrics(const SystemModel &model, std::string_view c)
{
    const ClassInfo &cls = model.get(c);
    ClassMetricsRecord r;
    r.name = cls.name;
    r.cbo = cbo(model, c);
    r.rfc = rfc(model, c);
    r.wmc = class_wmc(cls);
    r.dit = dit(model, c);
    r.noc = noc(model, c);
    r.mpc = mpc(model, c);
    r.dac = dac(model, c);

    CohesionGraph g = cohesion_graph(model, c);
    r.lcom_ck = defined_or_empty([&] { return lcom(g, LcomVariant::CK); });
    r.lcom_lh = defined_or_empty([&] { return lcom(g, LcomVariant::LH); });
    r.lcom_hm = defined_or_empty([&] { return lcom(g, LcomVariant::HM); });
    r.lcom_hs = defined_or_empty([&] { return lcom(g, LcomVariant::HS); });
    r.coh = defined_or_empty([&] { return coh(g); });
    if (g.method_count() >= 2) {
        TccLcc t = tcc_lcc(g);
        r.tcc = t.tcc;
        r.lcc = t.lcc;
        r.sim_cohesion = similarity_cohesion(g);
    }

    r.logiscope = logiscope_mnemonics(model, c);
    r.qmood = qmood_class_metrics(model, c);
    r.mi = class_maintainability_index(cls);
    return r;
}

} // namespace metriscope
