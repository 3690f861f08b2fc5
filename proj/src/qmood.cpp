#include "metriscope/qmood.hpp"

#include "metriscope/errors.hpp"

#include <set>
#include <utility>
#include <vector>

namespace metriscope {

namespace {

using P = DesignProperty;

struct Term {
    DesignProperty property;
    double weight;
};

struct IndexFormula {
    const char *name;
    std::vector<Term> terms;
};

const std::vector<IndexFormula> &formulas()
{
    static const std::vector<IndexFormula> table{
        {"Reusability", {{P::Coupling, -0.25}, {P::Cohesion, 0.25}, {P::Messaging, 0.5}, {P::DesignSize, 0.5}}},
        {"Flexibility",
         {{P::Encapsulation, 0.25}, {P::Coupling, -0.25}, {P::Composition, 0.5}, {P::Polymorphism, 0.5}}},
        {"Understandability",
         {{P::Abstraction, -0.33},
          {P::Encapsulation, 0.33},
          {P::Coupling, -0.33},
          {P::Cohesion, 0.33},
          {P::Polymorphism, -0.33},
          {P::Complexity, -0.33},
          {P::DesignSize, -0.33}}},
        {"Functionality",
         {{P::Cohesion, 0.12},
          {P::Polymorphism, 0.22},
          {P::Messaging, 0.22},
          {P::DesignSize, 0.22},
          {P::Hierarchies, 0.22}}},
        {"Extendibility",
         {{P::Abstraction, 0.5}, {P::Coupling, -0.5}, {P::Inheritance, 0.5}, {P::Polymorphism, 0.5}}},
        {"Effectiveness",
         {{P::Abstraction, 0.2},
          {P::Encapsulation, 0.2},
          {P::Composition, 0.2},
          {P::Inheritance, 0.2},
          {P::Polymorphism, 0.2}}},
    };
    return table;
}

std::optional<double> mean(const std::vector<std::optional<double>> &values)
{
    double sum = 0;
    int n = 0;
    for (const auto &v : values) {
        if (v) {
            sum += *v;
            ++n;
        }
    }
    if (n == 0)
        return std::nullopt;
    return sum / n;
}

} // namespace

std::string_view to_string(DesignProperty p)
{
    switch (p) {
    case P::DesignSize:
        return "Design Size";
    case P::Hierarchies:
        return "Hierarchies";
    case P::Abstraction:
        return "Abstraction";
    case P::Encapsulation:
        return "Encapsulation";
    case P::Coupling:
        return "Coupling";
    case P::Cohesion:
        return "Cohesion";
    case P::Composition:
        return "Composition";
    case P::Inheritance:
        return "Inheritance";
    case P::Polymorphism:
        return "Polymorphism";
    case P::Messaging:
        return "Messaging";
    case P::Complexity:
        return "Complexity";
    }
    return "";
}

const std::array<DesignProperty, kDesignPropertyCount> &all_design_properties()
{
    static const std::array<DesignProperty, kDesignPropertyCount> all{
        P::DesignSize,  P::Hierarchies, P::Abstraction,  P::Encapsulation, P::Coupling,   P::Cohesion,
        P::Composition, P::Inheritance, P::Polymorphism, P::Messaging,     P::Complexity,
    };
    return all;
}

QmoodClassMetrics qmood_class_metrics(const SystemModel &model, std::string_view c)
{
    const ClassInfo &cls = model.get(c);
    QmoodClassMetrics r;

    if (!cls.attributes.empty()) {
        int hidden = 0;
        for (const auto &a : cls.attributes) {
            if (a.visibility == Visibility::Private || a.visibility == Visibility::Protected)
                ++hidden;
        }
        r.dam = static_cast<double>(hidden) / static_cast<double>(cls.attributes.size());
    }

    std::set<std::string> related;
    for (const auto &a : cls.attributes) {
        if (auto t = model.resolve_system_type(a.declared_type, c)) {
            ++r.moa;
            related.insert(*t);
        }
    }
    for (const auto &m : cls.methods) {
        for (const auto &p : m.parameter_types) {
            if (auto t = model.resolve_system_type(p, c))
                related.insert(*t);
        }
    }
    related.erase(cls.name);
    r.dcc = static_cast<int>(related.size());

    std::set<std::string> all_params;
    std::size_t per_method_sum = 0;
    int methods_for_cam = 0;
    for (const auto &m : cls.methods) {
        bool ctor = cls.is_constructor(m);
        if (m.visibility == Visibility::Public)
            ++r.cis;
        if (ctor)
            continue;
        ++r.nom;
        ++methods_for_cam;
        if (m.is_abstract)
            ++r.nop;
        std::set<std::string> params;
        for (const auto &p : m.parameter_types)
            params.insert(erase_type(p));
        per_method_sum += params.size();
        all_params.insert(params.begin(), params.end());
    }
    if (!all_params.empty() && methods_for_cam > 0)
        r.cam = static_cast<double>(per_method_sum) / (static_cast<double>(methods_for_cam) * all_params.size());

    std::size_t inherited = model.inherited_methods(c).size();
    if (inherited + r.nom > 0)
        r.mfa = static_cast<double>(inherited) / static_cast<double>(inherited + r.nom);
    return r;
}

QmoodSystemMetrics qmood_system_metrics(const SystemModel &model)
{
    const auto &classes = model.system_classes();
    if (classes.empty())
        throw EmptyModel();
    QmoodSystemMetrics s;
    s.dsc = static_cast<int>(classes.size());
    double ancestors = 0;
    for (const auto &c : classes) {
        bool root = model.ancestors(c).empty();
        if (root && !model.descendants(c).empty())
            ++s.noh;
        ancestors += static_cast<double>(model.ancestors(c).size());
    }
    s.ana = ancestors / static_cast<double>(classes.size());
    return s;
}

PropertyVector property_vector(const SystemModel &model)
{
    QmoodSystemMetrics sys = qmood_system_metrics(model);
    std::vector<std::optional<double>> dam, dcc, cam, moa, mfa, nop, cis, nom;
    for (const auto &c : model.system_classes()) {
        QmoodClassMetrics m = qmood_class_metrics(model, c);
        dam.push_back(m.dam);
        dcc.emplace_back(m.dcc);
        cam.push_back(m.cam);
        moa.emplace_back(m.moa);
        mfa.push_back(m.mfa);
        nop.emplace_back(m.nop);
        cis.emplace_back(m.cis);
        nom.emplace_back(m.nom);
    }
    PropertyVector p;
    p[P::DesignSize] = sys.dsc;
    p[P::Hierarchies] = sys.noh;
    p[P::Abstraction] = sys.ana;
    p[P::Encapsulation] = mean(dam);
    p[P::Coupling] = mean(dcc);
    p[P::Cohesion] = mean(cam);
    p[P::Composition] = mean(moa);
    p[P::Inheritance] = mean(mfa);
    p[P::Polymorphism] = mean(nop);
    p[P::Messaging] = mean(cis);
    p[P::Complexity] = mean(nom);
    return p;
}

PropertyVector normalize(const PropertyVector &p, const PropertyVector &baseline)
{
    PropertyVector out;
    for (std::size_t i = 0; i < kDesignPropertyCount; ++i) {
        if (p.values[i] && baseline.values[i] && *baseline.values[i] != 0.0)
            out.values[i] = *p.values[i] / *baseline.values[i];
    }
    return out;
}

PropertyVector property_vector(const SystemModel &model, const PropertyVector &baseline)
{
    return normalize(property_vector(model), baseline);
}

QualityIndices quality_indices(const PropertyVector &p)
{
    std::vector<double> values;
    std::string missing;
    for (const auto &f : formulas()) {
        double sum = 0;
        for (const auto &t : f.terms) {
            const auto &v = p[t.property];
            if (!v) {
                if (!missing.empty())
                    missing += "; ";
                missing += std::string(to_string(t.property)) + " blocks " + f.name;
                continue;
            }
            sum += t.weight * *v;
        }
        values.push_back(sum);
    }
    if (!missing.empty())
        throw MissingProperty("undefined design property: " + missing);
    QualityIndices q;
    q.reusability = values[0];
    q.flexibility = values[1];
    q.understandability = values[2];
    q.functionality = values[3];
    q.extendibility = values[4];
    q.effectiveness = values[5];
    q.tqi = q.reusability + q.flexibility + q.understandability + q.functionality + q.extendibility +
            q.effectiveness;
    return q;
}

} // namespace metriscope
