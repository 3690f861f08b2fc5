#include "metriscope/mood.hpp"

#include "metriscope/coupling.hpp"
#include "metriscope/errors.hpp"

#include <cstdio>

namespace metriscope {

namespace {

std::optional<double> ratio(double num, double den)
{
    if (den <= 0)
        return std::nullopt;
    return num / den;
}

} // namespace

double hidden_fraction(const SystemModel &model, std::string_view declaring_class, Visibility v)
{
    switch (v) {
    case Visibility::Private:
        return 1.0;
    case Visibility::Public:
    case Visibility::Default:
        return 0.0;
    case Visibility::Protected: {
        double others = static_cast<double>(model.total_classes()) - 1.0;
        if (others <= 0)
            return 0.0;
        return (others - static_cast<double>(model.descendants(declaring_class).size())) / others;
    }
    }
    return 0.0;
}

MoodFactors mood(const SystemModel &model)
{
    const auto &classes = model.system_classes();
    if (classes.size() < 2)
        throw DegenerateSystem("MOOD factors need at least two classes");

    double method_hidden = 0, methods = 0;
    double attr_hidden = 0, attrs = 0;
    double inherited_m = 0, available_m = 0;
    double inherited_a = 0, available_a = 0;
    double overriding = 0, potential = 0;

    for (const auto &c : classes) {
        const ClassInfo &cls = model.get(c);
        const double desc = static_cast<double>(model.descendants(c).size());
        double declared = 0;
        double fresh = 0;
        for (const auto &m : cls.methods) {
            if (cls.is_constructor(m))
                continue;
            ++declared;
            method_hidden += hidden_fraction(model, c, m.visibility);
            if (model.overrides(c, m))
                ++overriding;
            else if (m.visibility != Visibility::Private && !m.is_static)
                ++fresh;
        }
        methods += declared;
        potential += fresh * desc;
        for (const auto &a : cls.attributes)
            attr_hidden += hidden_fraction(model, c, a.visibility);
        attrs += static_cast<double>(cls.attributes.size());

        double im = static_cast<double>(model.inherited_methods(c).size());
        inherited_m += im;
        available_m += im + declared;
        double ia = static_cast<double>(model.inherited_attributes(c).size());
        inherited_a += ia;
        available_a += ia + static_cast<double>(cls.attributes.size());
    }

    MoodFactors f;
    f.mhf = ratio(method_hidden, methods);
    f.ahf = ratio(attr_hidden, attrs);
    f.mif = ratio(inherited_m, available_m);
    f.aif = ratio(inherited_a, available_a);
    try {
        f.cf = coupling_factor(model);
    } catch (const DegenerateSystem &) {
        f.cf = std::nullopt;
    }
    f.pf = ratio(overriding, potential);
    return f;
}

std::string format_percent(const std::optional<double> &r)
{
    if (!r)
        return "undefined";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", *r * 100.0);
    return buf;
}

} // namespace metriscope
