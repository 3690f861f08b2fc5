#include "metriscope/report.hpp"

#include "metriscope/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace metriscope {

using nlohmann::json;

double CategoryHistogram::percent(Category c) const
{
    int n = total();
    return n == 0 ? 0.0 : 100.0 * counts[static_cast<std::size_t>(c)] / n;
}

namespace {

constexpr std::array<Category, 4> kCategories{Category::Excellent, Category::Good, Category::Fair, Category::Poor};

json opt(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

std::optional<double> get_opt(const json &j, const char *key)
{
    auto it = j.find(key);
    if (it == j.end() || it->is_null())
        return std::nullopt;
    return it->get<double>();
}

template <typename E, std::size_t N>
E enum_from(const std::array<E, N> &all, const std::string &s, const char *what)
{
    for (E e : all) {
        if (to_string(e) == s)
            return e;
    }
    throw Error(std::string("report: unknown ") + what + " '" + s + "'");
}

constexpr std::array<Quadrant, 4> kQuadrants{Quadrant::I, Quadrant::II, Quadrant::III, Quadrant::IV};
constexpr std::array<Side, 3> kSides{Side::In, Side::Low, Side::High};
constexpr std::array<SigScore, 5> kScores{SigScore::DoublePlus, SigScore::Plus, SigScore::Neutral, SigScore::Minus,
                                          SigScore::DoubleMinus};

json histogram_json(const CategoryHistogram &h)
{
    json counts = json::object();
    json percent = json::object();
    for (auto c : kCategories) {
        counts[std::string(to_string(c))] = h.counts[static_cast<std::size_t>(c)];
        percent[std::string(to_string(c))] = h.percent(c);
    }
    return {{"counts", counts}, {"percent", percent}};
}

CategoryHistogram histogram_from(const json &j)
{
    CategoryHistogram h;
    for (auto c : kCategories)
        h.counts[static_cast<std::size_t>(c)] = j.at("counts").at(std::string(to_string(c))).get<int>();
    return h;
}

json logiscope_json(const LogiscopeValues &v)
{
    json j = json::object();
    for (std::size_t i = 0; i < kMnemonicCount; ++i)
        j[std::string(mnemonic_names()[i])] = opt(v.values[i]);
    return j;
}

LogiscopeValues logiscope_from(const json &j)
{
    LogiscopeValues v;
    for (std::size_t i = 0; i < kMnemonicCount; ++i)
        v.values[i] = get_opt(j, std::string(mnemonic_names()[i]).c_str());
    return v;
}

json class_json(const ClassReport &c)
{
    const ClassMetricsRecord &m = c.metrics;
    json criteria = json::array();
    for (const auto &cr : c.criteria) {
        json cons = json::array();
        for (const auto &[name, st] : cr.constituents)
            cons.push_back({{"mnemonic", name}, {"status", st.status}, {"side", to_string(st.side)}});
        criteria.push_back({{"criterion", to_string(cr.criterion)},
                            {"category", to_string(cr.category)},
                            {"inRange", cr.in_range_count},
                            {"constituents", cons}});
    }
    json recs = json::array();
    for (const auto &r : c.recommendations)
        recs.push_back({{"mnemonic", r.mnemonic}, {"side", to_string(r.side)}, {"advice", r.advice}});
    const QmoodClassMetrics &q = m.qmood;
    return {
        {"name", m.name},
        {"cbo", m.cbo},
        {"rfc", m.rfc},
        {"wmc", m.wmc},
        {"dit", m.dit},
        {"noc", m.noc},
        {"mpc", m.mpc},
        {"dac", m.dac},
        {"lcom", {{"ck", opt(m.lcom_ck)}, {"lh", opt(m.lcom_lh)}, {"hm", opt(m.lcom_hm)}, {"hs", opt(m.lcom_hs)}}},
        {"tcc", opt(m.tcc)},
        {"lcc", opt(m.lcc)},
        {"coh", opt(m.coh)},
        {"similarityCohesion", opt(m.sim_cohesion)},
        {"logiscope", logiscope_json(m.logiscope)},
        {"qmood",
         {{"dam", opt(q.dam)},
          {"dcc", q.dcc},
          {"cam", opt(q.cam)},
          {"moa", q.moa},
          {"mfa", opt(q.mfa)},
          {"nop", q.nop},
          {"cis", q.cis},
          {"nom", q.nom}}},
        {"mi", opt(m.mi)},
        {"criteria", criteria},
        {"points", c.points},
        {"maintainability", to_string(c.maintainability)},
        {"recommendations", recs},
    };
}

ClassReport class_from(const json &j)
{
    ClassReport c;
    ClassMetricsRecord &m = c.metrics;
    m.name = j.at("name").get<std::string>();
    m.cbo = j.at("cbo").get<int>();
    m.rfc = j.at("rfc").get<int>();
    m.wmc = j.at("wmc").get<int>();
    m.dit = j.at("dit").get<int>();
    m.noc = j.at("noc").get<int>();
    m.mpc = j.at("mpc").get<int>();
    m.dac = j.at("dac").get<int>();
    const json &l = j.at("lcom");
    m.lcom_ck = get_opt(l, "ck");
    m.lcom_lh = get_opt(l, "lh");
    m.lcom_hm = get_opt(l, "hm");
    m.lcom_hs = get_opt(l, "hs");
    m.tcc = get_opt(j, "tcc");
    m.lcc = get_opt(j, "lcc");
    m.coh = get_opt(j, "coh");
    m.sim_cohesion = get_opt(j, "similarityCohesion");
    m.logiscope = logiscope_from(j.at("logiscope"));
    const json &q = j.at("qmood");
    m.qmood.dam = get_opt(q, "dam");
    m.qmood.dcc = q.at("dcc").get<int>();
    m.qmood.cam = get_opt(q, "cam");
    m.qmood.moa = q.at("moa").get<int>();
    m.qmood.mfa = get_opt(q, "mfa");
    m.qmood.nop = q.at("nop").get<int>();
    m.qmood.cis = q.at("cis").get<int>();
    m.qmood.nom = q.at("nom").get<int>();
    m.mi = get_opt(j, "mi");

    const json &criteria = j.at("criteria");
    if (criteria.size() != 4)
        throw Error("report: a class needs four criteria");
    for (std::size_t i = 0; i < 4; ++i) {
        const json &cj = criteria[i];
        CriterionResult &cr = c.criteria[i];
        cr.criterion = enum_from(all_criteria(), cj.at("criterion").get<std::string>(), "criterion");
        auto cat = category_from_string(cj.at("category").get<std::string>());
        if (!cat)
            throw Error("report: unknown category");
        cr.category = *cat;
        cr.in_range_count = cj.at("inRange").get<int>();
        for (const auto &k : cj.at("constituents")) {
            MetricStatus st;
            st.status = k.at("status").get<int>();
            st.side = enum_from(kSides, k.at("side").get<std::string>(), "side");
            cr.constituents.emplace_back(k.at("mnemonic").get<std::string>(), st);
        }
    }
    c.points = j.at("points").get<int>();
    auto cat = category_from_string(j.at("maintainability").get<std::string>());
    if (!cat)
        throw Error("report: unknown category");
    c.maintainability = *cat;
    for (const auto &r : j.at("recommendations")) {
        c.recommendations.push_back({r.at("mnemonic").get<std::string>(),
                                     enum_from(kSides, r.at("side").get<std::string>(), "side"),
                                     r.at("advice").get<std::string>()});
    }
    return c;
}

json score_json(const std::optional<SigScore> &s) { return s ? json(std::string(to_string(*s))) : json(nullptr); }

std::optional<SigScore> score_from(const json &j, const char *key)
{
    auto it = j.find(key);
    if (it == j.end() || it->is_null())
        return std::nullopt;
    return enum_from(kScores, it->get<std::string>(), "SIG score");
}

json system_json(const SystemSection &s)
{
    json j = json::object();
    if (s.qmood)
        j["qmood"] = {{"dsc", s.qmood->dsc}, {"noh", s.qmood->noh}, {"ana", s.qmood->ana}};
    json props = json::object();
    for (auto p : all_design_properties())
        props[std::string(to_string(p))] = opt(s.properties[p]);
    j["designProperties"] = props;
    j["propertiesNormalized"] = s.properties_normalized;
    if (s.indices) {
        const QualityIndices &q = *s.indices;
        j["qualityIndices"] = {{"reusability", q.reusability},       {"flexibility", q.flexibility},
                               {"understandability", q.understandability}, {"functionality", q.functionality},
                               {"extendibility", q.extendibility},   {"effectiveness", q.effectiveness},
                               {"tqi", q.tqi}};
    }
    j["qualityIndicesNote"] = s.indices_note;
    if (s.mood) {
        const MoodFactors &m = *s.mood;
        j["mood"] = {{"mhf", opt(m.mhf)}, {"ahf", opt(m.ahf)}, {"mif", opt(m.mif)},
                     {"aif", opt(m.aif)}, {"cf", opt(m.cf)},   {"pf", opt(m.pf)}};
    }
    if (s.sig) {
        const SigRating &r = *s.sig;
        j["sig"] = {{"volume", score_json(r.volume)},
                    {"complexity", score_json(r.complexity)},
                    {"duplication", score_json(r.duplication)},
                    {"unitSize", score_json(r.unit_size)},
                    {"unitTesting", SigRating::unit_testing},
                    {"overall", score_json(r.overall)},
                    {"duplicationPercent", opt(r.duplication_percent)},
                    {"totalLoc", r.total_loc}};
    }
    j["meanMi"] = opt(s.mean_mi);
    return j;
}

SystemSection system_from(const json &j)
{
    SystemSection s;
    if (j.contains("qmood")) {
        const json &q = j.at("qmood");
        s.qmood = QmoodSystemMetrics{q.at("dsc").get<int>(), q.at("noh").get<int>(), q.at("ana").get<double>()};
    }
    for (auto p : all_design_properties())
        s.properties[p] = get_opt(j.at("designProperties"), std::string(to_string(p)).c_str());
    s.properties_normalized = j.at("propertiesNormalized").get<bool>();
    if (j.contains("qualityIndices")) {
        const json &q = j.at("qualityIndices");
        QualityIndices x;
        x.reusability = q.at("reusability").get<double>();
        x.flexibility = q.at("flexibility").get<double>();
        x.understandability = q.at("understandability").get<double>();
        x.functionality = q.at("functionality").get<double>();
        x.extendibility = q.at("extendibility").get<double>();
        x.effectiveness = q.at("effectiveness").get<double>();
        x.tqi = q.at("tqi").get<double>();
        s.indices = x;
    }
    s.indices_note = j.value("qualityIndicesNote", "");
    if (j.contains("mood")) {
        const json &m = j.at("mood");
        s.mood = MoodFactors{get_opt(m, "mhf"), get_opt(m, "ahf"), get_opt(m, "mif"),
                             get_opt(m, "aif"), get_opt(m, "cf"),  get_opt(m, "pf")};
    }
    if (j.contains("sig")) {
        const json &r = j.at("sig");
        SigRating x;
        x.volume = score_from(r, "volume");
        x.complexity = score_from(r, "complexity");
        x.duplication = score_from(r, "duplication");
        x.unit_size = score_from(r, "unitSize");
        x.overall = score_from(r, "overall");
        x.duplication_percent = get_opt(r, "duplicationPercent");
        x.total_loc = r.at("totalLoc").get<double>();
        s.sig = x;
    }
    s.mean_mi = get_opt(j, "meanMi");
    return s;
}

std::string fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string fixed(const std::optional<double> &v, int digits) { return v ? fixed(*v, digits) : "n/a"; }

} // namespace

std::string report_to_json(const QualityReport &r)
{
    json j;
    j["schemaVersion"] = r.schema_version;
    j["tool"] = r.tool;
    j["configFingerprint"] = r.config_fingerprint;
    j["partial"] = r.partial;
    json errors = json::array();
    for (const auto &e : r.parse_errors)
        errors.push_back({{"path", e.path}, {"message", e.message}});
    j["parseErrors"] = errors;

    json classes = json::array();
    for (const auto &c : r.classes)
        classes.push_back(class_json(c));
    j["classes"] = classes;

    json methods = json::array();
    for (const auto &m : r.methods) {
        methods.push_back({{"class", m.class_name},
                           {"signature", m.signature},
                           {"v", m.complexity.v},
                           {"ev", m.complexity.ev},
                           {"iv", m.complexity.iv},
                           {"quadrant", to_string(m.quadrant)}});
    }
    j["methods"] = methods;

    json crit = json::object();
    for (auto c : all_criteria())
        crit[std::string(to_string(c))] = histogram_json(r.criteria[static_cast<std::size_t>(c)]);
    j["histograms"] = {{"maintainability", histogram_json(r.maintainability)}, {"criteria", crit}};
    j["system"] = system_json(r.system);

    if (r.evolution) {
        json rows = json::array();
        for (const auto &row : r.evolution->rows)
            rows.push_back({{"name", row.name}, {"enom", row.enom}, {"lenom", row.lenom}, {"eenom", row.eenom}});
        j["evolution"] = {{"versions", r.evolution->versions}, {"classes", rows}};
    }
    return j.dump(2) + "\n";
}

QualityReport report_from_json(const std::string &text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw Error(std::string("report: ") + e.what());
    }
    try {
        QualityReport r;
        r.schema_version = j.at("schemaVersion").get<int>();
        if (r.schema_version != kReportSchemaVersion)
            throw Error("report: unsupported schemaVersion " + std::to_string(r.schema_version));
        r.tool = j.at("tool").get<std::string>();
        r.config_fingerprint = j.at("configFingerprint").get<std::string>();
        r.partial = j.at("partial").get<bool>();
        for (const auto &e : j.at("parseErrors"))
            r.parse_errors.push_back({e.at("path").get<std::string>(), e.at("message").get<std::string>()});
        for (const auto &c : j.at("classes"))
            r.classes.push_back(class_from(c));
        for (const auto &m : j.at("methods")) {
            MethodRecord rec;
            rec.class_name = m.at("class").get<std::string>();
            rec.signature = m.at("signature").get<std::string>();
            rec.complexity = {m.at("v").get<int>(), m.at("ev").get<int>(), m.at("iv").get<int>()};
            rec.quadrant = enum_from(kQuadrants, m.at("quadrant").get<std::string>(), "quadrant");
            r.methods.push_back(std::move(rec));
        }
        const json &h = j.at("histograms");
        r.maintainability = histogram_from(h.at("maintainability"));
        for (auto c : all_criteria())
            r.criteria[static_cast<std::size_t>(c)] = histogram_from(h.at("criteria").at(std::string(to_string(c))));
        r.system = system_from(j.at("system"));
        if (j.contains("evolution")) {
            EvolutionSection e;
            e.versions = j.at("evolution").at("versions").get<std::vector<std::string>>();
            for (const auto &row : j.at("evolution").at("classes")) {
                e.rows.push_back({row.at("name").get<std::string>(), row.at("enom").get<int>(),
                                  row.at("lenom").get<double>(), row.at("eenom").get<double>()});
            }
            r.evolution = std::move(e);
        }
        return r;
    } catch (const json::exception &e) {
        throw Error(std::string("report: ") + e.what());
    }
}

std::string report_to_text(const QualityReport &r)
{
    std::ostringstream out;
    out << r.tool << " (config " << r.config_fingerprint << ")\n";
    if (r.partial)
        out << "PARTIAL: " << r.parse_errors.size() << " file(s) failed to parse\n";
    for (const auto &e : r.parse_errors)
        out << "  " << e.path << ": " << e.message << "\n";

    char line[256];
    out << "\nClasses\n";
    std::snprintf(line, sizeof line, "  %-40s %5s %5s %5s %5s %5s %8s  %s\n", "name", "WMC", "CBO", "RFC", "DIT",
                  "NOC", "LCOM-HS", "maintainability");
    out << line;
    for (const auto &c : r.classes) {
        const auto &m = c.metrics;
        std::snprintf(line, sizeof line, "  %-40s %5d %5d %5d %5d %5d %8s  %s\n", m.name.c_str(), m.wmc, m.cbo,
                      m.rfc, m.dit, m.noc, fixed(m.lcom_hs, 2).c_str(), std::string(to_string(c.maintainability)).c_str());
        out << line;
        for (const auto &rec : c.recommendations)
            out << "      " << rec.mnemonic << " " << to_string(rec.side) << ": " << rec.advice << "\n";
    }

    auto histogram = [&](std::string_view title, const CategoryHistogram &h) {
        out << "  " << title << ":";
        for (auto c : kCategories)
            out << " " << to_string(c) << " " << h.counts[static_cast<std::size_t>(c)] << " ("
                << fixed(h.percent(c), 1) << "%)";
        out << "\n";
    };
    out << "\nCategories\n";
    histogram("Maintainability", r.maintainability);
    for (auto c : all_criteria())
        histogram(to_string(c), r.criteria[static_cast<std::size_t>(c)]);

    std::array<int, 4> quadrants{};
    for (const auto &m : r.methods)
        ++quadrants[static_cast<std::size_t>(m.quadrant)];
    out << "\nMethods: " << r.methods.size() << " (quadrant I " << quadrants[0] << ", II " << quadrants[1]
        << ", III " << quadrants[2] << ", IV " << quadrants[3] << ")\n";

    const SystemSection &s = r.system;
    out << "\nSystem\n";
    if (s.qmood)
        out << "  DSC " << s.qmood->dsc << "  NOH " << s.qmood->noh << "  ANA " << fixed(s.qmood->ana, 2) << "\n";
    if (s.indices) {
        const auto &q = *s.indices;
        out << "  Reusability " << fixed(q.reusability, 3) << "  Flexibility " << fixed(q.flexibility, 3)
            << "  Understandability " << fixed(q.understandability, 3) << "\n  Functionality "
            << fixed(q.functionality, 3) << "  Extendibility " << fixed(q.extendibility, 3) << "  Effectiveness "
            << fixed(q.effectiveness, 3) << "  TQI " << fixed(q.tqi, 3)
            << (s.properties_normalized ? "" : "  (raw properties)") << "\n";
    } else if (!s.indices_note.empty()) {
        out << "  quality indices: " << s.indices_note << "\n";
    }
    if (s.mood) {
        const auto &m = *s.mood;
        out << "  MHF " << format_percent(m.mhf) << "  AHF " << format_percent(m.ahf) << "  MIF "
            << format_percent(m.mif) << "  AIF " << format_percent(m.aif) << "  CF " << format_percent(m.cf)
            << "  PF " << format_percent(m.pf) << "\n";
    }
    if (s.sig) {
        auto score = [](const std::optional<SigScore> &x) { return x ? std::string(to_string(*x)) : "n/a"; };
        out << "  SIG volume " << score(s.sig->volume) << "  complexity " << score(s.sig->complexity)
            << "  duplication " << score(s.sig->duplication) << "  unit size " << score(s.sig->unit_size)
            << "  unit testing " << SigRating::unit_testing << "  overall " << score(s.sig->overall) << "\n";
    }
    out << "  mean MI " << fixed(s.mean_mi, 2) << "\n";

    if (r.evolution) {
        out << "\nEvolution over " << r.evolution->versions.size() << " versions\n";
        std::snprintf(line, sizeof line, "  %-40s %6s %8s %8s\n", "class", "ENOM", "LENOM", "EENOM");
        out << line;
        for (const auto &row : r.evolution->rows) {
            std::snprintf(line, sizeof line, "  %-40s %6d %8.3f %8.1f\n", row.name.c_str(), row.enom, row.lenom,
                          row.eenom);
            out << line;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Charts

namespace {

// Axis length: the largest finite landmark, so rings and value fit.
double axis_scale(const KiviatRow &row)
{
    double hi = 0;
    for (double x : {row.range.min, row.range.max, row.value.value_or(0.0)}) {
        if (std::isfinite(x))
            hi = std::max(hi, std::fabs(x));
    }
    if (!std::isfinite(row.range.max))
        hi *= 1.25; // leave room beyond the last landmark for an open ring
    return hi > 0 ? hi : 1.0;
}

double radius_of(double x, double scale, double r)
{
    if (!std::isfinite(x))
        return x > 0 ? r : 0.0;
    return std::clamp(x / scale, 0.0, 1.0) * r;
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string kiviat_svg(const std::vector<KiviatRow> &rows, const std::string &class_name)
{
    if (rows.size() != kMnemonicCount)
        throw WrongAxisCount(rows.size());
    const double cx = 300, cy = 300, r = 200;
    const double pi = std::acos(-1.0);
    auto point = [&](std::size_t i, double radius) {
        double angle = -pi / 2 + 2 * pi * static_cast<double>(i) / static_cast<double>(rows.size());
        return std::make_pair(cx + radius * std::cos(angle), cy + radius * std::sin(angle));
    };
    auto polygon = [&](const std::vector<double> &radii, const std::string &cls) {
        std::string pts;
        for (std::size_t i = 0; i < radii.size(); ++i) {
            auto [x, y] = point(i, radii[i]);
            pts += (i ? " " : "") + num(x) + "," + num(y);
        }
        return "  <polygon class=\"" + cls + "\" points=\"" + pts + "\"/>\n";
    };

    std::vector<double> min_ring, max_ring, values;
    for (const auto &row : rows) {
        double s = axis_scale(row);
        min_ring.push_back(radius_of(row.range.min, s, r));
        max_ring.push_back(radius_of(row.range.max, s, r));
        values.push_back(row.value ? radius_of(*row.value, s, r) : 0.0);
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"640\" viewBox=\"0 0 600 640\">\n";
    svg << "  <style>.axis{stroke:#999;stroke-width:1}.min-ring{fill:none;stroke:#2a7;stroke-dasharray:4 3}"
           ".max-ring{fill:none;stroke:#c33;stroke-dasharray:4 3}.value{fill:#36c;fill-opacity:0.25;stroke:#36c}"
           ".violation{fill:#c33}.label{font:11px sans-serif}</style>\n";
    svg << "  <title>" << class_name << "</title>\n";
    svg << "  <text class=\"label\" x=\"300\" y=\"620\" text-anchor=\"middle\">" << class_name << "</text>\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto [x, y] = point(i, r);
        svg << "  <line class=\"axis\" x1=\"" << num(cx) << "\" y1=\"" << num(cy) << "\" x2=\"" << num(x)
            << "\" y2=\"" << num(y) << "\"/>\n";
        auto [lx, ly] = point(i, r + 24);
        svg << "  <text class=\"label\" x=\"" << num(lx) << "\" y=\"" << num(ly) << "\" text-anchor=\"middle\">"
            << rows[i].mnemonic << "</text>\n";
    }
    svg << polygon(min_ring, "min-ring") << polygon(max_ring, "max-ring") << polygon(values, "value");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].status.status == 0)
            continue;
        auto [x, y] = point(i, values[i]);
        svg << "  <circle class=\"violation\" data-metric=\"" << rows[i].mnemonic << "\" cx=\"" << num(x)
            << "\" cy=\"" << num(y) << "\" r=\"5\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

ScatterResult scatter(const std::vector<MethodRecord> &methods)
{
    ScatterResult out;
    std::ostringstream csv;
    csv << "method,class,v,ev,quadrant\n";
    auto quote = [](const std::string &s) {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string q = "\"";
        for (char c : s)
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    for (const auto &m : methods) {
        csv << quote(m.signature) << ',' << quote(m.class_name) << ',' << m.complexity.v << ',' << m.complexity.ev
            << ',' << to_string(m.quadrant) << '\n';
        ++out.quadrant_counts[static_cast<std::size_t>(m.quadrant)];
    }
    out.csv = csv.str();
    return out;
}

} // namespace metriscope
