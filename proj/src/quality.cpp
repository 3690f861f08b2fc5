#include "metriscope/quality.hpp"

#include "metriscope/errors.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <fstream>
#include <sstream>

namespace metriscope {

namespace {

namespace pt = boost::property_tree;

constexpr double kInf = std::numeric_limits<double>::infinity();

// The INI parser drops line numbers once parsing succeeds, so value errors
// look the key up again in the raw text.
int line_of(const std::string &text, const std::string &section, const std::string &key)
{
    std::istringstream in(text);
    std::string line;
    std::string current;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        std::string t = boost::trim_copy(line);
        if (t.size() > 2 && t.front() == '[' && t.back() == ']') {
            current = boost::trim_copy(t.substr(1, t.size() - 2));
            continue;
        }
        auto eq = t.find('=');
        if (eq != std::string::npos && current == section && boost::trim_copy(t.substr(0, eq)) == key)
            return n;
    }
    return 0;
}

double parse_bound(const std::string &s)
{
    std::string t = boost::to_lower_copy(boost::trim_copy(s));
    if (t == "inf" || t == "+inf")
        return kInf;
    if (t == "-inf")
        return -kInf;
    std::size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size())
        throw std::invalid_argument(s);
    return v;
}

std::vector<double> parse_list(const std::string &s)
{
    std::vector<std::string> parts;
    boost::split(parts, s, boost::is_any_of(","));
    std::vector<double> out;
    for (const auto &p : parts)
        out.push_back(parse_bound(p));
    return out;
}

template <std::size_t N, typename T>
void assign_array(std::array<T, N> &target, const std::vector<double> &values)
{
    if (values.size() != N)
        throw std::invalid_argument("expected " + std::to_string(N) + " values");
    for (std::size_t i = 0; i < N; ++i)
        target[i] = static_cast<T>(values[i]);
}

int as_int(const std::string &s)
{
    double v = parse_bound(s);
    if (v != static_cast<int>(v))
        throw std::invalid_argument("expected an integer");
    return static_cast<int>(v);
}

std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

RangeTable RangeTable::defaults()
{
    RangeTable t;
    t.ranges = {
        {"cl_comf", {0.2, kInf}},    {"cl_comm", {-kInf, kInf}},   {"cl_data", {0, 7}},
        {"cl_data_publ", {0, 0}},    {"cl_func", {0, 25}},         {"cl_func_publ", {0, 15}},
        {"cl_line", {-kInf, kInf}},  {"cl_stat", {0, 100}},        {"cl_wmc", {0, 60}},
        {"cu_cdused", {0, 10}},      {"cu_cdusers", {0, 5}},       {"in_bases", {0, 3}},
        {"in_noc", {0, 3}},
    };
    return t;
}

const Range &RangeTable::range(std::string_view mnemonic) const
{
    auto it = ranges.find(mnemonic);
    if (it == ranges.end())
        throw UnknownMnemonic(std::string(mnemonic));
    return it->second;
}

Config parse_config(const std::string &text)
{
    pt::ptree tree;
    try {
        std::istringstream in(text);
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error &e) {
        throw ConfigError(static_cast<int>(e.line()), e.message());
    }

    Config cfg;
    for (const auto &[section, body] : tree) {
        if (body.empty() && !body.data().empty())
            throw ConfigError(line_of(text, "", section), "key outside any section: " + section);
        for (const auto &[key, node] : body) {
            const std::string value = node.data();
            auto fail = [&](const std::string &why) -> ConfigError {
                return ConfigError(line_of(text, section, key), section + "." + key + ": " + why);
            };
            try {
                if (section == "ranges") {
                    mnemonic_index(key);
                    auto v = parse_list(value);
                    if (v.size() != 2)
                        throw fail("expected 'min, max'");
                    if (v[0] > v[1])
                        throw fail("min exceeds max");
                    cfg.ranges.ranges[key] = Range{v[0], v[1]};
                } else if (section == "class-thresholds") {
                    auto &t = cfg.ranges.class_thresholds;
                    int v = as_int(value);
                    if (key == "cbo")
                        t.cbo = v;
                    else if (key == "wmc")
                        t.wmc = v;
                    else if (key == "rfc")
                        t.rfc = v;
                    else if (key == "dit")
                        t.dit = v;
                    else if (key == "noc")
                        t.noc = v;
                    else
                        throw fail("unknown key");
                } else if (section == "method-thresholds") {
                    auto &t = cfg.ranges.method_thresholds;
                    int v = as_int(value);
                    if (key == "v")
                        t.v = v;
                    else if (key == "ev")
                        t.ev = v;
                    else if (key == "iv")
                        t.iv = v;
                    else
                        throw fail("unknown key");
                } else if (section == "sig") {
                    auto &s = cfg.sig;
                    if (key == "volume_kloc")
                        assign_array(s.volume_kloc, parse_list(value));
                    else if (key == "complexity_risk")
                        assign_array(s.complexity_risk, parse_list(value));
                    else if (key == "unit_size_risk")
                        assign_array(s.unit_size_risk, parse_list(value));
                    else if (key == "duplication_percent")
                        assign_array(s.duplication_percent, parse_list(value));
                    else if (key == "duplication_block")
                        s.duplication_block = as_int(value);
                    else if (key.rfind("risk_profile_", 0) == 0 && key.size() == 14 && key[13] >= '0' &&
                             key[13] <= '3')
                        assign_array(s.risk_profile[key[13] - '0'], parse_list(value));
                    else
                        throw fail("unknown key");
                } else if (section == "mi") {
                    if (key != "log_base")
                        throw fail("unknown key");
                    if (value == "2")
                        cfg.mi_log_base = LogBase::Two;
                    else if (value == "e")
                        cfg.mi_log_base = LogBase::Natural;
                    else
                        throw fail("log_base must be 2 or e");
                } else if (section == "evolution") {
                    if (key != "metrics")
                        throw fail("unknown key");
                    std::vector<std::string> names;
                    boost::split(names, value, boost::is_any_of(","));
                    cfg.evolution_metrics.clear();
                    for (auto &n : names) {
                        boost::trim(n);
                        mnemonic_index(n);
                        cfg.evolution_metrics.push_back(n);
                    }
                } else if (section == "qmood") {
                    if (key != "baseline")
                        throw fail("unknown key");
                    cfg.qmood_baseline = value;
                } else {
                    throw fail("unknown section");
                }
            } catch (const ConfigError &) {
                throw;
            } catch (const UnknownMnemonic &e) {
                throw fail(e.what());
            } catch (const std::exception &e) {
                throw fail(std::string("bad value '") + value + "'");
            }
        }
    }
    return cfg;
}

Config load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(0, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_fingerprint(const Config &c)
{
    std::ostringstream s;
    s.precision(17);
    for (const auto &[k, r] : c.ranges.ranges)
        s << k << '=' << r.min << ',' << r.max << ';';
    const auto &ct = c.ranges.class_thresholds;
    s << ct.cbo << ',' << ct.wmc << ',' << ct.rfc << ',' << ct.dit << ',' << ct.noc << ';';
    const auto &mt = c.ranges.method_thresholds;
    s << mt.v << ',' << mt.ev << ',' << mt.iv << ';';
    for (double v : c.sig.volume_kloc)
        s << v << ',';
    for (int v : c.sig.complexity_risk)
        s << v << ',';
    for (int v : c.sig.unit_size_risk)
        s << v << ',';
    for (const auto &row : c.sig.risk_profile)
        for (double v : row)
            s << v << ',';
    for (double v : c.sig.duplication_percent)
        s << v << ',';
    s << c.sig.duplication_block << ';' << (c.mi_log_base == LogBase::Two ? "2" : "e") << ';';
    for (const auto &m : c.evolution_metrics)
        s << m << ',';
    s << ';' << c.qmood_baseline;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(s.str())));
    return buf;
}

std::string_view to_string(Side s)
{
    switch (s) {
    case Side::In:
        return "IN";
    case Side::Low:
        return "LOW";
    case Side::High:
        return "HIGH";
    }
    return "IN";
}

MetricStatus metric_status(const RangeTable &ranges, std::string_view mnemonic, std::optional<double> value)
{
    const Range &r = ranges.range(mnemonic);
    if (!value || *value < r.min)
        return {-1, Side::Low};
    if (*value > r.max)
        return {-1, Side::High};
    return {0, Side::In};
}

std::string_view to_string(Criterion c)
{
    switch (c) {
    case Criterion::Analyzability:
        return "Analyzability";
    case Criterion::Changeability:
        return "Changeability";
    case Criterion::Stability:
        return "Stability";
    case Criterion::Testability:
        return "Testability";
    }
    return "";
}

std::string_view to_string(Category c)
{
    switch (c) {
    case Category::Excellent:
        return "EXCELLENT";
    case Category::Good:
        return "GOOD";
    case Category::Fair:
        return "FAIR";
    case Category::Poor:
        return "POOR";
    }
    return "";
}

std::optional<Category> category_from_string(std::string_view s)
{
    for (auto c : {Category::Excellent, Category::Good, Category::Fair, Category::Poor}) {
        if (to_string(c) == s)
            return c;
    }
    return std::nullopt;
}

const std::array<Criterion, 4> &all_criteria()
{
    static const std::array<Criterion, 4> all{Criterion::Analyzability, Criterion::Changeability,
                                              Criterion::Stability, Criterion::Testability};
    return all;
}

const std::vector<std::string_view> &criterion_constituents(Criterion c)
{
    static const std::vector<std::string_view> analyzability{"cl_wmc", "cl_comf", "in_bases", "cu_cdused"};
    static const std::vector<std::string_view> changeability{"cl_stat", "cl_func", "cl_data"};
    static const std::vector<std::string_view> stability{"cl_data_publ", "cu_cdusers", "in_noc", "cl_func_publ"};
    static const std::vector<std::string_view> testability{"cl_wmc", "cl_func", "cu_cdused"};
    switch (c) {
    case Criterion::Analyzability:
        return analyzability;
    case Criterion::Changeability:
        return changeability;
    case Criterion::Stability:
        return stability;
    case Criterion::Testability:
        return testability;
    }
    return analyzability;
}

CriterionResult criterion(const RangeTable &ranges, const LogiscopeValues &values, Criterion which)
{
    CriterionResult r;
    r.criterion = which;
    int out = 0;
    for (std::string_view m : criterion_constituents(which)) {
        auto v = values.get(m);
        if (!v && m != "cl_comf")
            throw MissingMetric(std::string(m));
        MetricStatus s = metric_status(ranges, m, v);
        r.constituents.emplace_back(std::string(m), s);
        if (s.status == 0)
            ++r.in_range_count;
        else
            ++out;
    }
    r.category = out == 0 ? Category::Excellent : out == 1 ? Category::Good : out == 2 ? Category::Fair : Category::Poor;
    return r;
}

int category_points(Category c)
{
    switch (c) {
    case Category::Excellent:
        return 3;
    case Category::Good:
        return 2;
    case Category::Fair:
        return 1;
    case Category::Poor:
        return 0;
    }
    return 0;
}

Category maintainability_from_points(int total)
{
    if (total >= 11)
        return Category::Excellent;
    if (total >= 8)
        return Category::Good;
    if (total >= 5)
        return Category::Fair;
    return Category::Poor;
}

Category maintainability(const std::array<CriterionResult, 4> &criteria)
{
    int total = 0;
    for (const auto &c : criteria)
        total += category_points(c.category);
    return maintainability_from_points(total);
}

std::array<CriterionResult, 4> all_criterion_results(const RangeTable &ranges, const LogiscopeValues &values)
{
    std::array<CriterionResult, 4> out;
    for (std::size_t i = 0; i < 4; ++i)
        out[i] = criterion(ranges, values, all_criteria()[i]);
    return out;
}

std::vector<KiviatRow> kiviat_rows(const RangeTable &ranges, const LogiscopeValues &values)
{
    std::vector<KiviatRow> rows;
    for (std::string_view m : mnemonic_names()) {
        auto v = values.get(m);
        if (!v && m != "cl_comf")
            throw MissingMetric(std::string(m));
        rows.push_back({std::string(m), v, ranges.range(m), metric_status(ranges, m, v)});
    }
    return rows;
}

std::vector<Recommendation> recommendations(const std::vector<KiviatRow> &rows)
{
    static const std::map<std::pair<std::string_view, Side>, std::string_view> advice{
        {{"cl_comf", Side::Low}, "Increase the comment rate (improves understandability)"},
        {{"cl_comm", Side::Low}, "Add comments to the class"},
        {{"cl_data", Side::High}, "Reduce the number of attributes (move data to collaborating classes)"},
        {{"cl_data_publ", Side::High}, "Hide public attributes behind accessors (improves encapsulation)"},
        {{"cl_func", Side::High}, "Reduce the number of methods (split responsibilities)"},
        {{"cl_func_publ", Side::High}, "Split the class (its public interface is too large)"},
        {{"cl_line", Side::High}, "Shorten the class"},
        {{"cl_stat", Side::High}, "Reduce the number of statements (extract helper classes)"},
        {{"cl_wmc", Side::High}, "Reduce method complexity (simplify control flow)"},
        {{"cu_cdused", Side::High}, "Decrease the number of directly used classes (reduces coupling)"},
        {{"cu_cdusers", Side::High}, "Reduce the number of user classes (stabilize the interface)"},
        {{"in_bases", Side::High}, "Reduce the depth of inheritance (flatten the hierarchy)"},
        {{"in_noc", Side::High}, "Reduce the number of direct subclasses"},
    };
    std::vector<Recommendation> out;
    for (const auto &row : rows) {
        if (row.status.status == 0)
            continue;
        Recommendation r{row.mnemonic, row.status.side, {}};
        auto it = advice.find({row.mnemonic, row.status.side});
        if (it != advice.end())
            r.advice = std::string(it->second);
        else if (row.status.side == Side::Low)
            r.advice = "Raise " + row.mnemonic + " into its acceptable range";
        else
            r.advice = "Lower " + row.mnemonic + " into its acceptable range";
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace metriscope
