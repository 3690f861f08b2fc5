// metriscope command-line front end.
//
//   metriscope analyze  <paths...>   full report (JSON or text)
//   metriscope kiviat   <paths...>   one SVG radar chart per class
//   metriscope scatter  <paths...>   v(G)/ev(G) CSV with quadrant counts
//   metriscope evolve   --history D  ENOM ranking and relative complexity per version
//   metriscope compare  <a> <b>      churn comparison of two builds
//   metriscope facts    <paths...>   parse sources and write the facts file
//
// Exit codes: 0 success, 1 error, 2 some inputs failed to parse (the output
// is still written and flagged partial).

#include "metriscope/errors.hpp"
#include "metriscope/evolution.hpp"
#include "metriscope/facts_io.hpp"
#include "metriscope/pipeline.hpp"
#include "metriscope/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace metriscope;

namespace {

struct Options {
    std::vector<std::string> paths;
    std::string config;
    std::string facts;
    std::string baseline;
    std::string history;
    std::string out;
    std::string format = "json";
    std::string class_name;
};

Config effective_config(const Options &o)
{
    Config c = o.config.empty() ? Config{} : load_config(o.config);
    if (!o.baseline.empty())
        c.qmood_baseline = o.baseline;
    return c;
}

AnalysisInput input_of(const Options &o)
{
    if (!o.facts.empty())
        return load_input({fs::path(o.facts)});
    std::vector<fs::path> paths(o.paths.begin(), o.paths.end());
    return load_input(paths);
}

// Writes to <out>/<name>, or stdout without --out.
void emit(const Options &o, const std::string &name, const std::string &content)
{
    if (o.out.empty()) {
        std::cout << content;
        return;
    }
    fs::create_directories(o.out);
    fs::path p = fs::path(o.out) / name;
    std::ofstream f(p, std::ios::binary);
    if (!f)
        throw Error("cannot write " + p.string());
    f << content;
}

void report_parse_errors(const AnalysisInput &in)
{
    for (const auto &e : in.errors)
        std::cerr << "metriscope: " << e.path << ": " << e.message << "\n";
}

std::string file_safe(std::string name)
{
    for (char &c : name) {
        if (c == '/' || c == '\\' || c == ':' || c == '<' || c == '>')
            c = '_';
    }
    return name;
}

int run_analyze(const Options &o)
{
    Config cfg = effective_config(o);
    AnalysisInput in = input_of(o);
    SystemModel model = build_system_model(in.classes);

    std::optional<SystemModel> baseline;
    if (!cfg.qmood_baseline.empty())
        baseline = load_model(cfg.qmood_baseline);
    std::optional<HistoryTimeline> history;
    if (!o.history.empty())
        history = load_history(o.history);

    AnalysisOptions opts;
    opts.qmood_baseline = baseline ? &*baseline : nullptr;
    opts.history = history ? &*history : nullptr;
    QualityReport r = analyze(model, cfg, in, opts);

    if (o.format == "text")
        emit(o, "report.txt", report_to_text(r));
    else
        emit(o, "report.json", report_to_json(r));
    report_parse_errors(in);
    return r.partial ? 2 : 0;
}

int run_kiviat(const Options &o)
{
    Config cfg = effective_config(o);
    AnalysisInput in = input_of(o);
    SystemModel model = build_system_model(in.classes);
    std::vector<std::string> names;
    if (!o.class_name.empty()) {
        if (model.find(o.class_name) == nullptr)
            throw UnknownClass(o.class_name);
        names.push_back(o.class_name);
    } else {
        names = model.system_classes();
    }
    if (o.out.empty() && names.size() > 1)
        throw Error("several classes need --out or --class");
    for (const auto &n : names) {
        auto rows = kiviat_rows(cfg.ranges, logiscope_mnemonics(model, n));
        emit(o, file_safe(n) + ".svg", kiviat_svg(rows, n));
    }
    report_parse_errors(in);
    return in.errors.empty() ? 0 : 2;
}

int run_scatter(const Options &o)
{
    Config cfg = effective_config(o);
    AnalysisInput in = input_of(o);
    SystemModel model = build_system_model(in.classes);
    ScatterResult s = scatter(method_records(model, cfg.ranges.method_thresholds));
    emit(o, "scatter.csv", s.csv);
    int total = s.quadrant_counts[0] + s.quadrant_counts[1] + s.quadrant_counts[2] + s.quadrant_counts[3];
    const char *names[] = {"I", "II", "III", "IV"};
    for (int q = 0; q < 4; ++q) {
        double pct = total == 0 ? 0.0 : 100.0 * s.quadrant_counts[q] / total;
        std::fprintf(stderr, "quadrant %-3s %5d  %5.1f%%  %s\n", names[q], s.quadrant_counts[q], pct,
                     std::string(quadrant_meaning(static_cast<Quadrant>(q))).c_str());
    }
    report_parse_errors(in);
    return in.errors.empty() ? 0 : 2;
}

int run_evolve(const Options &o)
{
    if (o.history.empty())
        throw NoInput("evolve needs --history");
    Config cfg = effective_config(o);
    HistoryTimeline h = load_history(o.history);
    EvolutionSection e = evolution_section(h);

    std::ostringstream text;
    nlohmann::json j;
    j["versions"] = e.versions;
    text << "versions:";
    for (const auto &v : e.versions)
        text << " " << v;
    text << "\n";
    if (h.size() >= 2) {
        const int k = h.size();
        text << "EENOM weights (version: weight):";
        for (int i = 2; i <= k; ++i)
            text << " " << h.version_id(i) << ":" << std::ldexp(1.0, k - i + 1);
        text << "\n";
        nlohmann::json rows = nlohmann::json::array();
        char line[256];
        std::snprintf(line, sizeof line, "%-40s %6s %8s %8s\n", "class", "ENOM", "LENOM", "EENOM");
        text << line;
        for (const auto &r : e.rows) {
            rows.push_back({{"name", r.name}, {"enom", r.enom}, {"lenom", r.lenom}, {"eenom", r.eenom}});
            std::snprintf(line, sizeof line, "%-40s %6d %8.3f %8.1f\n", r.name.c_str(), r.enom, r.lenom, r.eenom);
            text << line;
        }
        j["classes"] = rows;
    }

    // Relative complexity of every version against the first one.
    ComplexityBaseline base = fit_baseline(metric_matrix(h.model(1), cfg.evolution_metrics), h.version_id(1));
    nlohmann::json builds = nlohmann::json::array();
    std::optional<ChurnBuildRecord> previous;
    for (int i = 1; i <= h.size(); ++i) {
        ChurnBuildRecord rec = score_build(metric_matrix(h.model(i), cfg.evolution_metrics), base);
        nlohmann::json b{{"version", h.version_id(i)}, {"R", rec.total}, {"meanRho", rec.mean}};
        text << "build " << h.version_id(i) << ": R = " << rec.total << ", mean rho = " << rec.mean;
        if (previous) {
            ChurnComparison c = churn_compare(*previous, rec);
            b["verdict"] = to_string(c.verdict);
            text << ", " << to_string(c.verdict);
        }
        text << "\n";
        builds.push_back(b);
        previous = std::move(rec);
    }
    j["builds"] = builds;

    if (o.format == "text")
        emit(o, "evolution.txt", text.str());
    else
        emit(o, "evolution.json", j.dump(2) + "\n");
    return 0;
}

int run_compare(const Options &o)
{
    if (o.paths.size() != 2)
        throw NoInput("compare needs exactly two facts files");
    Config cfg = effective_config(o);
    SystemModel earlier = load_model(o.paths[0]);
    SystemModel later = load_model(o.paths[1]);
    SystemModel base_model = cfg.qmood_baseline.empty() ? earlier : load_model(cfg.qmood_baseline);
    std::string base_id = cfg.qmood_baseline.empty() ? o.paths[0] : cfg.qmood_baseline;
    ComplexityBaseline base = fit_baseline(metric_matrix(base_model, cfg.evolution_metrics), base_id);
    ChurnBuildRecord a = score_build(metric_matrix(earlier, cfg.evolution_metrics), base);
    ChurnBuildRecord b = score_build(metric_matrix(later, cfg.evolution_metrics), base);
    ChurnComparison c = churn_compare(a, b);

    if (o.format == "text") {
        std::ostringstream t;
        t << "R1 = " << c.r1 << "\nR2 = " << c.r2 << "\nverdict: " << to_string(c.verdict) << "\nremoved:";
        for (const auto &n : c.removed)
            t << " " << n;
        t << "\nadded:";
        for (const auto &n : c.added)
            t << " " << n;
        t << "\ncommon: " << c.common.size() << "\n";
        emit(o, "compare.txt", t.str());
    } else {
        nlohmann::json j{{"baseline", base_id}, {"r1", c.r1},           {"r2", c.r2},
                         {"verdict", to_string(c.verdict)}, {"removed", c.removed}, {"added", c.added},
                         {"common", c.common}};
        emit(o, "compare.json", j.dump(2) + "\n");
    }
    return 0;
}

int run_facts(const Options &o)
{
    AnalysisInput in = input_of(o);
    emit(o, "facts.json", facts_to_json(in.classes));
    report_parse_errors(in);
    return in.errors.empty() ? 0 : 2;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Object-oriented source code quality metrics"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App *sub, bool with_paths) {
        if (with_paths)
            sub->add_option("paths", o.paths, "source files, directories or a facts file");
        sub->add_option("--config", o.config, "INI configuration file");
        sub->add_option("--facts", o.facts, "read this facts file instead of sources");
        sub->add_option("--baseline", o.baseline, "baseline facts file (QMOOD normalization, churn baseline)");
        sub->add_option("--history", o.history, "directory of per-version facts files");
        sub->add_option("--out", o.out, "output directory (default: stdout)");
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };
    auto *analyze_cmd = app.add_subcommand("analyze", "full quality report");
    common(analyze_cmd, true);
    auto *kiviat_cmd = app.add_subcommand("kiviat", "Kiviat SVG per class");
    common(kiviat_cmd, true);
    kiviat_cmd->add_option("--class", o.class_name, "only this class");
    auto *scatter_cmd = app.add_subcommand("scatter", "complexity scatter CSV");
    common(scatter_cmd, true);
    auto *evolve_cmd = app.add_subcommand("evolve", "evolution of a version history");
    common(evolve_cmd, false);
    auto *compare_cmd = app.add_subcommand("compare", "churn comparison of two facts files");
    common(compare_cmd, true);
    auto *facts_cmd = app.add_subcommand("facts", "write the facts file of sources");
    common(facts_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze_cmd->parsed())
            return run_analyze(o);
        if (kiviat_cmd->parsed())
            return run_kiviat(o);
        if (scatter_cmd->parsed())
            return run_scatter(o);
        if (evolve_cmd->parsed())
            return run_evolve(o);
        if (compare_cmd->parsed())
            return run_compare(o);
        if (facts_cmd->parsed())
            return run_facts(o);
    } catch (const std::exception &e) {
        std::cerr << "metriscope: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
