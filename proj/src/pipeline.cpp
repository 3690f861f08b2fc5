#include "metriscope/pipeline.hpp"

#include "metriscope/errors.hpp"
#include "metriscope/facts_io.hpp"

namespace metriscope {

AnalysisInput load_input(const std::vector<std::filesystem::path> &paths)
{
    if (paths.empty())
        throw NoInput("no input paths");
    AnalysisInput in;
    if (paths.size() == 1 && paths.front().extension() == ".json" && std::filesystem::is_regular_file(paths.front())) {
        in.classes = read_facts_file(paths.front());
        return in;
    }
    auto files = collect_sources(paths);
    if (files.empty())
        throw NoInput("no source files found");
    ParsedSources parsed = parse_files(files);
    in.classes = parsed.classes();
    in.errors = std::move(parsed.errors);
    for (auto &[path, text] : parsed.texts)
        in.sources.push_back({path, std::move(text)});
    return in;
}

std::vector<MethodRecord> method_records(const SystemModel &model, const MethodThresholds &t)
{
    std::vector<MethodRecord> out;
    for (const auto &name : model.system_classes()) {
        const ClassInfo &c = model.get(name);
        for (const auto &m : c.methods) {
            if (!m.cfg)
                continue;
            MethodRecord r;
            r.class_name = name;
            r.signature = m.signature();
            r.complexity = method_complexity(m);
            r.quadrant = quadrant(r.complexity.v, r.complexity.ev, {t.v, t.ev});
            out.push_back(std::move(r));
        }
    }
    return out;
}

EvolutionSection evolution_section(const HistoryTimeline &h)
{
    EvolutionSection e;
    for (int i = 1; i <= h.size(); ++i)
        e.versions.push_back(h.version_id(i));
    if (h.size() < 2)
        return e;
    for (const auto &y : yw_rank(h))
        e.rows.push_back({y.name, y.enom, y.lenom, y.eenom});
    return e;
}

QualityReport analyze(const SystemModel &model, const Config &config, const AnalysisInput &input,
                      const AnalysisOptions &options)
{
    QualityReport r;
    r.config_fingerprint = config_fingerprint(config);
    r.parse_errors = input.errors;
    r.partial = !input.errors.empty();

    double mi_sum = 0;
    int mi_count = 0;
    for (const auto &name : model.system_classes()) {
        ClassReport c;
        c.metrics = class_metrics(model, name);
        c.metrics.mi = class_maintainability_index(model.get(name), config.mi_log_base);
        if (c.metrics.mi) {
            mi_sum += *c.metrics.mi;
            ++mi_count;
        }
        c.criteria = all_criterion_results(config.ranges, c.metrics.logiscope);
        for (const auto &cr : c.criteria)
            c.points += category_points(cr.category);
        c.maintainability = maintainability(c.criteria);
        c.recommendations = recommendations(kiviat_rows(config.ranges, c.metrics.logiscope));
        r.maintainability.add(c.maintainability);
        for (const auto &cr : c.criteria)
            r.criteria[static_cast<std::size_t>(cr.criterion)].add(cr.category);
        r.classes.push_back(std::move(c));
    }
    r.methods = method_records(model, config.ranges.method_thresholds);

    SystemSection &s = r.system;
    if (mi_count > 0)
        s.mean_mi = mi_sum / mi_count;
    if (model.system_classes().empty())
        return r;

    s.qmood = qmood_system_metrics(model);
    if (options.qmood_baseline != nullptr) {
        s.properties = property_vector(model, property_vector(*options.qmood_baseline));
        s.properties_normalized = true;
    } else {
        s.properties = property_vector(model);
    }
    try {
        s.indices = quality_indices(s.properties);
    } catch (const MissingProperty &e) {
        s.indices_note = e.what();
    }
    try {
        s.mood = mood(model);
    } catch (const DegenerateSystem &e) {
        // Fewer than two classes: no system-level factors.
    }
    s.sig = sig_rating(model, input.sources, config.sig);

    if (options.history != nullptr)
        r.evolution = evolution_section(*options.history);
    return r;
}

} // namespace metriscope
