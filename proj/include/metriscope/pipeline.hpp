// pipeline.hpp
#ifndef METRISCOPE_PIPELINE_HPP
#define METRISCOPE_PIPELINE_HPP

#pragma once

#include "metriscope/evolution.hpp"
#include "metriscope/report.hpp"

#include <filesystem>
#include <vector>

namespace metriscope {

struct AnalysisInput {
    std::vector<ClassInfo> classes;
    std::vector<SourceText> sources; // empty for facts input
    std::vector<ParseError> errors;
};

/// A single *.json path is read as a facts file; anything else is searched
/// for source files. Throws NoInput when nothing usable is found.
AnalysisInput load_input(const std::vector<std::filesystem::path> &paths);

/// Per-method complexity of every system class, in model order.
std::vector<MethodRecord> method_records(const SystemModel &model, const MethodThresholds &t = {});

struct AnalysisOptions {
    const SystemModel *qmood_baseline = nullptr;
    const HistoryTimeline *history = nullptr;
};

/// The full report of one model. Parse errors in the input mark it partial.
QualityReport analyze(const SystemModel &model, const Config &config, const AnalysisInput &input,
                      const AnalysisOptions &options = {});

EvolutionSection evolution_section(const HistoryTimeline &h);

} // namespace metriscope

#endif // METRISCOPE_PIPELINE_HPP
