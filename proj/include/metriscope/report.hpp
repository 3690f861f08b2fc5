// report.hpp
#ifndef METRISCOPE_REPORT_HPP
#define METRISCOPE_REPORT_HPP

#pragma once

#include "metriscope/class_metrics.hpp"
#include "metriscope/complexity.hpp"
#include "metriscope/maintainability.hpp"
#include "metriscope/mood.hpp"
#include "metriscope/parser.hpp"
#include "metriscope/qmood.hpp"
#include "metriscope/quality.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace metriscope {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::string_view kToolName = "metriscope 1.0";

struct MethodRecord {
    std::string class_name;
    std::string signature;
    ComplexityTriple complexity;
    Quadrant quadrant = Quadrant::III;

    bool operator==(const MethodRecord &) const = default;
};

struct ClassReport {
    ClassMetricsRecord metrics;
    std::array<CriterionResult, 4> criteria;
    int points = 0;
    Category maintainability = Category::Excellent;
    std::vector<Recommendation> recommendations;

    bool operator==(const ClassReport &) const = default;
};

struct CategoryHistogram {
    std::array<int, 4> counts{}; // EXCELLENT, GOOD, FAIR, POOR

    int total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
    /// 100 * count / total; zero for an empty histogram.
    double percent(Category c) const;
    void add(Category c) { ++counts[static_cast<std::size_t>(c)]; }
    bool operator==(const CategoryHistogram &) const = default;
};

struct EvolutionRow {
    std::string name;
    int enom = 0;
    double lenom = 0;
    double eenom = 0;

    bool operator==(const EvolutionRow &) const = default;
};

struct EvolutionSection {
    std::vector<std::string> versions;
    std::vector<EvolutionRow> rows; // ranked

    bool operator==(const EvolutionSection &) const = default;
};

struct SystemSection {
    std::optional<QmoodSystemMetrics> qmood;
    PropertyVector properties;
    bool properties_normalized = false;
    std::optional<QualityIndices> indices;
    std::string indices_note; // why indices are missing
    std::optional<MoodFactors> mood;
    std::optional<SigRating> sig;
    std::optional<double> mean_mi;

    bool operator==(const SystemSection &) const = default;
};

struct QualityReport {
    int schema_version = kReportSchemaVersion;
    std::string tool{kToolName};
    std::string config_fingerprint;

    std::vector<ClassReport> classes;
    std::vector<MethodRecord> methods;
    CategoryHistogram maintainability;
    std::array<CategoryHistogram, 4> criteria; // by Criterion
    SystemSection system;
    std::optional<EvolutionSection> evolution;

    std::vector<ParseError> parse_errors;
    bool partial = false;

    bool operator==(const QualityReport &) const = default;
};

inline bool operator==(const ParseError &a, const ParseError &b)
{
    return a.path == b.path && a.message == b.message;
}

std::string report_to_json(const QualityReport &r);
/// Throws Error on malformed input or an unsupported schema version.
QualityReport report_from_json(const std::string &text);
std::string report_to_text(const QualityReport &r);

/// Radar chart: 13 axes in canonical order, min and max rings, the value
/// polygon, out-of-range vertices marked. Throws WrongAxisCount.
std::string kiviat_svg(const std::vector<KiviatRow> &rows, const std::string &class_name);

struct ScatterResult {
    std::string csv;
    std::array<int, 4> quadrant_counts{}; // I, II, III, IV
};

ScatterResult scatter(const std::vector<MethodRecord> &methods);

} // namespace metriscope

#endif // METRISCOPE_REPORT_HPP
