// quality.hpp
#ifndef METRISCOPE_QUALITY_HPP
#define METRISCOPE_QUALITY_HPP

#pragma once

#include "metriscope/class_metrics.hpp"
#include "metriscope/maintainability.hpp"

#include <array>
#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace metriscope {

struct Range {
    double min = -std::numeric_limits<double>::infinity();
    double max = std::numeric_limits<double>::infinity();

    bool contains(double v) const { return min <= v && v <= max; }
    bool operator==(const Range &) const = default;
};

struct ClassThresholds {
    int cbo = 2;
    int wmc = 14;
    int rfc = 100;
    int dit = 7;
    int noc = 3;
    bool operator==(const ClassThresholds &) const = default;
};

struct MethodThresholds {
    int v = 10;
    int ev = 4;
    int iv = 7;
    bool operator==(const MethodThresholds &) const = default;
};

struct RangeTable {
    std::map<std::string, Range, std::less<>> ranges;
    ClassThresholds class_thresholds;
    MethodThresholds method_thresholds;

    /// Acceptable ranges shipped with the tool for the 13 mnemonics.
    static RangeTable defaults();
    /// Throws UnknownMnemonic.
    const Range &range(std::string_view mnemonic) const;
    bool operator==(const RangeTable &) const = default;
};

/// Everything a config file can override.
struct Config {
    RangeTable ranges = RangeTable::defaults();
    SigBands sig;
    LogBase mi_log_base = LogBase::Two;
    /// Mnemonics sampled by the evolution relative-complexity analysis.
    std::vector<std::string> evolution_metrics{"cl_stat", "cl_wmc", "cl_func", "cl_data", "cu_cdused"};
    /// Facts file of the version QMOOD properties are normalized against.
    std::string qmood_baseline;

    bool operator==(const Config &) const = default;
};

/// INI format:
///   [ranges]            cl_wmc = 0, 60         (inf / -inf accepted)
///   [class-thresholds]  cbo = 2
///   [method-thresholds] v = 10
///   [sig]               volume_kloc = 66, 246, 665, 1310
///   [mi]                log_base = 2 | e
///   [evolution]         metrics = cl_stat, cl_wmc
///   [qmood]             baseline = path/to/facts.json
/// Throws ConfigError carrying the offending line.
Config parse_config(const std::string &text);
Config load_config(const std::filesystem::path &path);
/// Stable hash of the effective configuration, for reports.
std::string config_fingerprint(const Config &c);

enum class Side { In, Low, High };
std::string_view to_string(Side s);

struct MetricStatus {
    int status = 0; // 0 in range, -1 out of range
    Side side = Side::In;
    bool operator==(const MetricStatus &) const = default;
};

/// Undefined values (empty optional) count as out of range LOW.
MetricStatus metric_status(const RangeTable &ranges, std::string_view mnemonic, std::optional<double> value);

enum class Criterion { Analyzability, Changeability, Stability, Testability };
enum class Category { Excellent, Good, Fair, Poor };

std::string_view to_string(Criterion c);
std::string_view to_string(Category c);
std::optional<Category> category_from_string(std::string_view s);
const std::array<Criterion, 4> &all_criteria();
const std::vector<std::string_view> &criterion_constituents(Criterion c);

struct CriterionResult {
    Criterion criterion = Criterion::Analyzability;
    std::vector<std::pair<std::string, MetricStatus>> constituents;
    int in_range_count = 0;
    Category category = Category::Excellent;
    bool operator==(const CriterionResult &) const = default;
};

/// 0 constituents out -> EXCELLENT, 1 -> GOOD, 2 -> FAIR, 3+ -> POOR.
/// Throws MissingMetric for an unmeasured constituent.
CriterionResult criterion(const RangeTable &ranges, const LogiscopeValues &values, Criterion which);

int category_points(Category c);
/// Sum of criterion points: >= 11 EXCELLENT, 8-10 GOOD, 5-7 FAIR, else POOR.
Category maintainability(const std::array<CriterionResult, 4> &criteria);
Category maintainability_from_points(int total);
std::array<CriterionResult, 4> all_criterion_results(const RangeTable &ranges, const LogiscopeValues &values);

struct KiviatRow {
    std::string mnemonic;
    std::optional<double> value;
    Range range;
    MetricStatus status;
};

/// 13 rows in canonical order. Throws MissingMetric for unmeasured values
/// other than an undefined cl_comf.
std::vector<KiviatRow> kiviat_rows(const RangeTable &ranges, const LogiscopeValues &values);

struct Recommendation {
    std::string mnemonic;
    Side side = Side::In;
    std::string advice;
    bool operator==(const Recommendation &) const = default;
};

/// One entry per out-of-range row, in row order.
std::vector<Recommendation> recommendations(const std::vector<KiviatRow> &rows);

} // namespace metriscope

#endif // METRISCOPE_QUALITY_HPP
