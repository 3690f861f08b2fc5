// evolution.hpp
#ifndef METRISCOPE_EVOLUTION_HPP
#define METRISCOPE_EVOLUTION_HPP

#pragma once

#include "metriscope/model.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace metriscope {

/// Ordered versions of one system. Versions are 1-based in every query.
class HistoryTimeline {
public:
    void add(std::string version_id, SystemModel model);

    int size() const { return static_cast<int>(versions_.size()); }
    const std::string &version_id(int i) const { return versions_.at(i - 1).first; }
    const SystemModel &model(int i) const { return versions_.at(i - 1).second; }

    /// Declared methods of c in version i (constructors excluded); 0 when
    /// the class is absent.
    int nom(std::string_view c, int i) const;
    /// Every system class name seen in any version, sorted.
    std::vector<std::string> class_names() const;

private:
    std::vector<std::pair<std::string, SystemModel>> versions_;
};

/// Compares version ids so that "v2" < "v10".
bool natural_less(std::string_view a, std::string_view b);

/// Every *.json facts file of a directory, ordered naturally by stem.
HistoryTimeline load_history(const std::filesystem::path &dir);

/// Change in NOM between version i-1 and i.
int enom_step(const HistoryTimeline &h, std::string_view c, int i);
/// Sum of enom_step over i = j+1..k. Throws BadRange unless 1 <= j < k <= n.
int enom(const HistoryTimeline &h, std::string_view c, int j, int k);

enum class Weighting { Latest, Earliest };

/// Latest: sum ENOM_i 2^(i-k). Earliest: sum ENOM_i 2^(k-i+1).
double weighted_enom(const HistoryTimeline &h, std::string_view c, int j, int k, Weighting mode);

struct YwEntry {
    std::string name;
    double lenom = 0;
    int enom = 0;
    double eenom = 0;
};

/// Classes by LENOM descending, then ENOM descending, then name.
std::vector<YwEntry> yw_rank(const HistoryTimeline &h, int j, int k);
std::vector<YwEntry> yw_rank(const HistoryTimeline &h);

// ---------------------------------------------------------------------------
// Relative complexity and code churn

struct MetricMatrix {
    std::vector<std::string> modules;
    std::vector<std::string> metrics;
    std::vector<std::vector<double>> rows; // one per module
};

/// One row per system class with the given mnemonics.
MetricMatrix metric_matrix(const SystemModel &model, const std::vector<std::string> &metrics);

struct ComplexityBaseline {
    std::string id;
    std::vector<std::string> metrics;
    std::vector<double> means;
    std::vector<double> stddevs; // population
    std::vector<double> eigenvalues;              // retained, descending
    std::vector<std::vector<double>> components;  // unit eigenvectors
    double raw_mean = 0;
    double raw_stddev = 1;
};

/// Standardizes, takes the correlation-matrix eigenpairs with eigenvalue
/// above 1 and records the raw score spread for rescaling. Throws
/// DegenerateBaseline for a zero-variance column, fewer modules than
/// metrics, or no retained component.
ComplexityBaseline fit_baseline(const MetricMatrix &m, std::string id);

/// rho per module, rescaled so the baseline build has mean 50, sd 10.
std::vector<double> relative_complexity(const MetricMatrix &m, const ComplexityBaseline &b);

struct ChurnBuildRecord {
    std::string baseline_id;
    std::map<std::string, double> rho;
    double mean = 0;
    double total = 0;
};

ChurnBuildRecord score_build(const MetricMatrix &m, const ComplexityBaseline &b);

enum class ChurnVerdict { LaterMoreComplex, LaterLessComplex, Neutral };
std::string_view to_string(ChurnVerdict v);

struct ChurnComparison {
    double r1 = 0;
    double r2 = 0;
    ChurnVerdict verdict = ChurnVerdict::Neutral;
    std::vector<std::string> removed; // MA
    std::vector<std::string> added;   // MB
    std::vector<std::string> common;  // MC
};

/// Throws BaselineMismatch when the builds were scored differently.
ChurnComparison churn_compare(const ChurnBuildRecord &earlier, const ChurnBuildRecord &later);

} // namespace metriscope

#endif // METRISCOPE_EVOLUTION_HPP
