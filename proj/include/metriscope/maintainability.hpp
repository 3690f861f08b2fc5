// maintainability.hpp
#ifndef METRISCOPE_MAINTAINABILITY_HPP
#define METRISCOPE_MAINTAINABILITY_HPP

#pragma once

#include "metriscope/complexity.hpp"
#include "metriscope/model.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace metriscope {

enum class LogBase { Two, Natural };

/// 171 - 5.2 log(V) - 0.23 G - 16.2 log(LOC) + 50 sin(sqrt(2.4 CM)), with
/// log base 2 by default. Without CM the sine term is dropped. CM is a
/// percentage. Throws DomainError for V <= 0 or LOC <= 0.
double maintainability_index(double volume, double cyclomatic, double loc, std::optional<double> comment_percent,
                             LogBase base = LogBase::Two);

/// Class MI: V = sum of method volumes, G = WMC, LOC = cl_line, CM from
/// cl_comm. Empty when a method lacks Halstead counts or V or LOC is zero.
std::optional<double> class_maintainability_index(const ClassInfo &c, LogBase base = LogBase::Two);

// ---------------------------------------------------------------------------
// SIG model

enum class SigScore { DoubleMinus = -2, Minus = -1, Neutral = 0, Plus = 1, DoublePlus = 2 };

std::string_view to_string(SigScore s);
std::optional<SigScore> sig_score_from_string(std::string_view s);

/// Band thresholds. Every default here is a stand-in, not a measured value.
struct SigBands {
    /// Upper KLOC bounds for ++, +, o, - (above the last: --).
    std::array<double, 4> volume_kloc{66, 246, 665, 1310};
    /// Risk category bounds on v(G): low <= [0], moderate <= [1], high <= [2].
    std::array<int, 3> complexity_risk{10, 20, 50};
    /// Unit-size risk bounds on method LOC, same layout.
    std::array<int, 3> unit_size_risk{15, 30, 60};
    /// Max % of code in moderate / high / very-high risk for ++, +, o, -.
    std::array<std::array<double, 3>, 4> risk_profile{{
        {25, 0, 0},
        {30, 5, 0},
        {40, 10, 0},
        {50, 15, 5},
    }};
    /// Upper duplication % bounds for ++, +, o, -.
    std::array<double, 4> duplication_percent{3, 5, 10, 20};
    /// Minimum length of a duplicated block, in lines.
    int duplication_block = 6;

    bool operator==(const SigBands &) const = default;
};

struct SigRating {
    std::optional<SigScore> volume;
    std::optional<SigScore> complexity;
    std::optional<SigScore> duplication;
    std::optional<SigScore> unit_size;
    /// Unit testing needs execution data and is never rated.
    static constexpr std::string_view unit_testing = "not-assessed";
    std::optional<SigScore> overall;

    std::optional<double> duplication_percent;
    double total_loc = 0;
    bool operator==(const SigRating &) const = default;
};

struct SourceText {
    std::string path;
    std::string text;
};

struct DuplicationResult {
    int duplicated_lines = 0;
    int total_lines = 0;
    double percent() const { return total_lines == 0 ? 0.0 : 100.0 * duplicated_lines / total_lines; }
};

/// Lines belonging to a run of at least `block` consecutive non-blank lines
/// (whitespace-normalized) that occurs more than once across all files.
DuplicationResult find_duplication(const std::vector<SourceText> &files, int block = 6);

/// Rates per-method measurements weighted by method LOC (1 when unknown).
SigScore rate_risk_profile(const std::vector<std::pair<int, int>> &value_and_weight,
                           const std::array<int, 3> &risk_bounds, const SigBands &bands);

/// Throws EmptyModel. Duplication is rated only when sources are given.
SigRating sig_rating(const SystemModel &model, const std::vector<SourceText> &sources = {},
                     const SigBands &bands = {});

} // namespace metriscope

#endif // METRISCOPE_MAINTAINABILITY_HPP
