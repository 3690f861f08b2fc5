// mood.hpp
#ifndef METRISCOPE_MOOD_HPP
#define METRISCOPE_MOOD_HPP

#pragma once

#include "metriscope/model.hpp"

#include <optional>
#include <string>

namespace metriscope {

/// System-level factors as ratios in [0, 1]. A factor with an empty
/// denominator is undefined (PF for a system without inheritance).
struct MoodFactors {
    std::optional<double> mhf;
    std::optional<double> ahf;
    std::optional<double> mif;
    std::optional<double> aif;
    std::optional<double> cf;
    std::optional<double> pf;
    bool operator==(const MoodFactors &) const = default;
};

/// Fraction of the other classes a member is hidden from.
double hidden_fraction(const SystemModel &model, std::string_view declaring_class, Visibility v);

/// Throws DegenerateSystem when fewer than two system classes exist.
MoodFactors mood(const SystemModel &model);

/// "87.5" style percentage with one decimal, or "undefined".
std::string format_percent(const std::optional<double> &ratio);

} // namespace metriscope

#endif // METRISCOPE_MOOD_HPP
