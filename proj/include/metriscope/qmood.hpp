// qmood.hpp
#ifndef METRISCOPE_QMOOD_HPP
#define METRISCOPE_QMOOD_HPP

#pragma once

#include "metriscope/model.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace metriscope {

struct QmoodClassMetrics {
    std::optional<double> dam; // no attributes -> undefined
    int dcc = 0;
    std::optional<double> cam; // no parameters anywhere -> undefined
    int moa = 0;
    std::optional<double> mfa; // nothing declared or inherited -> undefined
    int nop = 0;
    int cis = 0;
    int nom = 0;

    bool operator==(const QmoodClassMetrics &) const = default;
};

QmoodClassMetrics qmood_class_metrics(const SystemModel &model, std::string_view c);

struct QmoodSystemMetrics {
    int dsc = 0;
    int noh = 0;
    double ana = 0;
    bool operator==(const QmoodSystemMetrics &) const = default;
};

/// Throws EmptyModel when there are no system classes.
QmoodSystemMetrics qmood_system_metrics(const SystemModel &model);

enum class DesignProperty {
    DesignSize,
    Hierarchies,
    Abstraction,
    Encapsulation,
    Coupling,
    Cohesion,
    Composition,
    Inheritance,
    Polymorphism,
    Messaging,
    Complexity,
};

inline constexpr std::size_t kDesignPropertyCount = 11;
std::string_view to_string(DesignProperty p);
const std::array<DesignProperty, kDesignPropertyCount> &all_design_properties();

struct PropertyVector {
    std::array<std::optional<double>, kDesignPropertyCount> values{};

    std::optional<double> &operator[](DesignProperty p) { return values[static_cast<std::size_t>(p)]; }
    const std::optional<double> &operator[](DesignProperty p) const { return values[static_cast<std::size_t>(p)]; }
    bool operator==(const PropertyVector &) const = default;
};

/// Raw property vector of a model: system metrics plus per-class means
/// (undefined per-class values are skipped; all undefined -> undefined).
PropertyVector property_vector(const SystemModel &model);
/// Componentwise division by the baseline; zero or undefined baseline
/// components give an undefined result.
PropertyVector normalize(const PropertyVector &p, const PropertyVector &baseline);
PropertyVector property_vector(const SystemModel &model, const PropertyVector &baseline);

struct QualityIndices {
    double reusability = 0;
    double flexibility = 0;
    double understandability = 0;
    double functionality = 0;
    double extendibility = 0;
    double effectiveness = 0;
    double tqi = 0;

    bool operator==(const QualityIndices &) const = default;
};

/// Weighted sums over the property vector; TQI is the sum of the six.
/// Throws MissingProperty naming the undefined components and the indices
/// they block.
QualityIndices quality_indices(const PropertyVector &p);

} // namespace metriscope

#endif // METRISCOPE_QMOOD_HPP
