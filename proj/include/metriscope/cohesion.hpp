// cohesion.hpp
#ifndef METRISCOPE_COHESION_HPP
#define METRISCOPE_COHESION_HPP

#pragma once

#include "metriscope/model.hpp"

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metriscope {

enum class LcomVariant { CK, LH, HM, HS };

std::string_view to_string(LcomVariant v);

/// The method/attribute incidence a class's cohesion metrics are computed
/// from. Constructors are excluded; only attributes declared in the class
/// itself count.
struct CohesionGraph {
    std::vector<std::string> methods;               // signatures
    std::vector<std::string> attributes;            // declared attribute names
    std::vector<std::set<std::string>> accesses;    // I_i per method
    std::set<std::pair<int, int>> call_edges;       // i < j, either direction

    int method_count() const { return static_cast<int>(methods.size()); }
    int attribute_count() const { return static_cast<int>(attributes.size()); }
    bool shares(int i, int j) const;
    /// p(A): number of methods accessing attribute `a`.
    int accessors(const std::string &a) const;
};

CohesionGraph cohesion_graph(const SystemModel &model, std::string_view c);

/// CK and LH/HM return integers (as doubles); HS a ratio in [0, 2).
/// Throws Undefined when the variant's precondition fails.
double lcom(const CohesionGraph &g, LcomVariant v);
double coh(const CohesionGraph &g);

struct TccLcc {
    double tcc = 0;
    double lcc = 0;
};
TccLcc tcc_lcc(const CohesionGraph &g);

double similarity_cohesion(const CohesionGraph &g);

} // namespace metriscope

#endif // METRISCOPE_COHESION_HPP
