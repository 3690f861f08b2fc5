// coupling.hpp
#ifndef METRISCOPE_COUPLING_HPP
#define METRISCOPE_COUPLING_HPP

#pragma once

#include "metriscope/model.hpp"

#include <set>
#include <string>
#include <string_view>

namespace metriscope {

/// Classes coupled to c in either direction (system classes only).
std::set<std::string> coupled_classes(const SystemModel &model, std::string_view c);
int cbo(const SystemModel &model, std::string_view c);

/// Keys of declared methods plus keys of every method they invoke directly.
std::set<std::string> response_set(const SystemModel &model, std::string_view c);
int rfc(const SystemModel &model, std::string_view c);

/// Invocation multiplicities summed over calls that leave the class.
int mpc(const SystemModel &model, std::string_view c);

/// Attributes whose declared type is a system class.
int dac(const SystemModel &model, std::string_view c);

/// Client relations over the maximum possible, discounting inheritance
/// pairs. Throws DegenerateSystem when the denominator is not positive.
double coupling_factor(const SystemModel &model);

int dit(const SystemModel &model, std::string_view c);
int noc(const SystemModel &model, std::string_view c);

} // namespace metriscope

#endif // METRISCOPE_COUPLING_HPP
