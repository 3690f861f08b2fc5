// class_metrics.hpp
#ifndef METRISCOPE_CLASS_METRICS_HPP
#define METRISCOPE_CLASS_METRICS_HPP

#pragma once

#include "metriscope/model.hpp"
#include "metriscope/qmood.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace metriscope {

inline constexpr std::size_t kMnemonicCount = 13;

/// cl_comf, cl_comm, ..., in_noc in canonical chart order.
const std::array<std::string_view, kMnemonicCount> &mnemonic_names();
/// Index into mnemonic_names(); throws UnknownMnemonic.
std::size_t mnemonic_index(std::string_view mnemonic);

/// The 13 class-level mnemonics. An empty cl_comf means "undefined"
/// (zero-line class); an empty value elsewhere means "not measured".
struct LogiscopeValues {
    std::array<std::optional<double>, kMnemonicCount> values{};

    std::optional<double> get(std::string_view mnemonic) const { return values[mnemonic_index(mnemonic)]; }
    void set(std::string_view mnemonic, std::optional<double> v) { values[mnemonic_index(mnemonic)] = v; }
    bool operator==(const LogiscopeValues &) const = default;
};

/// Statement count of a method: the recorded count, else the CFG's inner
/// node count, else zero.
int method_statements(const MethodInfo &m);

LogiscopeValues logiscope_mnemonics(const SystemModel &model, std::string_view c);

struct ClassMetricsRecord {
    std::string name;

    int cbo = 0;
    int rfc = 0;
    int wmc = 0;
    int dit = 0;
    int noc = 0;
    int mpc = 0;
    int dac = 0;

    std::optional<double> lcom_ck;
    std::optional<double> lcom_lh;
    std::optional<double> lcom_hm;
    std::optional<double> lcom_hs;
    std::optional<double> tcc;
    std::optional<double> lcc;
    std::optional<double> coh;
    std::optional<double> sim_cohesion;

    LogiscopeValues logiscope;
    QmoodClassMetrics qmood;

    /// Halstead-based MI of the class, when the volume is available.
    std::optional<double> mi;

    bool operator==(const ClassMetricsRecord &) const = default;
};

ClassMetricsRecord class_metrics(const SystemModel &model, std::string_view c);

} // namespace metriscope

#endif // METRISCOPE_CLASS_METRICS_HPP
