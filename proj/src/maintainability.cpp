#include "metriscope/maintainability.hpp"

#include "metriscope/errors.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

namespace metriscope {

namespace {

double log_in(double x, LogBase base) { return base == LogBase::Two ? std::log2(x) : std::log(x); }

SigScore score_from_band(int band)
{
    switch (band) {
    case 0:
        return SigScore::DoublePlus;
    case 1:
        return SigScore::Plus;
    case 2:
        return SigScore::Neutral;
    case 3:
        return SigScore::Minus;
    default:
        return SigScore::DoubleMinus;
    }
}

SigScore rate_upper_bounds(double value, const std::array<double, 4> &bounds)
{
    int band = 0;
    while (band < 4 && value > bounds[band])
        ++band;
    return score_from_band(band);
}

std::string normalize_line(std::string_view line)
{
    std::string out;
    bool space = false;
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            space = !out.empty();
            continue;
        }
        if (space)
            out += ' ';
        space = false;
        out += c;
    }
    return out;
}

} // namespace

double maintainability_index(double volume, double cyclomatic, double loc, std::optional<double> comment_percent,
                             LogBase base)
{
    if (!(volume > 0))
        throw DomainError("maintainability index needs a positive Halstead volume");
    if (!(loc > 0))
        throw DomainError("maintainability index needs a positive line count");
    double mi = 171.0 - 5.2 * log_in(volume, base) - 0.23 * cyclomatic - 16.2 * log_in(loc, base);
    if (comment_percent)
        mi += 50.0 * std::sin(std::sqrt(2.4 * *comment_percent));
    return mi;
}

std::optional<double> class_maintainability_index(const ClassInfo &c, LogBase base)
{
    double volume = 0;
    for (const auto &m : c.methods) {
        if (!m.halstead)
            return std::nullopt;
        volume += m.halstead->volume();
    }
    if (volume <= 0 || c.line_count <= 0)
        return std::nullopt;
    double cm = 100.0 * c.comment_lines / c.line_count;
    return maintainability_index(volume, class_wmc(c), c.line_count, cm, base);
}

std::string_view to_string(SigScore s)
{
    switch (s) {
    case SigScore::DoublePlus:
        return "++";
    case SigScore::Plus:
        return "+";
    case SigScore::Neutral:
        return "o";
    case SigScore::Minus:
        return "-";
    case SigScore::DoubleMinus:
        return "--";
    }
    return "o";
}

std::optional<SigScore> sig_score_from_string(std::string_view s)
{
    for (auto v : {SigScore::DoublePlus, SigScore::Plus, SigScore::Neutral, SigScore::Minus, SigScore::DoubleMinus}) {
        if (to_string(v) == s)
            return v;
    }
    return std::nullopt;
}

DuplicationResult find_duplication(const std::vector<SourceText> &files, int block)
{
    // Non-blank normalized lines per file.
    std::vector<std::vector<std::string>> lines(files.size());
    DuplicationResult r;
    for (std::size_t f = 0; f < files.size(); ++f) {
        std::istringstream in(files[f].text);
        std::string line;
        while (std::getline(in, line)) {
            std::string n = normalize_line(line);
            if (!n.empty())
                lines[f].push_back(std::move(n));
        }
        r.total_lines += static_cast<int>(lines[f].size());
    }
    if (block <= 0)
        return r;

    std::map<std::vector<std::string>, int> windows;
    for (const auto &fl : lines) {
        for (std::size_t i = 0; i + block <= fl.size(); ++i)
            ++windows[std::vector<std::string>(fl.begin() + i, fl.begin() + i + block)];
    }
    for (const auto &fl : lines) {
        std::vector<bool> dup(fl.size(), false);
        for (std::size_t i = 0; i + block <= fl.size(); ++i) {
            if (windows[std::vector<std::string>(fl.begin() + i, fl.begin() + i + block)] > 1) {
                for (std::size_t k = i; k < i + block; ++k)
                    dup[k] = true;
            }
        }
        for (bool d : dup)
            r.duplicated_lines += d ? 1 : 0;
    }
    return r;
}

SigScore rate_risk_profile(const std::vector<std::pair<int, int>> &value_and_weight,
                           const std::array<int, 3> &risk_bounds, const SigBands &bands)
{
    double total = 0;
    std::array<double, 3> risky{0, 0, 0}; // moderate, high, very high
    for (const auto &[value, weight] : value_and_weight) {
        total += weight;
        if (value > risk_bounds[2])
            risky[2] += weight;
        else if (value > risk_bounds[1])
            risky[1] += weight;
        else if (value > risk_bounds[0])
            risky[0] += weight;
    }
    if (total <= 0)
        return SigScore::DoublePlus;
    for (int band = 0; band < 4; ++band) {
        bool fits = true;
        for (int k = 0; k < 3; ++k)
            fits = fits && 100.0 * risky[k] / total <= bands.risk_profile[band][k];
        if (fits)
            return score_from_band(band);
    }
    return SigScore::DoubleMinus;
}

SigRating sig_rating(const SystemModel &model, const std::vector<SourceText> &sources, const SigBands &bands)
{
    const auto &classes = model.system_classes();
    if (classes.empty())
        throw EmptyModel();

    SigRating r;
    std::vector<std::pair<int, int>> complexity;
    std::vector<std::pair<int, int>> size;
    bool sizes_known = true;
    for (const auto &c : classes) {
        const ClassInfo &cls = model.get(c);
        r.total_loc += cls.line_count;
        for (const auto &m : cls.methods) {
            if (!m.cfg)
                continue;
            int weight = m.lines.value_or(1);
            complexity.emplace_back(method_cyclomatic(m), weight);
            if (m.lines)
                size.emplace_back(*m.lines, *m.lines);
            else
                sizes_known = false;
        }
    }
    r.volume = rate_upper_bounds(r.total_loc / 1000.0, bands.volume_kloc);
    r.complexity = rate_risk_profile(complexity, bands.complexity_risk, bands);
    if (sizes_known)
        r.unit_size = rate_risk_profile(size, bands.unit_size_risk, bands);
    if (!sources.empty()) {
        DuplicationResult d = find_duplication(sources, bands.duplication_block);
        r.duplication_percent = d.percent();
        r.duplication = rate_upper_bounds(d.percent(), bands.duplication_percent);
    }

    double sum = 0;
    int n = 0;
    for (const auto &s : {r.volume, r.complexity, r.duplication, r.unit_size}) {
        if (s) {
            sum += static_cast<int>(*s);
            ++n;
        }
    }
    r.overall = static_cast<SigScore>(static_cast<int>(std::lround(sum / n)));
    return r;
}

} // namespace metriscope
