#include "metriscope/evolution.hpp"

#include "metriscope/class_metrics.hpp"
#include "metriscope/errors.hpp"
#include "metriscope/facts_io.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace metriscope {

void HistoryTimeline::add(std::string version_id, SystemModel model)
{
    versions_.emplace_back(std::move(version_id), std::move(model));
}

int HistoryTimeline::nom(std::string_view c, int i) const
{
    const ClassInfo *cls = model(i).find(c);
    if (cls == nullptr || cls->is_external)
        return 0;
    int n = 0;
    for (const auto &m : cls->methods)
        n += cls->is_constructor(m) ? 0 : 1;
    return n;
}

std::vector<std::string> HistoryTimeline::class_names() const
{
    std::set<std::string> names;
    for (const auto &[_, m] : versions_)
        names.insert(m.system_classes().begin(), m.system_classes().end());
    return {names.begin(), names.end()};
}

bool natural_less(std::string_view a, std::string_view b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie])))
                ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je])))
                ++je;
            std::string_view da = a.substr(i, ie - i), db = b.substr(j, je - j);
            while (da.size() > 1 && da.front() == '0')
                da.remove_prefix(1);
            while (db.size() > 1 && db.front() == '0')
                db.remove_prefix(1);
            if (da.size() != db.size())
                return da.size() < db.size();
            if (da != db)
                return da < db;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j])
                return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    if (a.size() - i != b.size() - j)
        return a.size() - i < b.size() - j;
    return a < b;
}

HistoryTimeline load_history(const std::filesystem::path &dir)
{
    if (!std::filesystem::is_directory(dir))
        throw NoInput("history directory " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto &e : std::filesystem::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".json")
            files.push_back(e.path());
    }
    if (files.empty())
        throw NoInput("no facts files in " + dir.string());
    std::sort(files.begin(), files.end(), [](const auto &a, const auto &b) {
        return natural_less(a.stem().string(), b.stem().string());
    });
    HistoryTimeline h;
    for (const auto &f : files)
        h.add(f.stem().string(), build_system_model(read_facts_file(f), f.stem().string()));
    return h;
}

int enom_step(const HistoryTimeline &h, std::string_view c, int i)
{
    if (i < 2 || i > h.size())
        throw BadRange(i - 1, i);
    return std::abs(h.nom(c, i) - h.nom(c, i - 1));
}

namespace {

void check_range(const HistoryTimeline &h, int j, int k)
{
    if (j < 1 || j >= k || k > h.size())
        throw BadRange(j, k);
}

} // namespace

int enom(const HistoryTimeline &h, std::string_view c, int j, int k)
{
    check_range(h, j, k);
    int sum = 0;
    for (int i = j + 1; i <= k; ++i)
        sum += enom_step(h, c, i);
    return sum;
}

double weighted_enom(const HistoryTimeline &h, std::string_view c, int j, int k, Weighting mode)
{
    check_range(h, j, k);
    double sum = 0;
    for (int i = j + 1; i <= k; ++i) {
        int exponent = mode == Weighting::Latest ? i - k : k - i + 1;
        sum += enom_step(h, c, i) * std::ldexp(1.0, exponent);
    }
    return sum;
}

std::vector<YwEntry> yw_rank(const HistoryTimeline &h, int j, int k)
{
    check_range(h, j, k);
    std::vector<YwEntry> out;
    for (const auto &c : h.class_names()) {
        out.push_back({c, weighted_enom(h, c, j, k, Weighting::Latest), enom(h, c, j, k),
                       weighted_enom(h, c, j, k, Weighting::Earliest)});
    }
    std::sort(out.begin(), out.end(), [](const YwEntry &a, const YwEntry &b) {
        if (a.lenom != b.lenom)
            return a.lenom > b.lenom;
        if (a.enom != b.enom)
            return a.enom > b.enom;
        return a.name < b.name;
    });
    return out;
}

std::vector<YwEntry> yw_rank(const HistoryTimeline &h) { return yw_rank(h, 1, h.size()); }

MetricMatrix metric_matrix(const SystemModel &model, const std::vector<std::string> &metrics)
{
    MetricMatrix m;
    m.metrics = metrics;
    for (const auto &c : model.system_classes()) {
        LogiscopeValues v = logiscope_mnemonics(model, c);
        std::vector<double> row;
        for (const auto &name : metrics) {
            auto x = v.get(name);
            if (!x)
                throw MissingMetric(name + " of " + c);
            row.push_back(*x);
        }
        m.modules.push_back(c);
        m.rows.push_back(std::move(row));
    }
    return m;
}

namespace {

Eigen::MatrixXd to_eigen(const MetricMatrix &m)
{
    Eigen::MatrixXd x(static_cast<Eigen::Index>(m.rows.size()), static_cast<Eigen::Index>(m.metrics.size()));
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        if (m.rows[i].size() != m.metrics.size())
            throw Error("metric matrix row " + std::to_string(i) + " has the wrong width");
        for (std::size_t j = 0; j < m.metrics.size(); ++j)
            x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m.rows[i][j];
    }
    return x;
}

Eigen::VectorXd raw_scores(const Eigen::MatrixXd &x, const ComplexityBaseline &b)
{
    const auto p = static_cast<Eigen::Index>(b.metrics.size());
    Eigen::MatrixXd z = x;
    for (Eigen::Index j = 0; j < p; ++j)
        z.col(j) = (x.col(j).array() - b.means[j]) / b.stddevs[j];
    Eigen::VectorXd rho = Eigen::VectorXd::Zero(x.rows());
    for (std::size_t c = 0; c < b.components.size(); ++c) {
        Eigen::VectorXd e = Eigen::Map<const Eigen::VectorXd>(b.components[c].data(), p);
        rho += b.eigenvalues[c] * (z * e);
    }
    return rho;
}

} // namespace

ComplexityBaseline fit_baseline(const MetricMatrix &m, std::string id)
{
    const auto n = static_cast<Eigen::Index>(m.rows.size());
    const auto p = static_cast<Eigen::Index>(m.metrics.size());
    if (p == 0)
        throw DegenerateBaseline("no metrics selected");
    if (n < p)
        throw DegenerateBaseline("baseline has " + std::to_string(n) + " modules for " + std::to_string(p) +
                                 " metrics");
    Eigen::MatrixXd x = to_eigen(m);

    ComplexityBaseline b;
    b.id = std::move(id);
    b.metrics = m.metrics;
    Eigen::MatrixXd z(n, p);
    for (Eigen::Index j = 0; j < p; ++j) {
        double mean = x.col(j).mean();
        double sd = std::sqrt((x.col(j).array() - mean).square().sum() / static_cast<double>(n));
        if (!(sd > 0))
            throw DegenerateBaseline("metric " + m.metrics[j] + " has zero variance");
        b.means.push_back(mean);
        b.stddevs.push_back(sd);
        z.col(j) = (x.col(j).array() - mean) / sd;
    }
    Eigen::MatrixXd corr = (z.transpose() * z) / static_cast<double>(n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(corr);
    if (solver.info() != Eigen::Success)
        throw DegenerateBaseline("eigendecomposition failed");
    // Eigen returns ascending eigenvalues.
    for (Eigen::Index k = p - 1; k >= 0; --k) {
        double lambda = solver.eigenvalues()(k);
        if (lambda <= 1.0)
            continue;
        Eigen::VectorXd e = solver.eigenvectors().col(k);
        if (e.sum() < 0)
            e = -e;
        b.eigenvalues.push_back(lambda);
        b.components.emplace_back(e.data(), e.data() + p);
    }
    if (b.eigenvalues.empty())
        throw DegenerateBaseline("no component has an eigenvalue above 1");

    Eigen::VectorXd raw = raw_scores(x, b);
    b.raw_mean = raw.mean();
    b.raw_stddev = std::sqrt((raw.array() - b.raw_mean).square().sum() / static_cast<double>(n));
    if (!(b.raw_stddev > 0))
        throw DegenerateBaseline("relative complexity has zero spread on the baseline");
    return b;
}

std::vector<double> relative_complexity(const MetricMatrix &m, const ComplexityBaseline &b)
{
    if (m.metrics != b.metrics)
        throw BaselineMismatch();
    Eigen::VectorXd raw = raw_scores(to_eigen(m), b);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(raw.size()));
    for (Eigen::Index i = 0; i < raw.size(); ++i)
        out.push_back(50.0 + 10.0 * (raw(i) - b.raw_mean) / b.raw_stddev);
    return out;
}

ChurnBuildRecord score_build(const MetricMatrix &m, const ComplexityBaseline &b)
{
    ChurnBuildRecord r;
    r.baseline_id = b.id;
    std::vector<double> rho = relative_complexity(m, b);
    for (std::size_t i = 0; i < rho.size(); ++i) {
        r.rho[m.modules[i]] = rho[i];
        r.total += rho[i];
    }
    r.mean = rho.empty() ? 0.0 : r.total / static_cast<double>(rho.size());
    return r;
}

std::string_view to_string(ChurnVerdict v)
{
    switch (v) {
    case ChurnVerdict::LaterMoreComplex:
        return "later-more-complex";
    case ChurnVerdict::LaterLessComplex:
        return "later-less-complex";
    case ChurnVerdict::Neutral:
        return "neutral";
    }
    return "neutral";
}

ChurnComparison churn_compare(const ChurnBuildRecord &earlier, const ChurnBuildRecord &later)
{
    if (earlier.baseline_id != later.baseline_id)
        throw BaselineMismatch();
    ChurnComparison c;
    for (const auto &[name, rho] : earlier.rho) {
        if (later.rho.count(name) != 0) {
            c.common.push_back(name);
        } else {
            c.removed.push_back(name);
        }
        c.r1 += rho;
    }
    for (const auto &[name, rho] : later.rho) {
        if (earlier.rho.count(name) == 0)
            c.added.push_back(name);
        c.r2 += rho;
    }
    if (c.r2 > c.r1)
        c.verdict = ChurnVerdict::LaterMoreComplex;
    else if (c.r2 < c.r1)
        c.verdict = ChurnVerdict::LaterLessComplex;
    return c;
}

} // namespace metriscope
