#include "metriscope/errors.hpp"
#include "metriscope/quality.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace metriscope;

namespace {

LogiscopeValues record(const std::array<double, 13> &v)
{
    LogiscopeValues lv;
    for (std::size_t i = 0; i < v.size(); ++i)
        lv.values[i] = v[i];
    return lv;
}

// Values in canonical mnemonic order.
const std::array<double, 13> kLexer{0.19, 147, 3, 0, 7, 6, 788, 268, 65, 17, 3, 1, 0};
const std::array<double, 13> kNeural{0.26, 354, 17, 8, 27, 21, 1348, 372, 115, 33, 3, 6, 0};

std::set<std::string> flagged(const std::vector<KiviatRow> &rows)
{
    std::set<std::string> out;
    for (const auto &r : rows)
        if (r.status.status == -1)
            out.insert(r.mnemonic);
    return out;
}

CriterionResult with_category(Category c)
{
    CriterionResult r;
    r.category = c;
    return r;
}

Category random_category(std::mt19937 &rng) { return static_cast<Category>(rng() % 4); }

} // namespace

TEST(Quality, MetricStatusExamples)
{
    RangeTable t = RangeTable::defaults();
    EXPECT_EQ(metric_status(t, "cl_comf", 0.19), (MetricStatus{-1, Side::Low}));
    EXPECT_EQ(metric_status(t, "cl_wmc", 60), (MetricStatus{0, Side::In}));
    EXPECT_EQ(metric_status(t, "cu_cdused", 33), (MetricStatus{-1, Side::High}));
    EXPECT_EQ(metric_status(t, "cl_line", 1e9), (MetricStatus{0, Side::In}));
    EXPECT_EQ(metric_status(t, "cl_comf", std::nullopt), (MetricStatus{-1, Side::Low}));
    EXPECT_THROW(metric_status(t, "cl_bogus", 1), UnknownMnemonic);
}

TEST(Quality, LexerRecord)
{
    RangeTable t = RangeTable::defaults();
    LogiscopeValues lv = record(kLexer);
    auto rows = kiviat_rows(t, lv);
    ASSERT_EQ(rows.size(), 13u);
    EXPECT_EQ(flagged(rows), (std::set<std::string>{"cl_comf", "cl_stat", "cl_wmc", "cu_cdused"}));
    CriterionResult a = criterion(t, lv, Criterion::Analyzability);
    EXPECT_EQ(a.category, Category::Poor);
    EXPECT_EQ(a.in_range_count, 1);
    EXPECT_EQ(recommendations(rows).size(), 4u);
}

TEST(Quality, NeuralRecord)
{
    RangeTable t = RangeTable::defaults();
    LogiscopeValues lv = record(kNeural);
    auto rows = kiviat_rows(t, lv);
    EXPECT_EQ(flagged(rows).size(), 8u);
    EXPECT_EQ(criterion(t, lv, Criterion::Changeability).category, Category::Poor);
    EXPECT_EQ(criterion(t, lv, Criterion::Changeability).in_range_count, 0);
    auto recs = recommendations(rows);
    ASSERT_EQ(recs.size(), 8u);
    std::set<std::string> keys;
    for (const auto &r : recs)
        keys.insert(r.mnemonic);
    EXPECT_EQ(keys, flagged(rows));
}

TEST(Quality, RowOrderAndCrossCheck)
{
    RangeTable t = RangeTable::defaults();
    auto rows = kiviat_rows(t, record(kNeural));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].mnemonic, mnemonic_names()[i]);
        EXPECT_EQ(rows[i].status, metric_status(t, rows[i].mnemonic, rows[i].value));
    }
    EXPECT_EQ(rows.front().mnemonic, "cl_comf");
    EXPECT_EQ(rows.back().mnemonic, "in_noc");
}

TEST(Quality, AllZeroRecordFlagsOnlyCommentRate)
{
    RangeTable t = RangeTable::defaults();
    LogiscopeValues lv = record({});
    EXPECT_EQ(flagged(kiviat_rows(t, lv)), std::set<std::string>{"cl_comf"});
    lv.set("cl_comf", std::nullopt);
    auto rows = kiviat_rows(t, lv);
    EXPECT_EQ(flagged(rows), std::set<std::string>{"cl_comf"});
    EXPECT_EQ(rows[0].status.side, Side::Low);
}

TEST(Quality, MissingMetricIsReported)
{
    LogiscopeValues lv = record(kLexer);
    lv.set("cl_wmc", std::nullopt);
    EXPECT_THROW(criterion(RangeTable::defaults(), lv, Criterion::Testability), MissingMetric);
    EXPECT_THROW(kiviat_rows(RangeTable::defaults(), lv), MissingMetric);
    EXPECT_NO_THROW(criterion(RangeTable::defaults(), lv, Criterion::Changeability));
}

TEST(Quality, InRangeRecordIsExcellentEverywhere)
{
    RangeTable t = RangeTable::defaults();
    LogiscopeValues lv = record({0.5, 40, 2, 0, 5, 3, 120, 30, 8, 2, 1, 1, 0});
    for (const auto &r : all_criterion_results(t, lv))
        EXPECT_EQ(r.category, Category::Excellent) << to_string(r.criterion);
    EXPECT_EQ(maintainability(all_criterion_results(t, lv)), Category::Excellent);
    EXPECT_TRUE(recommendations(kiviat_rows(t, lv)).empty());
}

TEST(Quality, MaintainabilityPoints)
{
    using C = Category;
    EXPECT_EQ(maintainability({with_category(C::Good), with_category(C::Good), with_category(C::Fair),
                               with_category(C::Good)}),
              C::Fair);
    EXPECT_EQ(maintainability_from_points(12), C::Excellent);
    EXPECT_EQ(maintainability_from_points(11), C::Excellent);
    EXPECT_EQ(maintainability_from_points(10), C::Good);
    EXPECT_EQ(maintainability_from_points(8), C::Good);
    EXPECT_EQ(maintainability_from_points(7), C::Fair);
    EXPECT_EQ(maintainability_from_points(5), C::Fair);
    EXPECT_EQ(maintainability_from_points(4), C::Poor);
    EXPECT_EQ(maintainability_from_points(0), C::Poor);
    EXPECT_EQ(category_points(C::Excellent), 3);
    EXPECT_EQ(category_points(C::Poor), 0);
}

TEST(Quality, MaintainabilityIgnoresCriterionOrder)
{
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        std::array<CriterionResult, 4> a;
        for (auto &c : a)
            c = with_category(random_category(rng));
        Category want = maintainability(a);
        std::shuffle(a.begin(), a.end(), rng);
        EXPECT_EQ(maintainability(a), want);
    }
}

TEST(Quality, FixingAConstituentNeverWorsens)
{
    RangeTable t = RangeTable::defaults();
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> d(0, 150);
    for (int round = 0; round < 300; ++round) {
        std::array<double, 13> v{};
        for (auto &x : v)
            x = d(rng);
        v[0] = d(rng) / 150.0;
        LogiscopeValues lv = record(v);
        for (Criterion c : all_criteria()) {
            CriterionResult before = criterion(t, lv, c);
            for (auto m : criterion_constituents(c)) {
                const Range &r = t.range(m);
                LogiscopeValues fixed = lv;
                fixed.set(m, std::isfinite(r.max) ? r.max : r.min);
                CriterionResult after = criterion(t, fixed, c);
                EXPECT_LE(static_cast<int>(after.category), static_cast<int>(before.category));
                EXPECT_GE(after.in_range_count, before.in_range_count);
            }
        }
    }
}

TEST(Quality, AdviceWording)
{
    RangeTable t = RangeTable::defaults();
    auto recs = recommendations(kiviat_rows(t, record(kLexer)));
    ASSERT_FALSE(recs.empty());
    EXPECT_EQ(recs[0].mnemonic, "cl_comf");
    EXPECT_EQ(recs[0].side, Side::Low);
    EXPECT_NE(recs[0].advice.find("comment"), std::string::npos);
    for (const auto &r : recs)
        EXPECT_FALSE(r.advice.empty());
    EXPECT_TRUE(recommendations({}).empty());
}

TEST(Config, DefaultsWhenEmpty)
{
    Config c = parse_config("");
    EXPECT_EQ(c, Config{});
    EXPECT_EQ(c.ranges.range("cl_wmc"), (Range{0, 60}));
    EXPECT_EQ(c.ranges.range("cl_comf").min, 0.2);
    EXPECT_TRUE(std::isinf(c.ranges.range("cl_line").max));
}

TEST(Config, SectionsOverride)
{
    Config c = parse_config("[ranges]\ncl_wmc = 0, 40\ncl_line = -inf, inf\n"
                            "[class-thresholds]\ncbo = 4\n"
                            "[method-thresholds]\nv = 15\n"
                            "[sig]\nvolume_kloc = 1, 2, 3, 4\nduplication_block = 8\n"
                            "[mi]\nlog_base = e\n"
                            "[evolution]\nmetrics = cl_stat, cl_func\n"
                            "[qmood]\nbaseline = old.json\n");
    EXPECT_EQ(c.ranges.range("cl_wmc"), (Range{0, 40}));
    EXPECT_EQ(c.ranges.class_thresholds.cbo, 4);
    EXPECT_EQ(c.ranges.method_thresholds.v, 15);
    EXPECT_EQ(c.sig.volume_kloc, (std::array<double, 4>{1, 2, 3, 4}));
    EXPECT_EQ(c.sig.duplication_block, 8);
    EXPECT_EQ(c.mi_log_base, LogBase::Natural);
    EXPECT_EQ(c.evolution_metrics, (std::vector<std::string>{"cl_stat", "cl_func"}));
    EXPECT_EQ(c.qmood_baseline, "old.json");
    EXPECT_EQ(metric_status(c.ranges, "cl_wmc", 50).side, Side::High);
}

TEST(Config, ErrorsCarryTheLine)
{
    auto line_of = [](const std::string &text) {
        try {
            parse_config(text);
        } catch (const ConfigError &e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of("[ranges]\ncl_wmc = 0, 60\ncl_nope = 1, 2\n"), 3);
    EXPECT_EQ(line_of("[ranges]\ncl_wmc = 9, 1\n"), 2);
    EXPECT_EQ(line_of("[mi]\nlog_base = 10\n"), 2);
    EXPECT_EQ(line_of("[colors]\nred = 1\n"), 2);
    EXPECT_EQ(line_of("[class-thresholds]\ncbo = many\n"), 2);
    EXPECT_GT(line_of("[ranges\n"), 0);
    EXPECT_THROW(load_config("/nonexistent/metriscope.ini"), ConfigError);
}

TEST(Config, FingerprintTracksContent)
{
    Config a = parse_config("");
    Config b = parse_config("[ranges]\ncl_wmc = 0, 61\n");
    EXPECT_EQ(config_fingerprint(a), config_fingerprint(Config{}));
    EXPECT_NE(config_fingerprint(a), config_fingerprint(b));
    EXPECT_EQ(config_fingerprint(a).size(), 16u);
}
