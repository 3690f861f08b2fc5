#include "metriscope/errors.hpp"
#include "metriscope/pipeline.hpp"
#include "metriscope/report.hpp"

#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <random>

using namespace metriscope;
using namespace metriscope::testing;

namespace {

LogiscopeValues record(const std::array<double, 13> &v)
{
    LogiscopeValues lv;
    for (std::size_t i = 0; i < v.size(); ++i)
        lv.values[i] = v[i];
    return lv;
}

int count_of(const std::string &text, const std::string &needle)
{
    int n = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1))
        ++n;
    return n;
}

MethodRecord method_at(int v, int ev, const std::string &name = "m()")
{
    MethodRecord r;
    r.class_name = "K";
    r.signature = name;
    r.complexity = {v, ev, 1};
    r.quadrant = quadrant(v, ev);
    return r;
}

QualityReport fixture_report(const std::string &dir)
{
    AnalysisInput in = load_input({fixture(dir)});
    SystemModel model = build_system_model(in.classes);
    return analyze(model, Config{}, in);
}

} // namespace

TEST(Report, JsonRoundTripOnFixtures)
{
    for (const char *dir : {"java/metric_test", "java/noh", "java/cbo_cf_dac", "java/wmc"}) {
        QualityReport r = fixture_report(dir);
        std::string json = report_to_json(r);
        QualityReport back = report_from_json(json);
        EXPECT_EQ(back, r) << dir;
        EXPECT_EQ(report_to_json(back), json) << dir;
        auto doc = nlohmann::json::parse(json);
        EXPECT_EQ(doc["schemaVersion"], kReportSchemaVersion);
    }
}

TEST(Report, DeterministicAcrossRuns)
{
    QualityReport a = fixture_report("java/metric_test");
    QualityReport b = fixture_report("java/metric_test");
    EXPECT_EQ(report_to_json(a), report_to_json(b));
    EXPECT_EQ(report_to_text(a), report_to_text(b));
}

TEST(Report, RejectsBadJson)
{
    EXPECT_THROW(report_from_json("not json"), Error);
    auto doc = nlohmann::json::parse(report_to_json(fixture_report("java/wmc")));
    doc["schemaVersion"] = 99;
    EXPECT_THROW(report_from_json(doc.dump()), Error);
    doc = nlohmann::json::parse(report_to_json(fixture_report("java/wmc")));
    doc.erase("classes");
    EXPECT_THROW(report_from_json(doc.dump()), Error);
}

TEST(Report, HistogramPercentages)
{
    CategoryHistogram h;
    EXPECT_EQ(h.percent(Category::Good), 0.0);
    h.add(Category::Excellent);
    h.add(Category::Good);
    h.add(Category::Good);
    EXPECT_EQ(h.total(), 3);
    EXPECT_DOUBLE_EQ(h.percent(Category::Good), 200.0 / 3);
    double sum = 0;
    for (auto c : {Category::Excellent, Category::Good, Category::Fair, Category::Poor})
        sum += h.percent(c);
    EXPECT_NEAR(sum, 100.0, 0.1);

    QualityReport r = fixture_report("java/metric_test");
    EXPECT_EQ(r.maintainability.total(), static_cast<int>(r.classes.size()));
    for (const auto &ch : r.criteria)
        EXPECT_EQ(ch.total(), static_cast<int>(r.classes.size()));
    CategoryHistogram recount;
    for (const auto &c : r.classes)
        recount.add(c.maintainability);
    EXPECT_EQ(recount, r.maintainability);
}

TEST(Kiviat, MarksOutOfRangeVertices)
{
    RangeTable t = RangeTable::defaults();
    auto lexer = kiviat_rows(t, record({0.19, 147, 3, 0, 7, 6, 788, 268, 65, 17, 3, 1, 0}));
    std::string svg = kiviat_svg(lexer, "marf.LexerLike");
    EXPECT_EQ(count_of(svg, "class=\"violation\""), 4);
    for (const char *m : {"cl_comf", "cl_stat", "cl_wmc", "cu_cdused"})
        EXPECT_NE(svg.find(std::string("data-metric=\"") + m + "\""), std::string::npos) << m;
    EXPECT_EQ(count_of(svg, "class=\"axis\""), 13);
    EXPECT_EQ(count_of(svg, "class=\"min-ring\""), 1);
    EXPECT_EQ(count_of(svg, "class=\"max-ring\""), 1);
    EXPECT_EQ(svg, kiviat_svg(lexer, "marf.LexerLike"));

    auto fine = kiviat_rows(t, record({0.5, 40, 2, 0, 5, 3, 120, 30, 8, 2, 1, 1, 0}));
    EXPECT_EQ(count_of(kiviat_svg(fine, "Fine"), "class=\"violation\""), 0);

    lexer.pop_back();
    EXPECT_THROW(kiviat_svg(lexer, "Short"), WrongAxisCount);
}

TEST(Scatter, QuadrantCounts)
{
    std::vector<MethodRecord> simple{method_at(1, 1, "a()"), method_at(1, 1, "b()"), method_at(1, 1, "c()")};
    ScatterResult s = scatter(simple);
    EXPECT_EQ(s.quadrant_counts, (std::array<int, 4>{0, 0, 3, 0}));
    EXPECT_EQ(s.csv.substr(0, s.csv.find('\n')), "method,class,v,ev,quadrant");
    EXPECT_EQ(count_of(s.csv, "\n"), 4);

    simple.push_back(method_at(12, 6, "hard(int,String)"));
    ScatterResult mixed = scatter(simple);
    EXPECT_EQ(mixed.quadrant_counts[0], 1);
    EXPECT_NE(mixed.csv.find("\"hard(int,String)\",K,12,6,I\n"), std::string::npos);
}

TEST(Scatter, CountsPartitionMethods)
{
    std::mt19937 rng(3);
    std::vector<MethodRecord> ms;
    for (int i = 0; i < 300; ++i) {
        int v = 1 + static_cast<int>(rng() % 30);
        int ev = 1 + static_cast<int>(rng() % v);
        ms.push_back(method_at(v, ev));
        ScatterResult s = scatter(ms);
        EXPECT_EQ(s.quadrant_counts[0] + s.quadrant_counts[1] + s.quadrant_counts[2] + s.quadrant_counts[3],
                  static_cast<int>(ms.size()));
    }
    EXPECT_EQ(scatter({}).quadrant_counts, (std::array<int, 4>{}));
}
