#include "metriscope/errors.hpp"
#include "metriscope/facts_io.hpp"
#include "metriscope/model.hpp"

#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace metriscope;
using namespace metriscope::testing;

namespace {

ClassInfo cls(std::string name, std::vector<std::string> supers = {})
{
    ClassInfo c;
    c.name = std::move(name);
    c.superclasses = std::move(supers);
    return c;
}

std::vector<ClassInfo> sorted(std::vector<ClassInfo> v)
{
    std::sort(v.begin(), v.end(), [](const ClassInfo &a, const ClassInfo &b) { return a.name < b.name; });
    return v;
}

} // namespace

TEST(Model, TwoClassChain)
{
    SystemModel m = build_system_model({cls("p.A"), cls("p.B", {"A"})});
    EXPECT_EQ(m.descendants("p.A"), std::vector<std::string>{"p.B"});
    EXPECT_EQ(m.ancestors("p.B"), std::vector<std::string>{"p.A"});
    EXPECT_TRUE(m.ancestors("p.A").empty());
    EXPECT_EQ(m.total_classes(), 2u);
}

TEST(Model, AncestorsOfDeepestFixtureClass)
{
    SystemModel m = model_from_sources("java/dit");
    std::vector<std::string> want{"dit.ClassC", "dit.ClassB", "dit.ClassA"};
    EXPECT_EQ(m.ancestors("dit.ClassE"), want);
    EXPECT_EQ(m.children("dit.ClassB"), (std::vector<std::string>{"dit.ClassC", "dit.ClassD"}));
}

TEST(Model, RejectsCyclesAndDuplicates)
{
    EXPECT_THROW(build_system_model({cls("C", {"C"})}), InheritanceCycle);
    EXPECT_THROW(build_system_model({cls("A", {"B"}), cls("B", {"A"})}), InheritanceCycle);
    EXPECT_THROW(build_system_model({cls("A"), cls("A")}), DuplicateClass);
    try {
        build_system_model({cls("A", {"B"}), cls("B", {"C"}), cls("C", {"A"})});
        FAIL();
    } catch (const InheritanceCycle &e) {
        EXPECT_GE(e.path().size(), 3u);
    }
}

TEST(Model, UnknownClassQueriesThrow)
{
    SystemModel m = build_system_model({cls("A")});
    EXPECT_THROW(m.get("Nope"), UnknownClass);
    EXPECT_THROW(m.ancestors("Nope"), UnknownClass);
    EXPECT_THROW(m.uses("A", "Nope"), UnknownClass);
}

TEST(Model, ExternalParentsBecomeStubs)
{
    SystemModel m = build_system_model({cls("p.A", {"java.util.ArrayList"})});
    EXPECT_EQ(m.total_classes(), 1u);
    ASSERT_NE(m.find("java.util.ArrayList"), nullptr);
    EXPECT_TRUE(m.get("java.util.ArrayList").is_external);
    EXPECT_TRUE(m.ancestors("p.A").empty());
    EXPECT_EQ(m.external_depth("p.A"), 1);
}

TEST(Model, UsesIsDirectional)
{
    SystemModel m = model_from_sources("java/cbo_cf_dac");
    EXPECT_TRUE(m.uses("cbo_cf_dac.ClassC", "cbo_cf_dac.ClassB"));
    EXPECT_FALSE(m.uses("cbo_cf_dac.ClassB", "cbo_cf_dac.ClassC"));
    EXPECT_FALSE(m.uses("cbo_cf_dac.ClassB", "cbo_cf_dac.ClassA"));
}

TEST(Model, EmptyClassUsesNothing)
{
    SystemModel m = build_system_model({cls("A"), cls("B")});
    EXPECT_FALSE(m.uses("A", "B"));
    EXPECT_FALSE(m.uses("B", "A"));
}

TEST(Model, RandomHierarchiesMatchReachabilityOracle)
{
    std::mt19937 rng(21);
    for (int round = 0; round < 30; ++round) {
        const int n = 20;
        std::vector<ClassInfo> classes;
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false)); // reach[i][j]: j is an ancestor of i
        for (int i = 0; i < n; ++i) {
            std::vector<std::string> supers;
            for (int j = 0; j < i; ++j) {
                if (rng() % 7 == 0) {
                    supers.push_back("K" + std::to_string(j));
                    reach[i][j] = true;
                }
            }
            classes.push_back(cls("K" + std::to_string(i), supers));
        }
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (reach[i][k] && reach[k][j])
                        reach[i][j] = true;
        SystemModel m = build_system_model(classes);
        for (int i = 0; i < n; ++i) {
            std::string ci = "K" + std::to_string(i);
            const auto &anc = m.ancestors(ci);
            std::set<std::string> got(anc.begin(), anc.end());
            std::set<std::string> want;
            for (int j = 0; j < n; ++j)
                if (reach[i][j])
                    want.insert("K" + std::to_string(j));
            EXPECT_EQ(got, want);
            EXPECT_EQ(got.count(ci), 0u);
            // Duality with descendants.
            std::set<std::string> desc(m.descendants(ci).begin(), m.descendants(ci).end());
            std::set<std::string> dual;
            for (int j = 0; j < n; ++j)
                if (reach[j][i])
                    dual.insert("K" + std::to_string(j));
            EXPECT_EQ(desc, dual);
        }
    }
}

TEST(TypeNames, ErasureAndInvocationKeys)
{
    EXPECT_EQ(erase_type("Map<String, List<Foo>>[]"), "Map");
    EXPECT_EQ(erase_type("String..."), "String");
    EXPECT_EQ(erase_type("java.util.List<int[]>"), "java.util.List");
    auto inv = Invocation::parse("a.b.C.run(int,String)", 3);
    ASSERT_TRUE(inv);
    EXPECT_EQ(inv->target_class, "a.b.C");
    EXPECT_EQ(inv->method, "run");
    EXPECT_EQ(inv->argument_types, (std::vector<std::string>{"int", "String"}));
    EXPECT_EQ(inv->multiplicity, 3);
    EXPECT_EQ(inv->target(), "a.b.C.run(int,String)");
    EXPECT_FALSE(Invocation::parse("no-parens", 1));
}

TEST(Facts, FieldNamesAreExact)
{
    std::mt19937 rng(2);
    auto facts = random_facts(rng, 6);
    auto doc = nlohmann::json::parse(facts_to_json(facts));
    ASSERT_TRUE(doc.contains("classes"));
    for (const auto &c : doc["classes"]) {
        for (const char *k : {"name", "kind", "extends", "lines", "commentLines", "attributes", "methods"})
            EXPECT_TRUE(c.contains(k)) << k;
        for (const auto &a : c["attributes"])
            for (const char *k : {"name", "type", "visibility", "static"})
                EXPECT_TRUE(a.contains(k)) << k;
        for (const auto &m : c["methods"]) {
            for (const char *k : {"name", "paramTypes", "visibility", "abstract", "static", "accesses", "invokes"})
                EXPECT_TRUE(m.contains(k)) << k;
            for (const auto &i : m["invokes"]) {
                EXPECT_TRUE(i.contains("target"));
                EXPECT_TRUE(i.contains("count"));
            }
            if (m.contains("cfg"))
                for (const char *k : {"nodes", "edges", "kinds"})
                    EXPECT_TRUE(m["cfg"].contains(k)) << k;
        }
    }
}

TEST(Facts, RoundTripIsIdentity)
{
    std::mt19937 rng(8);
    for (int round = 0; round < 50; ++round) {
        auto facts = random_facts(rng, 1 + static_cast<int>(rng() % 12));
        std::string text = facts_to_json(facts);
        auto back = facts_from_json(text);
        EXPECT_EQ(sorted(back), sorted(facts));
        EXPECT_EQ(facts_to_json(back), text);
        SystemModel a = build_system_model(facts);
        SystemModel b = build_system_model(facts_from_json(facts_to_json(a.facts())));
        EXPECT_TRUE(a == b);
    }
}

TEST(Facts, MalformedInputThrows)
{
    EXPECT_THROW(facts_from_json("{"), Error);
    EXPECT_THROW(facts_from_json("42"), Error);
    EXPECT_THROW(facts_from_json(R"({"other":[]})"), Error);
    EXPECT_THROW(facts_from_json(R"({"classes":[{"name":"A","kind":"blob"}]})"), Error);
}
