#include "metriscope/cohesion.hpp"
#include "metriscope/errors.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace metriscope;
using namespace metriscope::testing;

namespace {

// Class K with attributes and methods given as attribute-name lists.
ClassInfo make(const std::vector<std::string> &attrs, const std::vector<std::vector<std::string>> &methods)
{
    ClassInfo c;
    c.name = "K";
    for (const auto &a : attrs)
        c.attributes.push_back({a, "int", Visibility::Private, false});
    for (std::size_t i = 0; i < methods.size(); ++i) {
        MethodInfo m;
        m.name = "m" + std::to_string(i);
        for (const auto &a : methods[i])
            m.accessed_attributes.push_back("K." + a);
        c.methods.push_back(m);
    }
    return c;
}

CohesionGraph graph_of(const ClassInfo &c)
{
    SystemModel m = build_system_model({c});
    return cohesion_graph(m, c.name);
}

template <class F>
auto maybe(F f) -> std::optional<decltype(f())>
{
    try {
        return f();
    } catch (const Undefined &) {
        return std::nullopt;
    }
}

} // namespace

TEST(Cohesion, AllMethodsShareOneAttribute)
{
    CohesionGraph g = graph_of(make({"x"}, {{"x"}, {"x"}, {"x"}}));
    EXPECT_EQ(lcom(g, LcomVariant::CK), 0);
    EXPECT_EQ(lcom(g, LcomVariant::LH), 1);
    EXPECT_EQ(lcom(g, LcomVariant::HM), 1);
    EXPECT_EQ(lcom(g, LcomVariant::HS), 0);
    EXPECT_EQ(coh(g), 1);
}

TEST(Cohesion, DisjointAttributes)
{
    CohesionGraph g = graph_of(make({"x", "y", "z"}, {{"x"}, {"y"}, {"z"}}));
    EXPECT_EQ(lcom(g, LcomVariant::CK), 3);
    EXPECT_EQ(lcom(g, LcomVariant::LH), 3);
    EXPECT_EQ(lcom(g, LcomVariant::HS), 1);
    TccLcc t = tcc_lcc(g);
    EXPECT_EQ(t.tcc, 0);
    EXPECT_EQ(t.lcc, 0);
}

TEST(Cohesion, ChainGivesTightTwoThirdsLooseOne)
{
    CohesionGraph g = graph_of(make({"x", "y"}, {{"x"}, {"x", "y"}, {"y"}}));
    TccLcc t = tcc_lcc(g);
    EXPECT_DOUBLE_EQ(t.tcc, 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(t.lcc, 1.0);
}

TEST(Cohesion, CompleteSharing)
{
    TccLcc t = tcc_lcc(graph_of(make({"x", "y"}, {{"x", "y"}, {"x"}, {"y", "x"}})));
    EXPECT_EQ(t.tcc, 1);
    EXPECT_EQ(t.lcc, 1);
}

TEST(Cohesion, CohBounds)
{
    EXPECT_EQ(coh(graph_of(make({"a", "b"}, {{"a", "b"}, {"a", "b"}}))), 1);
    EXPECT_EQ(coh(graph_of(make({"a", "b"}, {{}, {}}))), 0);
}

TEST(Cohesion, SimilarityCases)
{
    EXPECT_EQ(similarity_cohesion(graph_of(make({"a", "b"}, {{"a", "b"}, {"a", "b"}}))), 1);
    EXPECT_DOUBLE_EQ(similarity_cohesion(graph_of(make({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}))), 1.0 / 3.0);
    EXPECT_EQ(similarity_cohesion(graph_of(make({"a"}, {{}, {}}))), 0);
}

TEST(Cohesion, PreconditionsRaiseUndefined)
{
    CohesionGraph none = graph_of(make({"a"}, {}));
    EXPECT_THROW(lcom(none, LcomVariant::CK), Undefined);
    EXPECT_THROW(lcom(none, LcomVariant::LH), Undefined);
    EXPECT_THROW(coh(none), Undefined);
    CohesionGraph one = graph_of(make({"a"}, {{"a"}}));
    EXPECT_THROW(lcom(one, LcomVariant::HS), Undefined);
    EXPECT_THROW(tcc_lcc(one), Undefined);
    EXPECT_THROW(similarity_cohesion(one), Undefined);
    EXPECT_THROW(coh(graph_of(make({}, {{}, {}}))), Undefined);
    EXPECT_THROW(lcom(graph_of(make({}, {{}, {}})), LcomVariant::HS), Undefined);
}

TEST(Cohesion, ConstructorsAndInheritedAttributesExcluded)
{
    ClassInfo base = make({"shared"}, {});
    base.name = "Base";
    ClassInfo c = make({"x"}, {{"x"}, {"x"}});
    c.superclasses = {"Base"};
    MethodInfo ctor;
    ctor.name = "K";
    c.methods.push_back(ctor);
    c.methods[0].accessed_attributes.push_back("K.shared");
    SystemModel m = build_system_model({base, c});
    CohesionGraph g = cohesion_graph(m, "K");
    EXPECT_EQ(g.method_count(), 2);
    EXPECT_EQ(g.attributes, std::vector<std::string>{"x"});
    EXPECT_EQ(g.accesses[0], std::set<std::string>{"x"});
}

TEST(Cohesion, CallEdgesJoinComponents)
{
    ClassInfo c = make({"x", "y"}, {{"x"}, {"y"}});
    c.methods[0].invocations.push_back({"K", "m1", {}, 1});
    CohesionGraph g = graph_of(c);
    EXPECT_EQ(lcom(g, LcomVariant::LH), 2);
    EXPECT_EQ(lcom(g, LcomVariant::HM), 1);
}

TEST(Cohesion, RandomClassesMatchOracleAndInvariants)
{
    std::mt19937 rng(2024);
    for (int i = 0; i < 300; ++i) {
        ClassInfo c = random_cohesion_class(rng, "p.K" + std::to_string(i));
        CohesionExpect want = cohesion_oracle(c);
        CohesionGraph g = graph_of(c);
        auto ck = maybe([&] { return lcom(g, LcomVariant::CK); });
        auto lh = maybe([&] { return lcom(g, LcomVariant::LH); });
        auto hm = maybe([&] { return lcom(g, LcomVariant::HM); });
        auto hs = maybe([&] { return lcom(g, LcomVariant::HS); });
        auto ch = maybe([&] { return coh(g); });
        auto tl = maybe([&] { return tcc_lcc(g); });
        auto sim = maybe([&] { return similarity_cohesion(g); });
        EXPECT_EQ(ck, want.ck);
        EXPECT_EQ(lh, want.lh);
        EXPECT_EQ(hm, want.hm);
        EXPECT_EQ(hs.has_value(), want.hs.has_value());
        if (hs && want.hs)
            EXPECT_NEAR(*hs, *want.hs, 1e-12);
        EXPECT_EQ(ch.has_value(), want.coh.has_value());
        if (ch && want.coh)
            EXPECT_NEAR(*ch, *want.coh, 1e-12);
        ASSERT_EQ(tl.has_value(), want.tcc.has_value());
        if (tl) {
            EXPECT_DOUBLE_EQ(tl->tcc, *want.tcc);
            EXPECT_DOUBLE_EQ(tl->lcc, *want.lcc);
            EXPECT_LE(tl->tcc, tl->lcc);
        }
        EXPECT_EQ(sim.has_value(), want.sim.has_value());
        if (sim && want.sim)
            EXPECT_NEAR(*sim, *want.sim, 1e-12);
        if (lh && hm)
            EXPECT_LE(*hm, *lh);
        if (hs) {
            EXPECT_GE(*hs, 0.0);
            EXPECT_LE(*hs, 2.0);
        }
    }
}

TEST(Cohesion, RenamingInvariance)
{
    std::mt19937 rng(6);
    for (int i = 0; i < 50; ++i) {
        ClassInfo c = random_cohesion_class(rng, "A");
        ClassInfo r = c;
        r.name = "B";
        for (auto &a : r.attributes)
            a.name = "z_" + a.name;
        for (auto &m : r.methods) {
            if (m.name == "A")
                m.name = "B";
            else
                m.name = "q_" + m.name;
            for (auto &acc : m.accessed_attributes)
                acc = "B.z_" + acc.substr(2);
            for (auto &inv : m.invocations) {
                inv.target_class = "B";
                inv.method = "q_" + inv.method;
            }
        }
        CohesionGraph g1 = graph_of(c), g2 = graph_of(r);
        EXPECT_EQ(maybe([&] { return coh(g1); }), maybe([&] { return coh(g2); }));
        EXPECT_EQ(maybe([&] { return similarity_cohesion(g1); }), maybe([&] { return similarity_cohesion(g2); }));
        EXPECT_EQ(maybe([&] { return lcom(g1, LcomVariant::HM); }), maybe([&] { return lcom(g2, LcomVariant::HM); }));
    }
}

TEST(Cohesion, FullSharingMeansZeroCk)
{
    std::mt19937 rng(9);
    for (int i = 0; i < 50; ++i) {
        int m = 1 + static_cast<int>(rng() % 6);
        std::vector<std::vector<std::string>> methods(m, {"common"});
        for (auto &ms : methods)
            if (rng() % 2)
                ms.push_back("extra");
        EXPECT_EQ(lcom(graph_of(make({"common", "extra"}, methods)), LcomVariant::CK), 0);
    }
}
