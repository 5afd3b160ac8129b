#include <gtest/gtest.h>

#include "aw/compass.hpp"
#include "aw/error.hpp"

using aw::Rational;
using aw::RepParams;
using L = aw::GeneratorLabel;

namespace {

const aw::CompassGraph &graph() {
    static const aw::CompassGraph g =
        aw::build_compass(aw::GeneratorRegistry::build(RepParams{Rational(5, 3), {1, 2, 1, 3}, 4, 2}));
    return g;
}

std::size_t count(const std::string &s, const std::string &needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST(Compass, Edges) {
    const auto &g = graph();
    EXPECT_EQ(g.vertices.size(), 5u);
    ASSERT_EQ(g.dashed_edges.size(), 5u);
    EXPECT_EQ(g.solid_edges.size(), 5u);
    EXPECT_EQ(g.dashed_edges[0].from, L::Q12);
    EXPECT_EQ(g.dashed_edges[0].to, L::Q23);
    EXPECT_EQ(g.dashed_edges[0].derived, L::Q13);
    EXPECT_EQ(g.dashed_edges[4].from, L::Q234);
    EXPECT_EQ(g.dashed_edges[4].to, L::Q12);
}

TEST(Compass, Triangles) {
    const auto &g = graph();
    ASSERT_EQ(g.triangles.size(), 5u);
    // Q34 -> Q123 closes a triangle through Q12.
    EXPECT_EQ(g.dashed_edges[g.triangles[2].edge].from, L::Q34);
    EXPECT_EQ(g.triangles[2].apex, L::Q12);
    EXPECT_EQ(g.triangles[0].apex, L::Q123);
}

TEST(Compass, Dot) {
    const auto dot = aw::export_dot(graph());
    EXPECT_EQ(count(dot, "style=dashed"), 5u);
    EXPECT_EQ(count(dot, "style=solid"), 5u);
    EXPECT_NE(dot.find("Q12 -> Q23 [style=dashed, label=\"Q13\"];"), std::string::npos);
    EXPECT_EQ(dot.rfind("digraph compass {\n", 0), 0u);
    EXPECT_EQ(dot, aw::export_dot(graph()));
}

TEST(Compass, RequiresFourLegs) {
    auto reg = aw::GeneratorRegistry::build(RepParams{Rational(5, 3), {1, 2, 1}, 3, 2});
    EXPECT_THROW(aw::build_compass(reg), aw::InvalidConfig);
}
