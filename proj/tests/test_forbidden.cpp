#include "bootperc/constructions.hpp"
#include "bootperc/forbidden.hpp"
#include "bootperc/percolation.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace bootperc;
using testing_support::Gen;
using testing_support::labels;

namespace {

/// Degree condition straight from coordinates.
auto oracle_forbidden(const Grid & g, int r, const VertexSet & h) -> bool
{
    bool ok = true;
    h.for_each([&](int i) {
        int outside = 0;
        for (const auto & w : testing_support::coords_neighbors(g, g.vertex(i)))
            outside += h.contains(g.index(w)) ? 0 : 1;
        ok = ok && outside < r;
    });
    return ok;
}

auto count_kind(const std::vector<ForbiddenSubgraph> & cat, SubgraphKind kind) -> int
{
    int n = 0;
    for (const auto & h : cat)
        n += h.kind == kind ? 1 : 0;
    return n;
}

auto contains_support(const std::vector<ForbiddenSubgraph> & cat, const VertexSet & s) -> bool
{
    for (const auto & h : cat)
        if (h.support == s)
            return true;
    return false;
}

} // namespace

TEST(IsForbidden, Examples)
{
    const Grid g35(3, 5);
    EXPECT_TRUE(is_forbidden(g35, 3, labels(g35, {"a_2", "b_2", "c_2"})));
    const Grid g46(4, 6);
    EXPECT_TRUE(is_forbidden(g46, 3, labels(g46, {"b_2", "b_3", "c_2", "c_3"})));
    EXPECT_FALSE(is_forbidden(g46, 3, labels(g46, {"b_2"})));
    EXPECT_THROW(is_forbidden(g46, 3, g46.empty_set()), std::invalid_argument);
    // a non-induced boundary path (with a chord) is still accepted by the generic check
    EXPECT_TRUE(is_forbidden(g46, 3, labels(g46, {"a_1", "a_2", "b_2", "b_1"})));
}

TEST(IsForbidden, AgreesWithOracleOnRandomSets)
{
    Gen gen(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const Grid g = gen.grid(6, 8);
        const int r = gen.uniform(1, 4);
        auto h = gen.subset(g, 0.4);
        if (h.empty())
            h.insert(0);
        ASSERT_EQ(is_forbidden(g, r, h), oracle_forbidden(g, r, h));
    }
}

TEST(Catalog, Examples)
{
    const auto c33 = enumerate_catalog(Grid(3, 3));
    EXPECT_EQ(count_kind(c33, SubgraphKind::four_cycle), 4);

    const Grid g35(3, 5);
    const auto c35 = enumerate_catalog(g35);
    int rows = 0, cols = 0;
    for (const auto & h : c35)
        if (h.kind == SubgraphKind::fiber)
            (h.support.size() == 5 ? rows : cols) += 1;
    EXPECT_EQ(cols, 5);
    EXPECT_EQ(rows, 3);

    const Grid g46(4, 6);
    const auto c46 = enumerate_catalog(g46, {.max_path_len = 5});
    EXPECT_TRUE(contains_support(c46, labels(g46, {"a_1", "a_2"})));
    EXPECT_TRUE(contains_support(c46, labels(g46, {"a_1", "b_1", "b_2", "c_2", "d_2"})));
    EXPECT_FALSE(contains_support(c46, labels(g46, {"b_2", "b_3"})));
}

TEST(Catalog, SortedAndUniqueSupports)
{
    const auto cat = enumerate_catalog(Grid(4, 5));
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        EXPECT_TRUE(seen.insert(cat[i].support.members()).second);
        if (i > 0) {
            EXPECT_LE(cat[i - 1].support.size(), cat[i].support.size());
        }
    }
}

TEST(Catalog, PathLengthLimitRespected)
{
    const Grid g(5, 6);
    for (int len = 3; len <= 7; ++len)
        for (const auto & h : enumerate_catalog(g, {.max_path_len = len}))
            if (h.kind == SubgraphKind::boundary_path) {
                ASSERT_LE(h.support.size(), len);
            }
}

TEST(CatalogProperty, EveryMemberForbiddenAndWellShaped)
{
    for (int rows = 2; rows <= 6; ++rows)
        for (int cols = 2; cols <= 8; ++cols) {
            const Grid g(rows, cols);
            const auto cat = enumerate_catalog(g);
            ASSERT_FALSE(cat.empty());
            std::map<SubgraphKind, int> kinds;
            for (const auto & h : cat) {
                ASSERT_TRUE(oracle_forbidden(g, 3, h.support)) << rows << "x" << cols << " " << to_string(h.kind);
                ASSERT_TRUE(is_forbidden(g, 3, h.support));
                ASSERT_TRUE(has_declared_shape(g, h)) << rows << "x" << cols << " " << to_string(h.kind);
                ++kinds[h.kind];
            }
            ASSERT_GT(kinds[SubgraphKind::boundary_pair], 0);
        }
}

TEST(Shape, RejectsMislabelledMembers)
{
    const Grid g(4, 6);
    EXPECT_FALSE(has_declared_shape(g, {labels(g, {"a_1", "b_1", "c_1"}), SubgraphKind::fiber}));
    EXPECT_TRUE(has_declared_shape(g, {labels(g, {"a_1", "b_1", "c_1", "d_1"}), SubgraphKind::fiber}));
    EXPECT_FALSE(has_declared_shape(g, {labels(g, {"a_1", "a_2", "b_1", "c_1"}), SubgraphKind::four_cycle}));
    EXPECT_FALSE(has_declared_shape(g, {labels(g, {"b_2", "b_3"}), SubgraphKind::boundary_pair}));
    // chord a_1 b_1 makes this path non-induced
    EXPECT_FALSE(has_declared_shape(g, {labels(g, {"a_1", "a_2", "b_2", "b_1"}), SubgraphKind::boundary_path}));
    EXPECT_TRUE(has_declared_shape(g, {labels(g, {"a_2", "b_2", "b_3", "c_3", "d_3"}), SubgraphKind::boundary_path}));
    EXPECT_TRUE(has_declared_shape(g, {labels(g, {"b_2", "b_3", "b_4", "c_2", "c_3", "c_4"}), SubgraphKind::cycle}));
}

// Every percolating set of a small grid, found by brute force, must meet
// every catalog member.
TEST(CatalogProperty, SoundOnEveryPercolatingSetOfSmallGrids)
{
    for (const auto & [rows, cols] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {3, 5}, {4, 4}}) {
        const Grid g(rows, cols);
        const auto cat = enumerate_catalog(g);
        const int n = g.vertex_count();
        int percolating = 0;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            VertexSet s(n);
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1U)
                    s.insert(i);
            if (!percolates(g, 3, s))
                continue;
            ++percolating;
            for (const auto & h : cat)
                ASSERT_TRUE(h.support.intersects(s));
        }
        EXPECT_GT(percolating, 0);
    }
}

TEST(CatalogProperty, SoundOnConstructions)
{
    for (int rows : {3, 4, 5})
        for (int m = rows; m <= 12; ++m) {
            const auto built = construct(rows, m);
            for (const auto & h : enumerate_catalog(built.grid))
                ASSERT_TRUE(h.support.intersects(built.seeds)) << rows << "x" << m;
        }
}

TEST(Packing, Examples)
{
    const Grid g(3, 5);
    std::vector<ForbiddenSubgraph> columns;
    for (int c = 0; c < 5; ++c)
        columns.push_back({g.col_set(c), SubgraphKind::fiber});
    EXPECT_EQ(disjoint_packing_bound(g, columns).bound(), 5);
    EXPECT_EQ(disjoint_packing_bound(g, {}).bound(), 0);

    const auto full = disjoint_packing_bound(g, enumerate_catalog(g));
    EXPECT_GE(full.bound(), 5);
    EXPECT_LE(full.bound(), 8);
}

TEST(Packing, MembersPairwiseDisjointAndBelowOptimum)
{
    // optimum values here come from the naive bitmask search in the support header
    for (const auto & [rows, cols] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {3, 5}, {4, 4}}) {
        const Grid g(rows, cols);
        const auto cert = disjoint_packing_bound(g, enumerate_catalog(g));
        for (std::size_t i = 0; i < cert.members.size(); ++i)
            for (std::size_t j = i + 1; j < cert.members.size(); ++j)
                ASSERT_FALSE(cert.members[i].support.intersects(cert.members[j].support));
        EXPECT_LE(cert.bound(), testing_support::naive_minimum(g, 3));
    }
}

TEST(FormulaBound, Examples)
{
    EXPECT_EQ(formula_lower_bound(5, 7), 16);
    EXPECT_EQ(formula_lower_bound(5, 6), 15);
    EXPECT_EQ(formula_lower_bound(4, 5), 11);
    EXPECT_EQ(formula_lower_bound(3, 9), 14);
    EXPECT_EQ(formula_lower_bound(3, 4), 7);
    EXPECT_EQ(formula_lower_bound(4, 4), 9);
    EXPECT_FALSE(formula_lower_bound(6, 6).has_value());
    EXPECT_FALSE(formula_lower_bound(5, 4).has_value());
    EXPECT_FALSE(formula_lower_bound(2, 9).has_value());
}
