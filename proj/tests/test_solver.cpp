#include "bootperc/constructions.hpp"
#include "bootperc/forbidden.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/solver.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace bootperc;
using testing_support::labels;

namespace {

auto independent() -> SolveOptions
{
    SolveOptions o;
    o.use_formula_bound = false;
    return o;
}

auto expect_valid(const Grid & g, int r, const SolveReport & rep) -> void
{
    EXPECT_TRUE(testing_support::naive_percolates(g, r, rep.witness));
    EXPECT_EQ(rep.witness.size(), rep.optimum);
    EXPECT_TRUE(forced_seeds(g, r).is_subset_of(rep.witness));
    EXPECT_LE(rep.lower_bound.value, rep.optimum);
}

} // namespace

TEST(ForcedSeeds, Examples)
{
    const Grid g57(5, 7);
    EXPECT_EQ(forced_seeds(g57, 3), labels(g57, {"a_1", "a_7", "e_1", "e_7"}));
    const Grid path(1, 9);
    EXPECT_EQ(forced_seeds(path, 3), path.full_set());
    const Grid g46(4, 6);
    EXPECT_EQ(forced_seeds(g46, 4), g46.boundary_set());
    EXPECT_EQ(forced_seeds(g46, 4).size(), 16);
    EXPECT_TRUE(forced_seeds(g46, 2).empty());
}

TEST(BruteForce, Examples)
{
    EXPECT_EQ(brute_force_min(Grid(3, 3), 3, 9)->optimum, 5);
    EXPECT_EQ(brute_force_min(Grid(2, 2), 3, 4)->optimum, 4);
    const Grid g24(2, 4);
    const auto rep = brute_force_min(g24, 3, 8);
    ASSERT_TRUE(rep);
    EXPECT_EQ(rep->optimum, testing_support::naive_minimum(g24, 3));
    EXPECT_TRUE(percolates(g24, 3, rep->witness));
}

TEST(BruteForce, NoneWithinLimitAndSizeGuard)
{
    EXPECT_FALSE(brute_force_min(Grid(3, 3), 3, 4).has_value());
    EXPECT_THROW(brute_force_min(Grid(5, 5), 3, 12), SizeGuardError);
    EXPECT_NO_THROW(brute_force_min(Grid(5, 5), 2, 5));
}

TEST(BranchWitness, PrefersSmallestUnhitMember)
{
    const Grid g(3, 5);
    const auto cat = enumerate_catalog(g);
    const auto empty = g.empty_set();
    const auto w = branch_witness(g, 3, empty, closure(g, 3, empty), cat);
    EXPECT_EQ(w.size(), 2);
    EXPECT_TRUE(is_forbidden(g, 3, w));
    w.for_each([&](int i) { EXPECT_TRUE(g.is_boundary(g.vertex(i))); });
}

TEST(BranchWitness, StuckColumn)
{
    const Grid g(3, 5);
    const auto partial = g.full_set() - g.col_set(2);
    const auto closed = closure(g, 3, partial);
    ASSERT_FALSE(closed.percolated());
    EXPECT_TRUE(branch_witness(g, 3, partial, closed, enumerate_catalog(g)).is_subset_of(g.col_set(2)));
    EXPECT_EQ(branch_witness(g, 3, partial, closed, {}), g.col_set(2));
}

TEST(BranchWitness, ExclusionsRemoved)
{
    const Grid g(3, 5);
    const auto empty = g.empty_set();
    const auto closed = closure(g, 3, empty);
    auto excluded = g.empty_set();
    excluded.insert(0);
    const auto w = branch_witness(g, 3, empty, closed, {}, &excluded);
    EXPECT_EQ(w, g.full_set() - excluded);
}

TEST(BranchWitness, RejectsPercolatingPartial)
{
    const auto built = construct_p3(4);
    EXPECT_THROW(branch_witness(built.grid, 3, built.seeds, closure(built.grid, 3, built.seeds), {}),
                 std::invalid_argument);
}

TEST(SolveMin, Examples)
{
    const Grid g37(3, 7);
    const auto a = solve_min(g37, 3, independent());
    EXPECT_EQ(a.optimum, 11);
    expect_valid(g37, 3, a);

    const Grid g55(5, 5);
    const auto b = solve_min(g55, 3, independent());
    EXPECT_EQ(b.optimum, 12);
    expect_valid(g55, 3, b);

    const Grid g44(4, 4);
    const auto c = solve_min(g44, 3, independent());
    EXPECT_GE(c.optimum, 9);
    EXPECT_LE(c.optimum, 10);
    expect_valid(g44, 3, c);
}

TEST(SolveMin, FormulaBoundReported)
{
    const auto rep = solve_min(Grid(5, 7), 3);
    EXPECT_EQ(rep.optimum, 16);
    EXPECT_EQ(rep.lower_bound.value, 16);
    EXPECT_EQ(rep.lower_bound.source, BoundSource::formula);
    EXPECT_EQ(solve_min(Grid(7, 5), 3).optimum, 16);
}

TEST(SolveMin, DegenerateGrids)
{
    EXPECT_EQ(solve_min(Grid(1, 1), 3).optimum, 1);
    EXPECT_EQ(solve_min(Grid(1, 1), 1).optimum, 1);
    EXPECT_EQ(solve_min(Grid(1, 6), 3).optimum, 6);
    EXPECT_EQ(solve_min(Grid(1, 6), 1).optimum, 1);
    // boundary is forced; the uninfected interior must then be independent, so 20 + (16 - 8)
    EXPECT_EQ(solve_min(Grid(6, 6), 4).optimum, 28);
    EXPECT_THROW(solve_min(Grid(2, 2), 0), std::invalid_argument);
}

TEST(SolveMin, BudgetExhaustionCertifiesLowerBound)
{
    auto opts = independent();
    opts.node_budget = 3;
    try {
        solve_min(Grid(5, 6), 3, opts);
        FAIL() << "expected budget exhaustion";
    }
    catch (const BudgetExhausted & e) {
        EXPECT_LE(e.certified_lower_bound(), 15);
        EXPECT_GE(e.certified_lower_bound(), forced_seeds(Grid(5, 6), 3).size());
        EXPECT_GT(e.nodes(), 0U);
    }
}

TEST(Phi, KnownAndRegressionValues)
{
    EXPECT_EQ(phi(5), 1);
    EXPECT_EQ(phi(7), 1);
    // first certified runs gave these; the closed form only promises {1, 2}
    EXPECT_EQ(phi(4, independent()), 2);
    EXPECT_EQ(phi(6, independent()), 2);
    EXPECT_THROW(phi(3), std::invalid_argument);
}

TEST(Phi, RegressionTableUpToFourteen)
{
    // certified by exhausting depth optimum - 1; the witness checks the other side
    const std::vector<int> table{2, 1, 2, 1, 1, 2, 2, 1, 2, 2, 1};
    for (int m = 4; m <= 14; ++m) {
        const Grid g(4, m);
        const auto rep = solve_min(g, 3, independent());
        EXPECT_EQ(rep.optimum - 5 * (m + 1) / 3, table[static_cast<std::size_t>(m - 4)]) << "m=" << m;
        EXPECT_TRUE(testing_support::naive_percolates(g, 3, rep.witness));
        EXPECT_EQ(rep.witness.size(), rep.optimum);
    }
}

// Every grid with at most 16 vertices, both orientations, thresholds 2 and 3.
TEST(SolverProperty, AgreesWithBruteForceOnSmallGrids)
{
    for (int rows = 1; rows <= 16; ++rows)
        for (int cols = 1; rows * cols <= 16; ++cols) {
            const Grid g(rows, cols);
            for (int r : {2, 3}) {
                const auto oracle = brute_force_min(g, r, g.vertex_count());
                ASSERT_TRUE(oracle);
                for (bool normalize : {true, false})
                    for (bool catalog : {true, false}) {
                        auto opts = independent();
                        opts.normalize_boundary = normalize;
                        opts.use_catalog = catalog;
                        const auto rep = solve_min(g, r, opts);
                        ASSERT_EQ(rep.optimum, oracle->optimum)
                            << rows << "x" << cols << " r=" << r << " normalize=" << normalize;
                        expect_valid(g, r, rep);
                    }
                ASSERT_EQ(solve_min(g, r).optimum, oracle->optimum);
            }
        }
}

TEST(SolverProperty, BruteForceAgreesWithNaiveSearch)
{
    for (int rows = 1; rows <= 12; ++rows)
        for (int cols = 1; rows * cols <= 12; ++cols) {
            const Grid g(rows, cols);
            for (int r : {1, 2, 3, 4})
                ASSERT_EQ(brute_force_min(g, r, g.vertex_count())->optimum, testing_support::naive_minimum(g, r))
                    << rows << "x" << cols << " r=" << r;
        }
}

TEST(SolverProperty, BoundaryNormalizationPreservesOptimum)
{
    std::vector<std::pair<int, int>> grids{{4, 4}, {4, 5}};
    for (int m = 3; m <= 7; ++m)
        grids.emplace_back(3, m);
    for (const auto & [rows, cols] : grids) {
        const Grid g(rows, cols);
        auto on = independent();
        auto off = independent();
        off.normalize_boundary = false;
        const auto a = solve_min(g, 3, on);
        const auto b = solve_min(g, 3, off);
        EXPECT_EQ(a.optimum, b.optimum) << rows << "x" << cols;
        EXPECT_FALSE(has_three_consecutive_boundary(g, a.witness)) << rows << "x" << cols;
    }
}

TEST(SolverProperty, Sandwich)
{
    std::vector<std::pair<int, int>> grids{{5, 5}, {5, 6}};
    for (int m = 3; m <= 8; ++m)
        grids.emplace_back(3, m);
    for (int m = 4; m <= 6; ++m)
        grids.emplace_back(4, m);
    for (const auto & [rows, cols] : grids) {
        const Grid g(rows, cols);
        const int packing = disjoint_packing_bound(g, enumerate_catalog(g)).bound();
        const int formula = *formula_lower_bound(rows, cols);
        const int exact = solve_min(g, 3, independent()).optimum;
        const int built = construct(rows, cols).seeds.size();
        EXPECT_LE(packing, formula) << rows << "x" << cols;
        EXPECT_LE(formula, exact) << rows << "x" << cols;
        EXPECT_LE(exact, built) << rows << "x" << cols;
        if (rows != 4) {
            EXPECT_EQ(formula, exact) << rows << "x" << cols;
        }
    }
}

TEST(SolverProperty, ParallelMatchesSequential)
{
    for (const auto & [rows, cols] : std::vector<std::pair<int, int>>{{3, 8}, {4, 6}, {4, 7}, {5, 6}, {3, 4}}) {
        const Grid g(rows, cols);
        auto par = independent();
        par.parallel = true;
        par.threads = 4;
        const auto a = solve_min(g, 3, independent());
        const auto b = solve_min(g, 3, par);
        EXPECT_EQ(a.optimum, b.optimum) << rows << "x" << cols;
        expect_valid(g, 3, b);
    }
}

TEST(SolverProperty, SmallMemoStillExact)
{
    auto opts = independent();
    opts.memo_capacity = 4;
    EXPECT_EQ(solve_min(Grid(4, 6), 3, opts).optimum, 13);
    opts.memo_capacity = 0;
    EXPECT_EQ(solve_min(Grid(3, 8), 3, opts).optimum, 13);
}

TEST(SolverProperty, WitnessesHitCatalog)
{
    for (const auto & [rows, cols] : std::vector<std::pair<int, int>>{{3, 9}, {4, 8}, {5, 6}}) {
        const Grid g(rows, cols);
        const auto rep = solve_min(g, 3, independent());
        for (const auto & h : enumerate_catalog(g))
            ASSERT_TRUE(h.support.intersects(rep.witness));
    }
}
