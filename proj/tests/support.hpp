#pragma once

// Independent oracles and random generators shared by the test binaries.
// Nothing here touches the bitset machinery: neighbour counts are taken
// from coordinates directly.

#include "bootperc/grid.hpp"
#include "bootperc/vertex_set.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using bootperc::Grid;
using bootperc::VertexId;
using bootperc::VertexSet;

inline auto coords_neighbors(const Grid & g, VertexId v) -> std::vector<VertexId>
{
    std::vector<VertexId> out;
    const std::array<std::array<int, 2>, 4> deltas{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};
    for (const auto & [dr, dc] : deltas) {
        const VertexId w{v.row + dr, v.col + dc};
        if (w.row >= 0 && w.row < g.rows() && w.col >= 0 && w.col < g.cols())
            out.push_back(w);
    }
    return out;
}

/// Plain boolean grid.
using Cells = std::vector<std::vector<bool>>;

inline auto to_cells(const Grid & g, const VertexSet & s) -> Cells
{
    Cells c(static_cast<std::size_t>(g.rows()), std::vector<bool>(static_cast<std::size_t>(g.cols()), false));
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            c[i][j] = s.contains(i * g.cols() + j);
    return c;
}

inline auto from_cells(const Grid & g, const Cells & c) -> VertexSet
{
    VertexSet s(g.vertex_count());
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            if (c[i][j])
                s.insert(i * g.cols() + j);
    return s;
}

inline auto naive_step(const Grid & g, int r, const Cells & in) -> Cells
{
    Cells out = in;
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            if (in[i][j])
                continue;
            int count = 0;
            for (const auto & w : coords_neighbors(g, {i, j}))
                count += in[w.row][w.col] ? 1 : 0;
            if (count >= r)
                out[i][j] = true;
        }
    return out;
}

inline auto naive_closure(const Grid & g, int r, const VertexSet & seeds) -> VertexSet
{
    Cells cur = to_cells(g, seeds);
    for (;;) {
        Cells next = naive_step(g, r, cur);
        if (next == cur)
            return from_cells(g, cur);
        cur = std::move(next);
    }
}

inline auto naive_percolates(const Grid & g, int r, const VertexSet & seeds) -> bool
{
    return naive_closure(g, r, seeds).size() == g.vertex_count();
}

/// Smallest percolating set size by plain bitmask enumeration. Only for |V| <= 20.
inline auto naive_minimum(const Grid & g, int r) -> int
{
    const int n = g.vertex_count();
    int best = n;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size >= best)
            continue;
        VertexSet s(n);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1U)
                s.insert(i);
        if (naive_percolates(g, r, s))
            best = size;
    }
    return best;
}

inline auto labels(const Grid & g, std::initializer_list<const char *> names) -> VertexSet
{
    VertexSet s(g.vertex_count());
    for (const char * n : names)
        s.insert(g.index(g.parse_label(n)));
    return s;
}

class Gen
{
public:
    explicit Gen(std::uint64_t seed) : _rng(seed) {}

    auto uniform(int lo, int hi) -> int { return std::uniform_int_distribution<int>(lo, hi)(_rng); }

    auto chance(double p) -> bool { return std::bernoulli_distribution(p)(_rng); }

    auto grid(int max_rows, int max_cols) -> Grid { return Grid(uniform(1, max_rows), uniform(1, max_cols)); }

    /// Each vertex independently with probability p.
    auto subset(const Grid & g, double p) -> VertexSet
    {
        VertexSet s(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i)
            if (chance(p))
                s.insert(i);
        return s;
    }

    auto superset(const Grid & g, const VertexSet & base, double p) -> VertexSet { return base | subset(g, p); }

    auto next_seed() -> std::uint64_t { return _rng(); }

private:
    std::mt19937_64 _rng;
};

} // namespace testing_support
