#pragma once

#include "bootperc/grid.hpp"
#include "bootperc/vertex_set.hpp"

#include <string>

namespace bootperc {

/// An explicit 3-percolating seed set together with the size it is expected to have.
struct Construction
{
    Grid grid;
    VertexSet seeds;
    int predicted_size = 0;
    /// Which family produced it, e.g. "3xm-odd", "4xm-fixture".
    std::string source;
};

/// Closed interval [low, high] for m(G,3); exact when low == high.
struct OptimumRange
{
    int low = 0;
    int high = 0;

    auto exact() const -> bool { return low == high; }
    auto contains(int v) const -> bool { return low <= v && v <= high; }
};

/**
 * Width-3 grids, m >= 3. Odd m: seeds on odd columns of rows a and c plus
 * even columns of row b. Even m: same, but the last column carries {a_m, c_m}
 * instead of b_m.
 */
auto construct_p3(int m) -> Construction;

/// Width-5 grids, m >= 5 (2m+2 seeds for odd m, 2m+3 for even m).
auto construct_p5(int m) -> Construction;

/**
 * Width-4 grids, m >= 4. Uses the hand-tuned sets for m in {5, 7, 11}, a
 * stored search witness for m = 4, and otherwise the X/Y block train chosen
 * by m mod 3 (and m mod 6 for the tails).
 */
auto construct_p4(int m) -> Construction;

/// Dispatches on rows in {3, 4, 5}; throws std::invalid_argument otherwise.
auto construct(int rows, int cols) -> Construction;

/// Known value or window of m(P_rows x P_cols, 3). rows in {3,4,5}, cols >= rows.
auto predicted_optimum(int rows, int cols) -> OptimumRange;

} // namespace bootperc
