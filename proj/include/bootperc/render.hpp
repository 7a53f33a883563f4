#pragma once

#include "bootperc/forbidden.hpp"
#include "bootperc/grid.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/solver.hpp"

#include <span>
#include <string>

namespace bootperc {

/**
 * One text line per grid row, row 0 printed last (at the bottom). Glyphs:
 * '#' seed, '1'..'9' infection round, '+' round 10 or later, '.' never infected.
 */
auto render_ascii(const Grid & g, const ClosureResult & result) -> std::string;

/// {"optimum":k,"witness":[[i,j],...],"lower_bound":{"value":v,"source":s},"nodes":n}
auto solve_report_json(const Grid & g, const SolveReport & report) -> std::string;

/// [{"kind":..., "vertices":[[row,col],...]}, ...]
auto catalog_json(const Grid & g, std::span<const ForbiddenSubgraph> catalog) -> std::string;

/// Closure summary with a per-row round table (null for never infected).
auto closure_json(const Grid & g, int r, const ClosureResult & result) -> std::string;

} // namespace bootperc
