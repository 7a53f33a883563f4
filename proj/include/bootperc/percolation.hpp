#pragma once

#include "bootperc/grid.hpp"
#include "bootperc/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bootperc {

/// Outcome of running the synchronous r-neighbour process to its fixpoint.
struct ClosureResult
{
    VertexSet infected;
    /// Round in which each vertex (by index) was first infected; 0 for seeds, nullopt if never.
    std::vector<std::optional<int>> round_of;
    /// Number of update steps that infected at least one vertex.
    int rounds = 0;

    auto percolated() const -> bool { return infected == VertexSet::full(infected.universe()); }
};

/// Vertices outside `infected` with at least r neighbours inside it.
auto newly_infectable(const Grid & g, int r, const VertexSet & infected) -> VertexSet;

/// One synchronous update: infected ∪ {v : deg_infected(v) >= r}.
auto step(const Grid & g, int r, const VertexSet & infected) -> VertexSet;

/// Full trace to the fixpoint. Throws std::invalid_argument if r < 1.
auto closure(const Grid & g, int r, const VertexSet & seeds) -> ClosureResult;

/// Fixpoint only, no per-vertex bookkeeping.
auto closure_set(const Grid & g, int r, VertexSet seeds) -> VertexSet;

auto percolates(const Grid & g, int r, const VertexSet & seeds) -> bool;

/**
 * Sequential single-vertex activation. Vertices are visited in a random
 * order derived from `order_seed`; each eligible vertex is infected the
 * moment it is visited, and passes repeat until one changes nothing.
 * The fixpoint must coincide with closure(); this exists as a test oracle.
 */
auto async_closure(const Grid & g, int r, const VertexSet & seeds, std::uint64_t order_seed) -> VertexSet;

} // namespace bootperc
