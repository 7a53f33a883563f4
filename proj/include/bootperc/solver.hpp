#pragma once

#include "bootperc/forbidden.hpp"
#include "bootperc/grid.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/vertex_set.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace bootperc {

enum class BoundSource
{
    forced,
    formula,
    packing,
};

auto to_string(BoundSource source) -> std::string_view;

struct LowerBound
{
    int value = 0;
    BoundSource source = BoundSource::forced;
};

struct SolveReport
{
    int optimum = 0;
    VertexSet witness;
    LowerBound lower_bound;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds wall_time{0};
};

struct SolveOptions
{
    /// Skip seed sets with three consecutive boundary vertices. Only honoured for r = 3 on grids at least 3x3.
    bool normalize_boundary = true;
    /// Branch on and prune with the forbidden-subgraph catalog.
    bool use_catalog = true;
    int max_path_len = 6;
    /// Start the deepening at the closed-form bound where one is known.
    bool use_formula_bound = true;
    std::optional<std::uint64_t> node_budget;
    bool parallel = false;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// Entries kept in the failed-state memo before least-recently-used eviction.
    std::size_t memo_capacity = std::size_t{1} << 18;
};

/// Thrown when the node budget runs out. Every seed set smaller than `certified_lower_bound` was ruled out.
class BudgetExhausted : public std::runtime_error
{
public:
    BudgetExhausted(int certified_lower_bound, std::uint64_t nodes);

    auto certified_lower_bound() const -> int { return _lower; }
    auto nodes() const -> std::uint64_t { return _nodes; }

private:
    int _lower;
    std::uint64_t _nodes;
};

/// Thrown by brute_force_min when the instance is too large to enumerate.
class SizeGuardError : public std::length_error
{
public:
    using std::length_error::length_error;
};

/// Vertices of degree < r. No update can ever infect them.
auto forced_seeds(const Grid & g, int r) -> VertexSet;

/**
 * Exhaustive subset enumeration in increasing size, with forced seeds
 * pre-placed. Returns nullopt if no percolating set of size <= k_max exists.
 * Accepts only |V| <= 20 or k_max <= 8; throws SizeGuardError otherwise.
 */
auto brute_force_min(const Grid & g, int r, int k_max) -> std::optional<SolveReport>;

/**
 * A set W such that every percolating superset of `partial` contains a
 * vertex of W outside `closed.infected`. Picks the smallest catalog member
 * untouched by the closure (ties by lowest vertex index); when none is left
 * falls back to the uninfected remainder. Vertices in `excluded` are
 * removed from W.
 */
auto branch_witness(const Grid & g, int r, const VertexSet & partial, const ClosureResult & closed,
                    std::span<const ForbiddenSubgraph> catalog, const VertexSet * excluded = nullptr) -> VertexSet;

/// m(G, r) by iterative deepening. Throws BudgetExhausted when opts.node_budget runs out.
auto solve_min(const Grid & g, int r, const SolveOptions & opts = {}) -> SolveReport;

/// m(P_4 x P_m, 3) - floor(5(m+1)/3). Throws std::invalid_argument for m < 4.
auto phi(int m, const SolveOptions & opts = {}) -> int;

} // namespace bootperc
