#pragma once

#include "bootperc/grid.hpp"
#include "bootperc/vertex_set.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace bootperc {

enum class SubgraphKind
{
    boundary_pair,
    fiber,
    four_cycle,
    boundary_path,
    cycle,
    custom,
};

auto to_string(SubgraphKind kind) -> std::string_view;

/// A vertex subset that every r-percolating set must intersect.
struct ForbiddenSubgraph
{
    VertexSet support;
    SubgraphKind kind = SubgraphKind::custom;
};

struct PackingCertificate
{
    /// Pairwise disjoint; each needs its own seed.
    std::vector<ForbiddenSubgraph> members;

    auto bound() const -> int { return static_cast<int>(members.size()); }
};

/**
 * True iff every vertex of `h` has fewer than r neighbours outside `h`.
 * No such vertex can be infected before some vertex of `h` is, so every
 * r-percolating set meets `h`. Throws std::invalid_argument if `h` is empty.
 */
auto is_forbidden(const Grid & g, int r, const VertexSet & h) -> bool;

/// Kind-specific structural check (fiber is a full row/column, four_cycle a unit square, ...).
auto has_declared_shape(const Grid & g, const ForbiddenSubgraph & h) -> bool;

struct CatalogOptions
{
    /// Longest induced boundary-to-boundary path, counted in vertices.
    int max_path_len = 6;
    /// Longest simple cycle, counted in vertices.
    int max_cycle_len = 8;
};

/**
 * The standard 3-forbidden families of a grid: adjacent boundary pairs,
 * row and column fibers, unit squares, induced boundary-to-boundary paths
 * and simple cycles up to the configured lengths. Supports are unique; the
 * first family listed above wins on a collision. Ordered by support size,
 * then lexicographically by member indices.
 */
auto enumerate_catalog(const Grid & g, CatalogOptions opts = {}) -> std::vector<ForbiddenSubgraph>;

/// Greedy first-fit packing over `catalog` sorted by support size (ties: smallest vertex index).
auto disjoint_packing_bound(const Grid & g, std::span<const ForbiddenSubgraph> catalog) -> PackingCertificate;

/// Known closed-form lower bound on m(P_rows x P_cols, 3) for rows in {3,4,5}, cols >= rows.
auto formula_lower_bound(int rows, int cols) -> std::optional<int>;

} // namespace bootperc
