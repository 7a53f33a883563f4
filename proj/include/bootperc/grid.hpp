#pragma once

#include "bootperc/vertex_set.hpp"

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace bootperc {

/// 0-based grid coordinate. Row 0 is the letter row `a`, column 0 is subscript 1.
struct VertexId
{
    int row = 0;
    int col = 0;

    friend auto operator<=>(const VertexId &, const VertexId &) = default;
};

/**
 * The rectangular lattice P_rows x P_cols (no diagonals, no wraparound).
 *
 * Vertices are indexed row-major: index = row * cols + col. The row-letter
 * labels used in the literature (a_1, b_3, ...) are available through
 * label() and parse_label() as a presentation layer only.
 */
class Grid
{
public:
    /// Throws std::invalid_argument unless rows >= 1 and cols >= 1.
    Grid(int rows, int cols);

    auto rows() const -> int { return _rows; }
    auto cols() const -> int { return _cols; }
    auto vertex_count() const -> int { return _rows * _cols; }
    auto edge_count() const -> int { return _rows * (_cols - 1) + _cols * (_rows - 1); }

    auto contains(VertexId v) const -> bool { return v.row >= 0 && v.row < _rows && v.col >= 0 && v.col < _cols; }
    auto index(VertexId v) const -> int { return v.row * _cols + v.col; }
    auto vertex(int index) const -> VertexId { return {index / _cols, index % _cols}; }

    auto empty_set() const -> VertexSet { return VertexSet(vertex_count()); }
    auto full_set() const -> VertexSet { return VertexSet::full(vertex_count()); }

    /// Builds a set from coordinates; throws std::out_of_range on an invalid one.
    auto make_set(std::initializer_list<VertexId> vs) const -> VertexSet;
    auto make_set(const std::vector<VertexId> & vs) const -> VertexSet;

    /// Lattice neighbours of v. Throws std::out_of_range for an invalid vertex.
    auto neighbors(VertexId v) const -> VertexSet;
    auto neighbor_indices(int index) const -> std::vector<int>;
    auto degree(VertexId v) const -> int;

    /// Degree <= 3, i.e. v lies on the outer rectangle. Every vertex of a 1- or 2-wide grid qualifies.
    auto is_boundary(VertexId v) const -> bool;

    /// |N(v) ∩ x|
    auto degree_into(VertexId v, const VertexSet & x) const -> int;

    auto row_set(int row) const -> VertexSet;
    auto col_set(int col) const -> VertexSet;
    auto boundary_set() const -> VertexSet;

    /// Vertices whose left / right neighbour exists. Used by the bit-parallel update.
    auto has_left() const -> const VertexSet & { return _has_left; }
    auto has_right() const -> const VertexSet & { return _has_right; }

    /// "a_1" style label; rows past 'z' fall back to "r26_1".
    auto label(VertexId v) const -> std::string;
    auto parse_label(std::string_view text) const -> VertexId;

private:
    auto check(VertexId v) const -> void;

    int _rows;
    int _cols;
    VertexSet _has_left;
    VertexSet _has_right;
};

/**
 * Triples (u, v, z) of boundary vertices where v has degree 3 and u, z are
 * boundary neighbours of v. Listed as vertex indices with v in the middle.
 */
auto consecutive_boundary_triples(const Grid & g) -> std::vector<std::array<int, 3>>;

/// True if all three vertices of some consecutive boundary triple are in `seeds`.
auto has_three_consecutive_boundary(const Grid & g, const VertexSet & seeds) -> bool;

inline auto make_grid(int rows, int cols) -> Grid { return Grid(rows, cols); }

} // namespace bootperc
