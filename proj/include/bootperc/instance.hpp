#pragma once

#include "bootperc/grid.hpp"
#include "bootperc/vertex_set.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bootperc {

/// A grid, a threshold and a seed list, as read from or written to instance JSON.
struct Instance
{
    int rows = 1;
    int cols = 1;
    int r = 3;
    /// Sorted by (row, col) once canonical.
    std::vector<VertexId> seeds;

    auto grid() const -> Grid { return Grid(rows, cols); }
    auto seed_set() const -> VertexSet { return grid().make_set(seeds); }

    static auto from_set(const Grid & g, int r, const VertexSet & seeds) -> Instance;
};

class InstanceError : public std::runtime_error
{
public:
    enum class Kind
    {
        malformed_json,
        bad_schema,
        invalid_parameter,
        out_of_range,
        duplicate_seed,
    };

    InstanceError(Kind kind, const std::string & what) : std::runtime_error(what), _kind(kind) {}

    auto kind() const -> Kind { return _kind; }

private:
    Kind _kind;
};

auto to_string(InstanceError::Kind kind) -> std::string_view;

/**
 * Parses {"rows":n,"cols":m,"r":k,"seeds":[[i,j],...]} (0-based coordinates).
 * Seeds come back sorted. Throws InstanceError naming what went wrong.
 */
auto parse_instance(std::string_view text) -> Instance;

/// Canonical form: fixed key order, no whitespace, seeds sorted, no trailing newline.
auto serialize_instance(const Instance & inst) -> std::string;

} // namespace bootperc
