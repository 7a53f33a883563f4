#include "bootperc/grid.hpp"

#include <charconv>
#include <stdexcept>

namespace bootperc {

Grid::Grid(int rows, int cols) : _rows(rows), _cols(cols)
{
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("grid dimensions must be positive, got " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    _has_left = empty_set();
    _has_right = empty_set();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c > 0)
                _has_left.insert(index({r, c}));
            if (c + 1 < cols)
                _has_right.insert(index({r, c}));
        }
}

auto Grid::check(VertexId v) const -> void
{
    if (!contains(v))
        throw std::out_of_range("vertex (" + std::to_string(v.row) + "," + std::to_string(v.col) +
                                ") outside " + std::to_string(_rows) + "x" + std::to_string(_cols) + " grid");
}

auto Grid::make_set(std::initializer_list<VertexId> vs) const -> VertexSet
{
    return make_set(std::vector<VertexId>(vs));
}

auto Grid::make_set(const std::vector<VertexId> & vs) const -> VertexSet
{
    auto s = empty_set();
    for (auto v : vs) {
        check(v);
        s.insert(index(v));
    }
    return s;
}

auto Grid::neighbor_indices(int i) const -> std::vector<int>
{
    const auto v = vertex(i);
    std::vector<int> out;
    out.reserve(4);
    if (v.row > 0)
        out.push_back(i - _cols);
    if (v.col > 0)
        out.push_back(i - 1);
    if (v.col + 1 < _cols)
        out.push_back(i + 1);
    if (v.row + 1 < _rows)
        out.push_back(i + _cols);
    return out;
}

auto Grid::neighbors(VertexId v) const -> VertexSet
{
    check(v);
    auto s = empty_set();
    for (int u : neighbor_indices(index(v)))
        s.insert(u);
    return s;
}

auto Grid::degree(VertexId v) const -> int
{
    check(v);
    return (v.row > 0) + (v.row + 1 < _rows) + (v.col > 0) + (v.col + 1 < _cols);
}

auto Grid::is_boundary(VertexId v) const -> bool
{
    check(v);
    return v.row == 0 || v.row == _rows - 1 || v.col == 0 || v.col == _cols - 1;
}

auto Grid::degree_into(VertexId v, const VertexSet & x) const -> int
{
    check(v);
    int n = 0;
    for (int u : neighbor_indices(index(v)))
        n += x.contains(u);
    return n;
}

auto Grid::row_set(int row) const -> VertexSet
{
    auto s = empty_set();
    for (int c = 0; c < _cols; ++c)
        s.insert(index({row, c}));
    return s;
}

auto Grid::col_set(int col) const -> VertexSet
{
    auto s = empty_set();
    for (int r = 0; r < _rows; ++r)
        s.insert(index({r, col}));
    return s;
}

auto Grid::boundary_set() const -> VertexSet
{
    auto s = row_set(0) | row_set(_rows - 1) | col_set(0) | col_set(_cols - 1);
    return s;
}

auto Grid::label(VertexId v) const -> std::string
{
    check(v);
    std::string row = v.row < 26 ? std::string(1, static_cast<char>('a' + v.row)) : "r" + std::to_string(v.row);
    return row + "_" + std::to_string(v.col + 1);
}

auto Grid::parse_label(std::string_view text) const -> VertexId
{
    const auto bad = [&] { return std::invalid_argument("bad vertex label '" + std::string(text) + "'"); };
    const auto sep = text.find('_');
    if (sep == std::string_view::npos || sep == 0)
        throw bad();
    const auto head = text.substr(0, sep);
    const auto tail = text.substr(sep + 1);

    int row = 0;
    if (head.size() == 1 && head[0] >= 'a' && head[0] <= 'z')
        row = head[0] - 'a';
    else if (head[0] == 'r') {
        auto [p, ec] = std::from_chars(head.data() + 1, head.data() + head.size(), row);
        if (ec != std::errc{} || p != head.data() + head.size())
            throw bad();
    }
    else
        throw bad();

    int subscript = 0;
    auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), subscript);
    if (ec != std::errc{} || p != tail.data() + tail.size())
        throw bad();

    VertexId v{row, subscript - 1};
    check(v);
    return v;
}

auto consecutive_boundary_triples(const Grid & g) -> std::vector<std::array<int, 3>>
{
    std::vector<std::array<int, 3>> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto id = g.vertex(v);
        if (!g.is_boundary(id) || g.degree(id) != 3)
            continue;
        std::vector<int> side;
        for (int u : g.neighbor_indices(v))
            if (g.is_boundary(g.vertex(u)))
                side.push_back(u);
        for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = i + 1; j < side.size(); ++j)
                out.push_back({side[i], v, side[j]});
    }
    return out;
}

auto has_three_consecutive_boundary(const Grid & g, const VertexSet & seeds) -> bool
{
    for (const auto & [u, v, z] : consecutive_boundary_triples(g))
        if (seeds.contains(u) && seeds.contains(v) && seeds.contains(z))
            return true;
    return false;
}

} // namespace bootperc
