#include "bootperc/constructions.hpp"

#include <array>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace bootperc {

namespace {

constexpr int row_a = 0, row_b = 1, row_c = 2, row_d = 3, row_e = 4;

/// Adds the vertex in `row` at 1-based column `i`.
struct SeedBuilder
{
    Grid grid;
    VertexSet seeds;

    SeedBuilder(int rows, int cols) : grid(rows, cols), seeds(grid.empty_set()) {}

    auto add(int row, int i) -> void { seeds.insert(grid.index({row, i - 1})); }
    auto remove(int row, int i) -> void { seeds.erase(grid.index({row, i - 1})); }

    auto add_odd(int row) -> void
    {
        for (int i = 1; i <= grid.cols(); i += 2)
            add(row, i);
    }

    auto add_even(int row) -> void
    {
        for (int i = 2; i <= grid.cols(); i += 2)
            add(row, i);
    }

    auto add_column(int i) -> void
    {
        for (int row = 0; row < grid.rows(); ++row)
            add(row, i);
    }

    auto add_labels(std::initializer_list<std::string_view> labels) -> void
    {
        for (auto l : labels)
            seeds.insert(grid.index(grid.parse_label(l)));
    }

    auto finish(int predicted, std::string source) -> Construction
    {
        return {std::move(grid), std::move(seeds), predicted, std::move(source)};
    }
};

auto floor_five_thirds(int m) -> int { return 5 * (m + 1) / 3; }

// {a_i, c_i, b_{i+1}, d_{i+1}, a_{i+2}}
auto add_x_block(SeedBuilder & s, int i) -> void
{
    s.add(row_a, i);
    s.add(row_c, i);
    s.add(row_b, i + 1);
    s.add(row_d, i + 1);
    s.add(row_a, i + 2);
}

// {b_i, d_i, a_{i+1}, c_{i+1}, d_{i+2}}
auto add_y_block(SeedBuilder & s, int i) -> void
{
    s.add(row_b, i);
    s.add(row_d, i);
    s.add(row_a, i + 1);
    s.add(row_c, i + 1);
    s.add(row_d, i + 2);
}

/// XYXY... starting with X at column 2, one block per three columns.
auto add_block_train(SeedBuilder & s, int blocks) -> void
{
    for (int j = 0; j < blocks; ++j) {
        if (j % 2 == 0)
            add_x_block(s, 2 + 3 * j);
        else
            add_y_block(s, 2 + 3 * j);
    }
}

auto width4_special(int m) -> Construction
{
    SeedBuilder s(4, m);
    switch (m) {
    case 5:
        s.add_labels({"a_1", "b_1", "d_1", "c_2", "a_3", "d_3", "b_4", "c_4", "a_5", "b_5", "d_5"});
        break;
    case 7:
        s.add_labels({"a_1", "b_1", "d_1", "c_2", "a_3", "d_3", "b_4", "c_4", "a_5", "d_5", "c_6", "a_7", "b_7",
                      "d_7"});
        break;
    case 11:
        s.add_labels({"a_1", "b_1",  "d_1", "c_2",  "a_3",  "d_3", "b_4",  "c_4",  "a_5",  "d_5", "c_6",
                      "a_7", "d_7",  "b_8", "c_8",  "a_9",  "d_9", "c_10", "a_11", "b_11", "d_11"});
        break;
    default:
        throw std::logic_error("no special width-4 set for m = " + std::to_string(m));
    }
    return s.finish(floor_five_thirds(m) + 1, "4xm-special");
}

/// Minimum percolating set of the 4x4 grid found by exhaustive search.
auto width4_fixture() -> Construction
{
    SeedBuilder s(4, 4);
    s.add_labels({"a_1", "b_1", "d_1", "a_2", "c_2", "b_3", "d_3", "a_4", "b_4", "d_4"});
    return s.finish(s.seeds.size(), "4xm-fixture");
}

} // namespace

auto construct_p3(int m) -> Construction
{
    if (m < 3)
        throw std::invalid_argument("width-3 construction needs m >= 3, got " + std::to_string(m));
    SeedBuilder s(3, m);
    s.add_odd(row_a);
    s.add_even(row_b);
    s.add_odd(row_c);
    if (m % 2)
        return s.finish(3 * (m + 1) / 2 - 1, "3xm-odd");
    s.add(row_a, m);
    s.remove(row_b, m);
    s.add(row_c, m);
    return s.finish(3 * m / 2 + 1, "3xm-even");
}

auto construct_p5(int m) -> Construction
{
    if (m < 5)
        throw std::invalid_argument("width-5 construction needs m >= 5, got " + std::to_string(m));
    SeedBuilder s(5, m);
    s.add_odd(row_a);
    s.add_even(row_b);
    s.add(row_c, 1);
    s.add(row_c, m);
    s.add_even(row_d);
    s.add_odd(row_e);
    if (m % 2)
        return s.finish(2 * m + 2, "5xm-odd");
    s.add(row_a, m);
    s.remove(row_b, m);
    s.add(row_c, m - 1);
    s.remove(row_d, m);
    s.add(row_e, m);
    return s.finish(2 * m + 3, "5xm-even");
}

auto construct_p4(int m) -> Construction
{
    if (m < 4)
        throw std::invalid_argument("width-4 construction needs m >= 4, got " + std::to_string(m));
    if (m == 5 || m == 7 || m == 11)
        return width4_special(m);
    if (m == 4)
        return width4_fixture();

    SeedBuilder s(4, m);
    const int predicted = floor_five_thirds(m) + 2;
    switch (m % 3) {
    case 2: {
        s.add_column(1);
        s.remove(row_c, 1);
        s.add_column(m);
        add_block_train(s, (m - 2) / 3);
        return s.finish(predicted, "4xm-mod3-2");
    }
    case 1: {
        s.add_labels({"a_1", "b_1", "d_1"});
        add_block_train(s, (m - 1) / 3 - 1);
        if (m % 6 == 1) {
            s.add(row_b, m - 2);
            s.add(row_d, m - 2);
            s.add(row_a, m - 1);
            s.add(row_c, m - 1);
        }
        else {
            s.add(row_a, m - 2);
            s.add(row_c, m - 2);
            s.add(row_b, m - 1);
            s.add(row_d, m - 1);
        }
        s.add(row_a, m);
        s.add(row_b, m);
        s.add(row_d, m);
        return s.finish(predicted, "4xm-mod3-1");
    }
    default: {
        s.add_labels({"a_1", "b_1", "d_1"});
        add_block_train(s, m / 3 - 1);
        if (m % 6 == 0) {
            s.add(row_b, m - 1);
            s.add(row_d, m - 1);
            s.add(row_a, m);
            s.add(row_c, m);
            s.add(row_d, m);
        }
        else {
            s.add(row_a, m - 1);
            s.add(row_c, m - 1);
            s.add(row_a, m);
            s.add(row_b, m);
            s.add(row_d, m);
        }
        return s.finish(predicted, "4xm-mod3-0");
    }
    }
}

auto construct(int rows, int cols) -> Construction
{
    switch (rows) {
    case 3: return construct_p3(cols);
    case 4: return construct_p4(cols);
    case 5: return construct_p5(cols);
    default: throw std::invalid_argument("constructions exist for 3, 4 or 5 rows, got " + std::to_string(rows));
    }
}

auto predicted_optimum(int rows, int cols) -> OptimumRange
{
    const int m = cols;
    if (rows < 3 || rows > 5 || cols < rows)
        throw std::invalid_argument("no prediction for a " + std::to_string(rows) + "x" + std::to_string(cols) +
                                    " grid");
    switch (rows) {
    case 3: {
        const int v = m % 2 ? 3 * (m + 1) / 2 - 1 : 3 * m / 2 + 1;
        return {v, v};
    }
    case 5: {
        const int v = m % 2 ? 2 * m + 2 : 2 * m + 3;
        return {v, v};
    }
    default: {
        const int base = floor_five_thirds(m);
        if (m == 5 || m == 7 || m == 11)
            return {base + 1, base + 1};
        return {base + 1, base + 2};
    }
    }
}

} // namespace bootperc
