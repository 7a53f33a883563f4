#include "bootperc/render.hpp"

#include <json.hpp>

namespace bootperc {

namespace {

auto coordinates(const Grid & g, const VertexSet & s) -> nlohmann::ordered_json
{
    auto out = nlohmann::ordered_json::array();
    s.for_each([&](int i) {
        const auto v = g.vertex(i);
        out.push_back({v.row, v.col});
    });
    return out;
}

} // namespace

auto render_ascii(const Grid & g, const ClosureResult & result) -> std::string
{
    std::string out;
    out.reserve(static_cast<std::size_t>((g.cols() + 1) * g.rows()));
    for (int row = g.rows() - 1; row >= 0; --row) {
        for (int col = 0; col < g.cols(); ++col) {
            const auto & t = result.round_of[static_cast<std::size_t>(g.index({row, col}))];
            if (!t)
                out += '.';
            else if (*t == 0)
                out += '#';
            else if (*t <= 9)
                out += static_cast<char>('0' + *t);
            else
                out += '+';
        }
        out += '\n';
    }
    return out;
}

auto solve_report_json(const Grid & g, const SolveReport & report) -> std::string
{
    nlohmann::ordered_json j;
    j["optimum"] = report.optimum;
    j["witness"] = coordinates(g, report.witness);
    j["lower_bound"] = {{"value", report.lower_bound.value}, {"source", to_string(report.lower_bound.source)}};
    j["nodes"] = report.nodes_explored;
    return j.dump();
}

auto catalog_json(const Grid & g, std::span<const ForbiddenSubgraph> catalog) -> std::string
{
    auto j = nlohmann::ordered_json::array();
    for (const auto & h : catalog) {
        nlohmann::ordered_json item;
        item["kind"] = to_string(h.kind);
        item["vertices"] = coordinates(g, h.support);
        j.push_back(std::move(item));
    }
    return j.dump();
}

auto closure_json(const Grid & g, int r, const ClosureResult & result) -> std::string
{
    nlohmann::ordered_json j;
    j["rows"] = g.rows();
    j["cols"] = g.cols();
    j["r"] = r;
    j["percolates"] = result.percolated();
    j["rounds"] = result.rounds;
    j["infected"] = result.infected.size();
    auto table = nlohmann::ordered_json::array();
    for (int row = 0; row < g.rows(); ++row) {
        auto line = nlohmann::ordered_json::array();
        for (int col = 0; col < g.cols(); ++col) {
            const auto & t = result.round_of[static_cast<std::size_t>(g.index({row, col}))];
            line.push_back(t ? nlohmann::ordered_json(*t) : nlohmann::ordered_json(nullptr));
        }
        table.push_back(std::move(line));
    }
    j["round_of"] = std::move(table);
    return j.dump();
}

} // namespace bootperc
