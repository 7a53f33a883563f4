#include "bootperc/forbidden.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace bootperc {

auto to_string(SubgraphKind kind) -> std::string_view
{
    switch (kind) {
    case SubgraphKind::boundary_pair: return "boundary-pair";
    case SubgraphKind::fiber: return "fiber";
    case SubgraphKind::four_cycle: return "four-cycle";
    case SubgraphKind::boundary_path: return "boundary-path";
    case SubgraphKind::cycle: return "cycle";
    case SubgraphKind::custom: return "custom";
    }
    return "custom";
}

auto is_forbidden(const Grid & g, int r, const VertexSet & h) -> bool
{
    if (h.empty())
        throw std::invalid_argument("forbidden-subgraph check needs a nonempty vertex set");
    const auto outside = h.complement();
    bool ok = true;
    h.for_each([&](int i) {
        if (ok && g.degree_into(g.vertex(i), outside) >= r)
            ok = false;
    });
    return ok;
}

namespace {

auto internal_degree(const Grid & g, const VertexSet & h, int i) -> int
{
    int n = 0;
    for (int u : g.neighbor_indices(i))
        n += h.contains(u);
    return n;
}

auto is_connected(const Grid & g, const VertexSet & h) -> bool
{
    const int start = h.first();
    if (start < 0)
        return false;
    auto seen = g.empty_set();
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbor_indices(v))
            if (h.contains(u) && !seen.contains(u)) {
                seen.insert(u);
                stack.push_back(u);
            }
    }
    return seen == h;
}

auto is_induced_boundary_path(const Grid & g, const VertexSet & h) -> bool
{
    if (h.size() < 2 || !is_connected(g, h))
        return false;
    std::vector<int> ends;
    bool ok = true;
    h.for_each([&](int i) {
        const int d = internal_degree(g, h, i);
        if (d == 1)
            ends.push_back(i);
        else if (d != 2)
            ok = false;
    });
    return ok && ends.size() == 2 && g.is_boundary(g.vertex(ends[0])) && g.is_boundary(g.vertex(ends[1]));
}

auto has_hamiltonian_cycle(const Grid & g, const VertexSet & h) -> bool
{
    const int n = h.size();
    if (n < 4)
        return false;
    const int start = h.first();
    auto used = g.empty_set();
    used.insert(start);
    std::function<bool(int, int)> extend = [&](int v, int depth) -> bool {
        if (depth == n) {
            for (int u : g.neighbor_indices(v))
                if (u == start)
                    return true;
            return false;
        }
        for (int u : g.neighbor_indices(v))
            if (h.contains(u) && !used.contains(u)) {
                used.insert(u);
                if (extend(u, depth + 1))
                    return true;
                used.erase(u);
            }
        return false;
    };
    return extend(start, 1);
}

auto is_unit_square(const Grid & g, const VertexSet & h) -> bool
{
    if (h.size() != 4)
        return false;
    const auto v = g.vertex(h.first());
    if (v.row + 1 >= g.rows() || v.col + 1 >= g.cols())
        return false;
    return h == g.make_set({v, {v.row, v.col + 1}, {v.row + 1, v.col}, {v.row + 1, v.col + 1}});
}

} // namespace

auto has_declared_shape(const Grid & g, const ForbiddenSubgraph & h) -> bool
{
    const auto & s = h.support;
    switch (h.kind) {
    case SubgraphKind::boundary_pair: {
        if (s.size() != 2)
            return false;
        const auto m = s.members();
        const auto nb = g.neighbor_indices(m[0]);
        return std::find(nb.begin(), nb.end(), m[1]) != nb.end() && g.is_boundary(g.vertex(m[0])) &&
               g.is_boundary(g.vertex(m[1]));
    }
    case SubgraphKind::fiber: {
        for (int r = 0; r < g.rows(); ++r)
            if (s == g.row_set(r))
                return true;
        for (int c = 0; c < g.cols(); ++c)
            if (s == g.col_set(c))
                return true;
        return false;
    }
    case SubgraphKind::four_cycle: return is_unit_square(g, s);
    case SubgraphKind::boundary_path: return is_induced_boundary_path(g, s);
    case SubgraphKind::cycle: return has_hamiltonian_cycle(g, s);
    case SubgraphKind::custom: return true;
    }
    return false;
}

namespace {

class CatalogBuilder
{
public:
    auto add(VertexSet support, SubgraphKind kind) -> void
    {
        if (_seen.insert(support).second)
            _items.push_back({std::move(support), kind});
    }

    auto take() -> std::vector<ForbiddenSubgraph>
    {
        std::vector<std::pair<std::vector<int>, std::size_t>> keys;
        keys.reserve(_items.size());
        for (std::size_t k = 0; k < _items.size(); ++k)
            keys.emplace_back(_items[k].support.members(), k);
        std::stable_sort(keys.begin(), keys.end(), [](const auto & a, const auto & b) {
            if (a.first.size() != b.first.size())
                return a.first.size() < b.first.size();
            return a.first < b.first;
        });
        std::vector<ForbiddenSubgraph> out;
        out.reserve(_items.size());
        for (auto & [_, k] : keys)
            out.push_back(std::move(_items[k]));
        return out;
    }

private:
    std::vector<ForbiddenSubgraph> _items;
    std::unordered_set<VertexSet, VertexSetHash> _seen;
};

auto enumerate_paths(const Grid & g, int max_len, CatalogBuilder & out) -> void
{
    std::vector<int> path;
    auto on_path = g.empty_set();
    // A vertex may join only if its sole neighbour on the path is the current tail.
    std::function<void()> extend = [&]() {
        const int tail = path.back();
        if (path.size() >= 3 && g.is_boundary(g.vertex(tail)))
            out.add(on_path, SubgraphKind::boundary_path);
        if (static_cast<int>(path.size()) == max_len)
            return;
        for (int u : g.neighbor_indices(tail)) {
            if (on_path.contains(u))
                continue;
            bool chord = false;
            for (int w : g.neighbor_indices(u))
                if (w != tail && on_path.contains(w))
                    chord = true;
            if (chord)
                continue;
            path.push_back(u);
            on_path.insert(u);
            extend();
            on_path.erase(u);
            path.pop_back();
        }
    };
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (!g.is_boundary(g.vertex(s)))
            continue;
        path = {s};
        on_path = g.empty_set();
        on_path.insert(s);
        extend();
    }
}

auto enumerate_cycles(const Grid & g, int max_len, CatalogBuilder & out) -> void
{
    std::vector<int> path;
    auto on_path = g.empty_set();
    int start = 0;
    // Cycles are rooted at their smallest vertex.
    std::function<void()> extend = [&]() {
        const int tail = path.back();
        for (int u : g.neighbor_indices(tail)) {
            if (u == start && path.size() >= 4) {
                out.add(on_path, SubgraphKind::cycle);
                continue;
            }
            if (u <= start || on_path.contains(u) || static_cast<int>(path.size()) == max_len)
                continue;
            path.push_back(u);
            on_path.insert(u);
            extend();
            on_path.erase(u);
            path.pop_back();
        }
    };
    for (start = 0; start < g.vertex_count(); ++start) {
        path = {start};
        on_path = g.empty_set();
        on_path.insert(start);
        extend();
    }
}

} // namespace

auto enumerate_catalog(const Grid & g, CatalogOptions opts) -> std::vector<ForbiddenSubgraph>
{
    CatalogBuilder out;

    for (int i = 0; i < g.vertex_count(); ++i) {
        if (!g.is_boundary(g.vertex(i)))
            continue;
        for (int u : g.neighbor_indices(i))
            if (u > i && g.is_boundary(g.vertex(u))) {
                auto s = g.empty_set();
                s.insert(i);
                s.insert(u);
                out.add(std::move(s), SubgraphKind::boundary_pair);
            }
    }

    for (int r = 0; r < g.rows(); ++r)
        out.add(g.row_set(r), SubgraphKind::fiber);
    for (int c = 0; c < g.cols(); ++c)
        out.add(g.col_set(c), SubgraphKind::fiber);

    for (int r = 0; r + 1 < g.rows(); ++r)
        for (int c = 0; c + 1 < g.cols(); ++c)
            out.add(g.make_set({{r, c}, {r, c + 1}, {r + 1, c}, {r + 1, c + 1}}), SubgraphKind::four_cycle);

    if (opts.max_path_len >= 3)
        enumerate_paths(g, opts.max_path_len, out);
    if (opts.max_cycle_len >= 4)
        enumerate_cycles(g, opts.max_cycle_len, out);

    return out.take();
}

auto disjoint_packing_bound(const Grid & g, std::span<const ForbiddenSubgraph> catalog) -> PackingCertificate
{
    std::vector<std::pair<std::vector<int>, std::size_t>> order;
    order.reserve(catalog.size());
    for (std::size_t k = 0; k < catalog.size(); ++k)
        order.emplace_back(catalog[k].support.members(), k);
    std::stable_sort(order.begin(), order.end(), [](const auto & a, const auto & b) {
        if (a.first.size() != b.first.size())
            return a.first.size() < b.first.size();
        return a.first < b.first;
    });

    PackingCertificate cert;
    auto used = g.empty_set();
    for (const auto & [_, k] : order) {
        const auto & h = catalog[k];
        if (h.support.intersects(used))
            continue;
        used |= h.support;
        cert.members.push_back(h);
    }
    return cert;
}

auto formula_lower_bound(int rows, int cols) -> std::optional<int>
{
    const int m = cols;
    if (rows < 3 || rows > 5 || cols < rows)
        return std::nullopt;
    switch (rows) {
    case 3: return m % 2 ? 3 * (m + 1) / 2 - 1 : 3 * m / 2 + 1;
    case 4: return 5 * (m + 1) / 3 + 1;
    default: return m % 2 ? 2 * m + 2 : 2 * m + 3;
    }
}

} // namespace bootperc
