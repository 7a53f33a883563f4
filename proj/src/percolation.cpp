#include "bootperc/percolation.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace bootperc {

namespace {

auto check_threshold(int r) -> void
{
    if (r < 1)
        throw std::invalid_argument("threshold r must be >= 1, got " + std::to_string(r));
}

/// Bit-sliced "at least r of these four bits are set", one lane per vertex.
auto at_least(int r, VertexSet::Word a, VertexSet::Word b, VertexSet::Word c, VertexSet::Word d) -> VertexSet::Word
{
    switch (r) {
    case 1:
        return a | b | c | d;
    case 4:
        return a & b & c & d;
    default:
        break;
    }
    const auto ab = a ^ b, ab_carry = a & b;
    const auto cd = c ^ d, cd_carry = c & d;
    const auto low = ab ^ cd, mid_carry = ab & cd;
    // sum = low + 2 * (ab_carry + cd_carry + mid_carry)
    const auto twos_any = ab_carry | cd_carry | mid_carry;
    if (r == 2)
        return twos_any;
    // r == 3: two pairs, or one pair plus the low bit.
    return (ab_carry & cd_carry) | (twos_any & low);
}

} // namespace

auto newly_infectable(const Grid & g, int r, const VertexSet & infected) -> VertexSet
{
    check_threshold(r);
    auto out = g.empty_set();
    if (r > 4)
        return out;

    const auto from_left = infected.shifted_up(1) & g.has_left();
    const auto from_right = infected.shifted_down(1) & g.has_right();
    const auto from_below = infected.shifted_up(g.cols());
    const auto from_above = infected.shifted_down(g.cols());

    auto w = out.words();
    const auto l = from_left.words(), rt = from_right.words(), b = from_below.words(), a = from_above.words();
    const auto in = infected.words();
    for (std::size_t k = 0; k < w.size(); ++k)
        w[k] = at_least(r, l[k], rt[k], b[k], a[k]) & ~in[k];
    return out;
}

auto step(const Grid & g, int r, const VertexSet & infected) -> VertexSet
{
    return infected | newly_infectable(g, r, infected);
}

auto closure(const Grid & g, int r, const VertexSet & seeds) -> ClosureResult
{
    check_threshold(r);
    ClosureResult result;
    result.infected = seeds;
    result.round_of.assign(static_cast<std::size_t>(g.vertex_count()), std::nullopt);
    seeds.for_each([&](int i) { result.round_of[static_cast<std::size_t>(i)] = 0; });

    for (;;) {
        auto fresh = newly_infectable(g, r, result.infected);
        if (fresh.empty())
            break;
        ++result.rounds;
        fresh.for_each([&](int i) { result.round_of[static_cast<std::size_t>(i)] = result.rounds; });
        result.infected |= fresh;
    }
    return result;
}

auto closure_set(const Grid & g, int r, VertexSet seeds) -> VertexSet
{
    check_threshold(r);
    for (;;) {
        auto fresh = newly_infectable(g, r, seeds);
        if (fresh.empty())
            return seeds;
        seeds |= fresh;
    }
}

auto percolates(const Grid & g, int r, const VertexSet & seeds) -> bool
{
    return closure_set(g, r, seeds) == g.full_set();
}

auto async_closure(const Grid & g, int r, const VertexSet & seeds, std::uint64_t order_seed) -> VertexSet
{
    check_threshold(r);
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(order_seed);
    std::shuffle(order.begin(), order.end(), rng);

    auto infected = seeds;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i : order) {
            if (infected.contains(i))
                continue;
            int count = 0;
            for (int u : g.neighbor_indices(i))
                count += infected.contains(u);
            if (count >= r) {
                infected.insert(i);
                changed = true;
            }
        }
    }
    return infected;
}

} // namespace bootperc
