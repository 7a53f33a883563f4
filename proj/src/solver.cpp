#include "bootperc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <list>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace bootperc {

auto to_string(BoundSource source) -> std::string_view
{
    switch (source) {
    case BoundSource::forced: return "forced";
    case BoundSource::formula: return "formula";
    case BoundSource::packing: return "packing";
    }
    return "forced";
}

BudgetExhausted::BudgetExhausted(int certified_lower_bound, std::uint64_t nodes)
    : std::runtime_error("node budget exhausted at depth " + std::to_string(certified_lower_bound) +
                         "; optimum is at least " + std::to_string(certified_lower_bound)),
      _lower(certified_lower_bound), _nodes(nodes)
{
}

auto forced_seeds(const Grid & g, int r) -> VertexSet
{
    auto out = g.empty_set();
    for (int i = 0; i < g.vertex_count(); ++i)
        if (g.degree(g.vertex(i)) < r)
            out.insert(i);
    return out;
}

namespace {

auto elapsed_since(std::chrono::steady_clock::time_point start) -> std::chrono::nanoseconds
{
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
}

/// Calls f on every j-subset of `pool` (as a VertexSet added to `base`) until f returns true.
template <typename F>
auto for_each_subset(const std::vector<int> & pool, int j, const VertexSet & base, F && f) -> bool
{
    const int n = static_cast<int>(pool.size());
    if (j > n)
        return false;
    std::vector<int> pick(static_cast<std::size_t>(j));
    for (int i = 0; i < j; ++i)
        pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
        auto s = base;
        for (int i : pick)
            s.insert(pool[static_cast<std::size_t>(i)]);
        if (f(s))
            return true;
        int i = j - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - j + i)
            --i;
        if (i < 0)
            return false;
        ++pick[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < j; ++t)
            pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
    }
}

} // namespace

auto brute_force_min(const Grid & g, int r, int k_max) -> std::optional<SolveReport>
{
    if (g.vertex_count() > 20 && k_max > 8)
        throw SizeGuardError("brute force refuses " + std::to_string(g.vertex_count()) +
                             " vertices with k_max = " + std::to_string(k_max));
    const auto start = std::chrono::steady_clock::now();
    const auto forced = forced_seeds(g, r);
    const auto pool = (g.full_set() - forced).members();

    std::uint64_t tested = 0;
    for (int k = forced.size(); k <= k_max; ++k) {
        std::optional<VertexSet> hit;
        for_each_subset(pool, k - forced.size(), forced, [&](const VertexSet & s) {
            ++tested;
            if (!percolates(g, r, s))
                return false;
            hit = s;
            return true;
        });
        if (hit)
            return SolveReport{k, *hit, {forced.size(), BoundSource::forced}, tested, elapsed_since(start)};
        if (k - forced.size() >= static_cast<int>(pool.size()))
            break;
    }
    return std::nullopt;
}

auto branch_witness(const Grid & g, int r, const VertexSet & partial, const ClosureResult & closed,
                    std::span<const ForbiddenSubgraph> catalog, const VertexSet * excluded) -> VertexSet
{
    (void) r;
    const auto & infected = closed.infected;
    if (infected == g.full_set())
        throw std::invalid_argument("branch_witness called on a percolating seed set");

    std::optional<VertexSet> best;
    for (const auto & h : catalog) {
        if (h.support.intersects(partial) || h.support.is_subset_of(infected))
            continue;
        auto w = h.support - infected;
        if (excluded)
            w -= *excluded;
        if (!best || w.size() < best->size() || (w.size() == best->size() && w.first() < best->first()))
            best = std::move(w);
    }
    if (best)
        return *best;
    auto rest = g.full_set() - infected;
    if (excluded)
        rest -= *excluded;
    return rest;
}

namespace {

/// Search state: everything the outcome of a subtree depends on.
struct MemoKey
{
    VertexSet infected;
    VertexSet excluded;
    /// Boundary seeds matter only for the consecutive-boundary restriction.
    VertexSet boundary_seeds;

    friend auto operator==(const MemoKey &, const MemoKey &) -> bool = default;
};

struct MemoKeyHash
{
    auto operator()(const MemoKey & k) const -> std::size_t
    {
        return k.infected.hash() ^ (k.excluded.hash() * 31) ^ (k.boundary_seeds.hash() * 131);
    }
};

/**
 * States proven unable to percolate with a given number of extra seeds.
 * A failure with budget b implies failure with any budget <= b, so only
 * the largest is kept. LRU eviction only weakens pruning.
 */
class FailureMemo
{
public:
    explicit FailureMemo(std::size_t capacity) : _capacity(capacity) {}

    auto known_failure(const MemoKey & key, int remaining) -> bool
    {
        if (_capacity == 0)
            return false;
        std::lock_guard lock(_mutex);
        auto it = _entries.find(key);
        if (it == _entries.end())
            return false;
        _order.splice(_order.begin(), _order, it->second.second);
        return it->second.first >= remaining;
    }

    auto record_failure(const MemoKey & key, int remaining) -> void
    {
        if (_capacity == 0)
            return;
        std::lock_guard lock(_mutex);
        if (auto it = _entries.find(key); it != _entries.end()) {
            it->second.first = std::max(it->second.first, remaining);
            _order.splice(_order.begin(), _order, it->second.second);
            return;
        }
        if (_entries.size() >= _capacity) {
            _entries.erase(_order.back());
            _order.pop_back();
        }
        _order.push_front(key);
        _entries.emplace(key, std::make_pair(remaining, _order.begin()));
    }

private:
    std::size_t _capacity;
    std::mutex _mutex;
    std::list<MemoKey> _order;
    std::unordered_map<MemoKey, std::pair<int, std::list<MemoKey>::iterator>, MemoKeyHash> _entries;
};

struct Node
{
    VertexSet seeds;
    VertexSet infected;
    VertexSet excluded;
};

enum class Outcome
{
    found,
    failed,
    aborted,
};

/**
 * Depth-bounded hitting-set search. Each node branches on one vertex of a
 * set every percolating completion must meet; the i-th child excludes the
 * first i-1 candidates, so each seed set is generated at most once.
 */
class Search
{
public:
    Search(const Grid & g, int r, const SolveOptions & opts, std::vector<ForbiddenSubgraph> catalog,
           bool normalize)
        : _g(g), _r(r), _opts(opts), _catalog(std::move(catalog)), _normalize(normalize),
          _full(g.full_set()), _boundary(g.boundary_set()), _memo(opts.memo_capacity)
    {
        if (_normalize)
            _triples = consecutive_boundary_triples(g);
    }

    /// Some percolating superset of `root.seeds` with `extra` more seeds, or nullopt.
    auto run(const Node & root, int extra) -> std::optional<VertexSet>
    {
        _stop = false;
        _witness.reset();

        if (!_opts.parallel) {
            visit(root, extra);
        }
        else {
            run_parallel(root, extra);
        }
        if (_budget_hit)
            return std::nullopt;
        return _witness;
    }

    auto nodes() const -> std::uint64_t { return _nodes.load(); }
    auto budget_hit() const -> bool { return _budget_hit.load(); }

private:
    struct Expansion
    {
        std::optional<Outcome> settled;
        MemoKey key;
        std::vector<int> candidates;
    };

    auto blocked_by_triples(const VertexSet & seeds) const -> VertexSet
    {
        auto out = _g.empty_set();
        for (const auto & t : _triples) {
            const int in = seeds.contains(t[0]) + seeds.contains(t[1]) + seeds.contains(t[2]);
            if (in == 2)
                for (int v : t)
                    if (!seeds.contains(v))
                        out.insert(v);
        }
        return out;
    }

    auto expand(Node & node, int remaining) -> Expansion
    {
        Expansion ex;
        const auto count = ++_nodes;
        if (_opts.node_budget && count > *_opts.node_budget) {
            _budget_hit = true;
            _stop = true;
        }
        if (_stop) {
            ex.settled = Outcome::aborted;
            return ex;
        }
        if (node.infected == _full) {
            std::lock_guard lock(_witness_mutex);
            if (!_witness)
                _witness = node.seeds;
            _stop = true;
            ex.settled = Outcome::found;
            return ex;
        }
        if (remaining == 0) {
            ex.settled = Outcome::failed;
            return ex;
        }

        node.excluded -= node.infected;
        ex.key = {node.infected, node.excluded, _normalize ? node.seeds & _boundary : _g.empty_set()};
        if (_memo.known_failure(ex.key, remaining)) {
            ex.settled = Outcome::failed;
            return ex;
        }
        if (_normalize)
            node.excluded |= blocked_by_triples(node.seeds) - node.infected;

        // One pass: greedy disjoint packing for the bound, smallest live member for branching.
        int packed = 0;
        auto used = _g.empty_set();
        std::optional<VertexSet> branch;
        for (const auto & h : _catalog) {
            if (h.support.intersects(node.infected))
                continue;
            auto live = h.support - node.excluded;
            if (live.empty() || packed > remaining) {
                packed = remaining + 1;
                break;
            }
            if (!live.intersects(used)) {
                used |= live;
                ++packed;
            }
            if (!branch || live.size() < branch->size() ||
                (live.size() == branch->size() && live.first() < branch->first()))
                branch = std::move(live);
        }
        if (packed > remaining) {
            _memo.record_failure(ex.key, remaining);
            ex.settled = Outcome::failed;
            return ex;
        }
        const auto w = branch ? *branch : (_full - node.infected) - node.excluded;
        if (w.empty()) {
            _memo.record_failure(ex.key, remaining);
            ex.settled = Outcome::failed;
            return ex;
        }
        ex.candidates = w.members();
        return ex;
    }

    auto make_child(const Node & node, int w, const VertexSet & excluded) const -> Node
    {
        Node child{node.seeds, node.infected, excluded};
        child.seeds.insert(w);
        child.infected.insert(w);
        child.infected = closure_set(_g, _r, std::move(child.infected));
        return child;
    }

    auto visit(Node node, int remaining) -> Outcome
    {
        auto ex = expand(node, remaining);
        if (ex.settled)
            return *ex.settled;

        auto excluded = node.excluded;
        // Closures of failed siblings; a later sibling whose closure fits inside one is dominated.
        std::vector<std::pair<VertexSet, bool>> failed_siblings;
        for (int w : ex.candidates) {
            auto child = make_child(node, w, excluded);
            const bool on_boundary = _boundary.contains(w);
            const bool dominated = std::any_of(failed_siblings.begin(), failed_siblings.end(), [&](const auto & s) {
                return (!_normalize || (!on_boundary && !s.second)) && child.infected.is_subset_of(s.first);
            });
            if (!dominated) {
                auto reached = child.infected;
                const auto out = visit(std::move(child), remaining - 1);
                if (out != Outcome::failed)
                    return out;
                failed_siblings.emplace_back(std::move(reached), on_boundary);
            }
            excluded.insert(w);
        }
        _memo.record_failure(ex.key, remaining);
        return Outcome::failed;
    }

    auto run_parallel(Node root, int extra) -> void
    {
        auto ex = expand(root, extra);
        if (ex.settled)
            return;

        std::vector<Node> children;
        auto excluded = root.excluded;
        for (int w : ex.candidates) {
            children.push_back(make_child(root, w, excluded));
            excluded.insert(w);
        }

        std::atomic<std::size_t> next{0};
        std::atomic<bool> any_incomplete{false};
        auto worker = [&] {
            for (;;) {
                const auto i = next++;
                if (i >= children.size())
                    return;
                if (visit(children[i], extra - 1) != Outcome::failed)
                    any_incomplete = true;
            }
        };
        unsigned threads = _opts.threads ? _opts.threads : std::max(2U, std::thread::hardware_concurrency());
        threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, children.size())));
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        pool.clear();
        if (!any_incomplete)
            _memo.record_failure(ex.key, extra);
    }

    const Grid & _g;
    int _r;
    const SolveOptions & _opts;
    std::vector<ForbiddenSubgraph> _catalog;
    bool _normalize;
    VertexSet _full;
    VertexSet _boundary;
    std::vector<std::array<int, 3>> _triples;
    FailureMemo _memo;

    std::atomic<std::uint64_t> _nodes{0};
    std::atomic<bool> _stop{false};
    std::atomic<bool> _budget_hit{false};
    std::mutex _witness_mutex;
    std::optional<VertexSet> _witness;
};

} // namespace

auto solve_min(const Grid & g, int r, const SolveOptions & opts) -> SolveReport
{
    if (r < 1)
        throw std::invalid_argument("threshold r must be >= 1, got " + std::to_string(r));
    const auto start = std::chrono::steady_clock::now();

    const auto forced = forced_seeds(g, r);
    const auto forced_closure = closure_set(g, r, forced);

    std::vector<ForbiddenSubgraph> catalog;
    if (opts.use_catalog) {
        for (auto & h : enumerate_catalog(g, {.max_path_len = opts.max_path_len}))
            if (is_forbidden(g, r, h.support))
                catalog.push_back(std::move(h));
    }

    LowerBound bound{forced.size(), BoundSource::forced};
    if (opts.use_formula_bound && r == 3) {
        const auto f = formula_lower_bound(std::min(g.rows(), g.cols()), std::max(g.rows(), g.cols()));
        if (f && *f > bound.value)
            bound = {*f, BoundSource::formula};
    }
    if (!catalog.empty()) {
        std::vector<ForbiddenSubgraph> unhit;
        for (const auto & h : catalog)
            if (!h.support.intersects(forced_closure))
                unhit.push_back(h);
        const int packing = forced.size() + disjoint_packing_bound(g, unhit).bound();
        if (packing > bound.value)
            bound = {packing, BoundSource::packing};
    }

    const bool normalize = opts.normalize_boundary && r == 3 && g.rows() >= 3 && g.cols() >= 3;
    Search search(g, r, opts, std::move(catalog), normalize);
    const Node root{forced, forced_closure, g.empty_set()};

    for (int k = bound.value; k <= g.vertex_count(); ++k) {
        auto witness = search.run(root, k - forced.size());
        if (search.budget_hit())
            throw BudgetExhausted(k, search.nodes());
        if (witness)
            return SolveReport{k, std::move(*witness), bound, search.nodes(), elapsed_since(start)};
    }
    throw std::logic_error("search exhausted every depth without percolating");
}

auto phi(int m, const SolveOptions & opts) -> int
{
    if (m < 4)
        throw std::invalid_argument("phi is defined for m >= 4, got " + std::to_string(m));
    return solve_min(Grid(4, m), 3, opts).optimum - 5 * (m + 1) / 3;
}

} // namespace bootperc
