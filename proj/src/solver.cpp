#include <rid/solver.hpp>
#include <rid/error.hpp>

#include <algorithm>
#include <limits>
#include <numeric>

namespace rid {

auto to_string(Method m) -> std::string_view
{
    return m == Method::brute ? "brute" : "bnb";
}

auto saturating_power(std::uint64_t base, int exponent) -> std::uint64_t
{
    std::uint64_t result = 1;
    for (int i = 0; i < exponent; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        result *= base;
    }
    return result;
}

namespace {
    auto check_k(int k) -> void
    {
        if (k < 1 || k >= max_vertices)
            throw InputError("k must lie in [1, " + std::to_string(max_vertices - 1) + "], got " + std::to_string(k));
    }

    // classes[c] holds the vertices labeled c; every vertex is in exactly one class.
    auto valid_classes(const Graph & g, std::span<const Mask> classes) -> bool
    {
        int k = static_cast<int>(classes.size()) - 1;
        for (int i = 1; i <= k; ++i) {
            bool independent = true;
            for_each_bit(classes[i], [&](int v) {
                if (g.row(v) & classes[i])
                    independent = false;
            });
            if (! independent)
                return false;
        }
        bool dominated = true;
        for_each_bit(classes[0], [&](int v) {
            for (int i = 1; i <= k; ++i)
                if (! (g.row(v) & classes[i]))
                    dominated = false;
        });
        return dominated;
    }

    // Lexicographic odometer over the labels of the free vertices (ascending,
    // first free vertex most significant), keeping the first labeling of
    // minimum weight among valid ones.
    auto brute_over(const Graph & g, int k, std::vector<int> labels, const std::vector<int> & free) -> std::optional<SolveResult>
    {
        int n = g.order();
        std::vector<Mask> classes(k + 1, 0);
        for (int v = 0; v < n; ++v)
            classes[labels[v]] |= bit(v);
        int nonzero = static_cast<int>(std::count_if(labels.begin(), labels.end(), [](int x) { return x != 0; }));

        std::optional<SolveResult> best;
        std::uint64_t visited = 0;
        auto relabel = [&](int v, int value) {
            classes[labels[v]] &= ~bit(v);
            nonzero -= labels[v] != 0;
            labels[v] = value;
            classes[value] |= bit(v);
            nonzero += value != 0;
        };

        while (true) {
            ++visited;
            if ((! best || nonzero < best->value) && valid_classes(g, classes))
                best = SolveResult{nonzero, Labeling{k, labels}, 0, Method::brute};

            int pos = static_cast<int>(free.size()) - 1;
            while (pos >= 0 && labels[free[pos]] == k) {
                relabel(free[pos], 0);
                --pos;
            }
            if (pos < 0)
                break;
            relabel(free[pos], labels[free[pos]] + 1);
        }

        if (best)
            best->nodes_explored = visited;
        return best;
    }

    class ComponentSearch
    {
    public:
        ComponentSearch(const Graph & g, int k) :
            _g(g),
            _k(k),
            _n(g.order()),
            _classes(k + 1, 0),
            _avail(k + 1, 0),
            _labels(g.order(), 0)
        {
        }

        auto nodes() const -> std::uint64_t { return _nodes; }

        // Optimal value, starting from an incumbent of the given value.
        auto minimise(std::span<const int> order, int incumbent) -> int
        {
            _order.assign(order.begin(), order.end());
            _bound = incumbent;
            _stop_at_first = false;
            reset();
            descend(0);
            return _bound;
        }

        // Lexicographically smallest valid labeling of weight at most limit,
        // searching vertices in index order.
        auto first_within(int limit) -> std::vector<int>
        {
            _order.resize(_n);
            std::iota(_order.begin(), _order.end(), 0);
            _bound = limit + 1;
            _stop_at_first = true;
            _found = false;
            reset();
            descend(0);
            if (! _found)
                throw Error("internal: no labeling within the optimal weight");
            return _best_labels;
        }

    private:
        const Graph & _g;
        int _k, _n;
        std::vector<Mask> _classes, _avail;
        std::vector<int> _labels, _order, _best_labels;
        Mask _unassigned = 0;
        int _nonzero = 0, _bound = 0;
        bool _stop_at_first = false, _found = false;
        std::uint64_t _nodes = 0;

        auto reset() -> void
        {
            std::fill(_classes.begin(), _classes.end(), 0);
            _unassigned = _g.all();
            _nonzero = 0;
        }

        // Every 0-vertex still has, for each colour, a neighbour that carries
        // it or could still take it without breaking independence.
        auto feasible() -> bool
        {
            if (! _classes[0])
                return true;
            for (int i = 1; i <= _k; ++i)
                _avail[i] = 0;
            for_each_bit(_unassigned, [&](int w) {
                for (int i = 1; i <= _k; ++i)
                    if (! (_g.row(w) & _classes[i]))
                        _avail[i] |= bit(w);
            });
            Mask zeros = _classes[0];
            while (zeros) {
                int z = std::countr_zero(zeros);
                zeros &= zeros - 1;
                for (int i = 1; i <= _k; ++i)
                    if (! (_g.row(z) & (_classes[i] | _avail[i])))
                        return false;
            }
            return true;
        }

        auto descend(int pos) -> void
        {
            ++_nodes;
            if (_nonzero >= _bound)
                return;
            if (pos == _n) {
                _bound = _nonzero;
                _best_labels = _labels;
                _found = true;
                return;
            }

            int v = _order[pos];
            _unassigned &= ~bit(v);
            for (int c = 0; c <= _k; ++c) {
                if (c != 0 && (_g.row(v) & _classes[c]))
                    continue;
                _labels[v] = c;
                _classes[c] |= bit(v);
                _nonzero += c != 0;
                if (feasible())
                    descend(pos + 1);
                _nonzero -= c != 0;
                _classes[c] &= ~bit(v);
                if (_stop_at_first && _found)
                    break;
            }
            _labels[v] = 0;
            _unassigned |= bit(v);
        }
    };

    auto greedy_colour(const Graph & g, int k, std::vector<int> & labels, std::vector<Mask> & classes, int v) -> void
    {
        int chosen = 0;
        for (int j = 1; j <= k; ++j)
            if (! (g.row(v) & classes[j])) {
                chosen = j;
                break;
            }
        labels[v] = chosen;
        classes[chosen] |= bit(v);
    }

    auto solve_component(const Graph & g, int k, std::uint64_t & nodes) -> std::vector<int>
    {
        int n = g.order();
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

        std::vector<int> greedy(n, 0);
        std::vector<Mask> classes(k + 1, 0);
        for (int v : order)
            greedy_colour(g, k, greedy, classes, v);
        int incumbent = static_cast<int>(std::count_if(greedy.begin(), greedy.end(), [](int x) { return x != 0; }));

        ComponentSearch search(g, k);
        int value = search.minimise(order, incumbent);
        auto labels = search.first_within(value);
        nodes += search.nodes();
        return labels;
    }
}

auto gamma_brute(const Graph & g, int k, const Budget & budget) -> SolveResult
{
    check_k(k);
    int n = g.order();
    auto needed = saturating_power(static_cast<std::uint64_t>(k) + 1, n);
    if (needed > budget.max_labelings)
        throw BudgetExceeded("brute force needs " + std::to_string(k + 1) + "^" + std::to_string(n) + " labelings, over the budget of " + std::to_string(budget.max_labelings) + "; use gamma_bnb");

    std::vector<int> free(n);
    std::iota(free.begin(), free.end(), 0);
    auto result = brute_over(g, k, std::vector<int>(n, 0), free);
    if (! result)
        throw Error("internal: no valid labeling found");
    return *result;
}

auto gamma_bnb(const Graph & g, int k) -> SolveResult
{
    check_k(k);
    SolveResult result{0, Labeling{k, std::vector<int>(g.order(), 0)}, 0, Method::bnb};
    for (auto & part : components(g)) {
        auto labels = solve_component(part.subgraph, k, result.nodes_explored);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            result.witness.labels[part.vertex_map[i]] = labels[i];
            result.value += labels[i] != 0;
        }
    }
    return result;
}

auto extend_greedy(const Graph & g, const PartialLabeling & p, std::span<const int> order) -> Labeling
{
    check_k(p.k);
    int n = g.order();
    if (static_cast<int>(p.assigned.size()) != n)
        throw InputError("partial labeling has " + std::to_string(p.assigned.size()) + " entries for a graph of order " + std::to_string(n));

    Mask assigned = p.assigned_mask();
    Mask listed = 0;
    for (int v : order) {
        if (v < 0 || v >= n || (listed & bit(v)) || (assigned & bit(v)))
            throw InputError("extension order must list each unassigned vertex exactly once");
        listed |= bit(v);
    }
    if ((listed | assigned) != g.all())
        throw InputError("extension order must list each unassigned vertex exactly once");

    auto [sub, map] = induced_subgraph(g, VertexSet{assigned});
    Labeling restricted{p.k, {}};
    for (int v : map)
        restricted.labels.push_back(*p.assigned[v]);
    if (! is_valid(sub, restricted))
        throw InputError("partial labeling is not a valid kRiDF of the subgraph induced by its assigned vertices");

    std::vector<int> labels(n, 0);
    std::vector<Mask> classes(p.k + 1, 0);
    for (int v : map) {
        labels[v] = *p.assigned[v];
        classes[labels[v]] |= bit(v);
    }
    for (int v : order)
        greedy_colour(g, p.k, labels, classes, v);
    return Labeling{p.k, std::move(labels)};
}

auto solve_constrained(const Graph & g, int k, const PartialLabeling & fixed, const Budget & budget) -> std::optional<SolveResult>
{
    check_k(k);
    int n = g.order();
    if (fixed.k != k)
        throw InputError("partial labeling uses k = " + std::to_string(fixed.k) + " but the solve asks for k = " + std::to_string(k));
    if (static_cast<int>(fixed.assigned.size()) != n)
        throw InputError("partial labeling has " + std::to_string(fixed.assigned.size()) + " entries for a graph of order " + std::to_string(n));

    std::vector<int> labels(n, 0), free;
    for (int v = 0; v < n; ++v) {
        if (! fixed.assigned[v])
            free.push_back(v);
        else if (*fixed.assigned[v] < 0 || *fixed.assigned[v] > k)
            throw InputError("fixed label of vertex " + std::to_string(v) + " outside [0, " + std::to_string(k) + "]");
        else
            labels[v] = *fixed.assigned[v];
    }

    auto needed = saturating_power(static_cast<std::uint64_t>(k) + 1, static_cast<int>(free.size()));
    if (needed > budget.max_labelings)
        throw BudgetExceeded("constrained solve needs " + std::to_string(k + 1) + "^" + std::to_string(free.size()) + " labelings, over the budget of " + std::to_string(budget.max_labelings));
    return brute_over(g, k, std::move(labels), free);
}

}
