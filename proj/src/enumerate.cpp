#include <rid/enumerate.hpp>
#include <rid/codec.hpp>
#include <rid/error.hpp>

#include <algorithm>
#include <array>
#include <set>

namespace rid {

auto labeled_graph(int n, std::uint64_t mask) -> Graph
{
    Graph g(n);
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((mask >> b) & 1)
                g.add_edge(i, j);
    return g;
}

auto labeled_graph_count(int n) -> std::uint64_t
{
    if (n < 0 || n > max_labeled_enumeration)
        throw UnsupportedSize("labeled enumeration supports 0 <= n <= " + std::to_string(max_labeled_enumeration) + ", got " + std::to_string(n));
    return std::uint64_t{1} << pair_count(n);
}

auto for_each_labeled_graph(int n, const std::function<void(const Graph &)> & fn) -> void
{
    auto count = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < count; ++mask)
        fn(labeled_graph(n, mask));
}

auto enumerate_labeled_graphs(int n) -> std::vector<Graph>
{
    std::vector<Graph> result;
    result.reserve(labeled_graph_count(n));
    for_each_labeled_graph(n, [&](const Graph & g) { result.push_back(g); });
    return result;
}

namespace {
    // Branch and bound over vertex orderings. Column p of the bit string holds
    // adjacency of the vertex at position p to positions 0..p-1, the earliest
    // position in the most significant bit, so comparing columns in order is
    // comparing the bit strings lexicographically.
    class CanonicalSearch
    {
    public:
        explicit CanonicalSearch(const Graph & g) :
            _g(g),
            _n(g.order())
        {
        }

        auto run() -> std::array<int, max_canonical_order>
        {
            place(0, 0);
            return _best_perm;
        }

    private:
        const Graph & _g;
        int _n;
        std::array<int, max_canonical_order> _perm{};
        std::array<unsigned, max_canonical_order> _cols{};
        std::array<int, max_canonical_order> _best_perm{};
        std::array<unsigned, max_canonical_order> _best_cols{};
        bool _have_best = false;

        // -1 if the current prefix 0..p is smaller, 0 if equal, 1 if larger.
        auto compare_prefix(int p) const -> int
        {
            if (! _have_best)
                return -1;
            for (int i = 0; i <= p; ++i)
                if (_cols[i] != _best_cols[i])
                    return _cols[i] < _best_cols[i] ? -1 : 1;
            return 0;
        }

        auto place(int p, Mask used) -> void
        {
            if (p == _n) {
                if (compare_prefix(_n - 1) < 0) {
                    _best_perm = _perm;
                    _best_cols = _cols;
                    _have_best = true;
                }
                return;
            }

            std::array<std::pair<unsigned, int>, max_canonical_order> candidates{};
            int count = 0;
            for_each_bit(_g.all() & ~used, [&](int v) {
                unsigned col = 0;
                for (int i = 0; i < p; ++i)
                    col = (col << 1) | (_g.adjacent(_perm[i], v) ? 1u : 0u);
                candidates[count++] = {col, v};
            });
            std::sort(candidates.begin(), candidates.begin() + count);

            for (int c = 0; c < count; ++c) {
                auto [col, v] = candidates[c];
                _perm[p] = v;
                _cols[p] = col;
                if (compare_prefix(p) > 0)
                    break;
                place(p + 1, used | bit(v));
            }
        }
    };
}

auto canonical_form(const Graph & g) -> std::string
{
    int n = g.order();
    if (n > max_canonical_order)
        throw UnsupportedSize("canonical form supports at most " + std::to_string(max_canonical_order) + " vertices, got " + std::to_string(n));
    if (n <= 1)
        return encode_graph6(g);

    auto order = CanonicalSearch(g).run();
    std::vector<int> position(n);
    for (int p = 0; p < n; ++p)
        position[order[p]] = p;
    return encode_graph6(permute(g, position));
}

auto enumerate_nonisomorphic(int n) -> std::vector<Graph>
{
    if (n < 0 || n > max_canonical_order)
        throw UnsupportedSize("non-isomorphic enumeration supports 0 <= n <= " + std::to_string(max_canonical_order) + ", got " + std::to_string(n));

    std::set<std::string> level{encode_graph6(Graph(0))};
    for (int order = 1; order <= n; ++order) {
        std::set<std::string> next;
        for (auto & text : level) {
            Graph base = parse_graph6(text);
            for (Mask nbrs = 0; nbrs < bit(order - 1); ++nbrs) {
                Graph g(order);
                for (auto [u, v] : base.edges())
                    g.add_edge(u, v);
                for_each_bit(nbrs, [&](int u) { g.add_edge(u, order - 1); });
                next.insert(canonical_form(g));
            }
        }
        level = std::move(next);
    }

    std::vector<Graph> result;
    result.reserve(level.size());
    for (auto & text : level)
        result.push_back(parse_graph6(text));
    return result;
}

auto enumerate_nonisomorphic_connected(int n) -> std::vector<Graph>
{
    auto all = enumerate_nonisomorphic(n);
    std::erase_if(all, [](const Graph & g) { return ! g.is_connected(); });
    return all;
}

}
