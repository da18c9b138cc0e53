#include <rid/classical.hpp>
#include <rid/error.hpp>

#include <string>

namespace rid {

auto is_independent(const Graph & g, VertexSet s) -> bool
{
    bool ok = true;
    for_each_bit(s.bits, [&](int v) {
        if (g.row(v) & s.bits)
            ok = false;
    });
    return ok;
}

auto is_dominating(const Graph & g, VertexSet s) -> bool
{
    return g.closed_neighbourhood(s.bits) == g.all();
}

namespace {
    template <typename Accept_>
    auto smallest_subset(const Graph & g, const Budget & budget, const char * what, Accept_ && accept) -> SetResult
    {
        int n = g.order();
        if (saturating_power(2, n) > budget.max_subsets)
            throw BudgetExceeded(std::string(what) + " needs 2^" + std::to_string(n) + " subsets, over the budget of " + std::to_string(budget.max_subsets));

        std::uint64_t visited = 0;
        for (int size = 0; size <= n; ++size) {
            if (size == 0) {
                ++visited;
                if (accept(Mask{0}))
                    return SetResult{0, VertexSet{0}, visited};
                continue;
            }
            // Gosper's hack: all masks of the given popcount in increasing order.
            Mask s = low_bits(size);
            while (true) {
                ++visited;
                if (accept(s))
                    return SetResult{size, VertexSet{s}, visited};
                Mask c = s & -s, r = s + c;
                if (r == 0 || (r & ~g.all()))
                    break;
                s = (((r ^ s) >> 2) / c) | r;
                if (s & ~g.all())
                    break;
            }
        }
        throw Error("internal: no dominating set found");
    }
}

auto independent_domination(const Graph & g, const Budget & budget) -> SetResult
{
    return smallest_subset(g, budget, "independent domination", [&](Mask s) {
        return is_independent(g, VertexSet{s}) && is_dominating(g, VertexSet{s});
    });
}

auto domination_number(const Graph & g, const Budget & budget) -> SetResult
{
    return smallest_subset(g, budget, "domination number", [&](Mask s) {
        return is_dominating(g, VertexSet{s});
    });
}

}
