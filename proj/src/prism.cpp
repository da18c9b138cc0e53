#include <rid/prism.hpp>

namespace rid {

auto rainbow_to_prism_set(const Labeling & f, int n) -> VertexSet
{
    VertexSet s;
    for (int v = 0; v < n; ++v)
        if (f.labels[v] != 0)
            s.insert((f.labels[v] - 1) * n + v);
    return s;
}

auto prism_check(const Graph & g, int k, const Budget & budget) -> PrismReport
{
    Graph prism = prism_product(g, k);
    PrismReport report;
    report.k = k;
    report.gamma = gamma_bnb(g, k);
    report.i_prism = independent_domination(prism, budget);
    report.equal = report.gamma.value == report.i_prism.value;
    report.lifted_witness = rainbow_to_prism_set(report.gamma.witness, g.order());
    report.lifted_witness_valid = is_independent(prism, report.lifted_witness) && is_dominating(prism, report.lifted_witness);
    return report;
}

}
