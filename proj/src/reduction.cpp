#include <rid/reduction.hpp>
#include <rid/codec.hpp>
#include <rid/error.hpp>

#include <charconv>
#include <cstdio>
#include <sstream>

namespace rid {

auto bipartition(const Graph & g) -> std::optional<Bipartition>
{
    int n = g.order();
    std::vector<int> side(n, -1);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (side[root] != -1)
            continue;
        side[root] = 0;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            bool odd = false;
            for_each_bit(g.row(u), [&](int v) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                }
                else if (side[v] == side[u])
                    odd = true;
            });
            if (odd)
                return std::nullopt;
        }
    }

    Bipartition result;
    for (int v = 0; v < n; ++v)
        (side[v] == 0 ? result.x : result.y).insert(v);
    return result;
}

auto build_reduction(const Graph & g, const Bipartition & parts, int k) -> ReductionInstance
{
    int n = g.order();
    if (k < 2)
        throw InputError("the reduction needs k >= 2, got " + std::to_string(k));
    if ((parts.x.bits & parts.y.bits) || (parts.x.bits | parts.y.bits) != g.all())
        throw InputError("bipartition classes must partition the vertex set");
    for (auto [u, v] : g.edges())
        if (parts.x.contains(u) == parts.x.contains(v))
            throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " lies inside one bipartition class");
    if (n * k > max_vertices)
        throw UnsupportedSize("reduction target would have " + std::to_string(n * k) + " vertices, over " + std::to_string(max_vertices));

    ReductionInstance inst{g, parts, k, Graph(n * k), {}, {}};
    for (auto [u, v] : g.edges())
        inst.target.add_edge(u, v);
    for (int v = 0; v < n; ++v) {
        inst.core_map.push_back(v);
        auto & leaves = inst.leaf_map.emplace_back();
        for (int j = 0; j < k - 1; ++j) {
            int leaf = n + v * (k - 1) + j;
            inst.target.add_edge(v, leaf);
            leaves.push_back(leaf);
        }
    }
    return inst;
}

auto verify_reduction(const ReductionInstance & inst, const Budget & budget) -> ReductionCheck
{
    ReductionCheck check;
    auto dom = domination_number(inst.source, budget);
    auto rainbow = gamma_bnb(inst.target, inst.k);
    check.gamma_dom = dom.value;
    check.gamma_rik_target = rainbow.value;
    check.expected = inst.leaf_weight() + dom.value;
    check.equal = check.expected == check.gamma_rik_target;
    check.dominating_witness = dom.witness;
    check.target_witness = rainbow.witness;
    return check;
}

auto lift_dominating_set(const ReductionInstance & inst, VertexSet d) -> Labeling
{
    const Graph & g = inst.source;
    if (d.bits & ~g.all())
        throw InputError("set exceeds the source order");
    if (! is_dominating(g, d))
        throw InputError("set does not dominate the source graph");

    Mask d1 = d.bits & inst.parts.x.bits, d2 = d.bits & inst.parts.y.bits;
    Labeling f{inst.k, std::vector<int>(inst.target.order(), 0)};
    for (int v = 0; v < g.order(); ++v) {
        int side;
        if (d1 & bit(v))
            side = 1;
        else if (d2 & bit(v))
            side = 2;
        else
            side = (g.row(v) & d1) ? 1 : 2;
        if (d.contains(v))
            f.labels[inst.core_map[v]] = side;

        int colour = 1;
        for (int leaf : inst.leaf_map[v]) {
            if (colour == side)
                ++colour;
            f.labels[leaf] = colour++;
        }
    }
    return f;
}

auto project_ridf(const ReductionInstance & inst, const Labeling & f) -> VertexSet
{
    if (f.k != inst.k)
        throw InputError("labeling uses k = " + std::to_string(f.k) + " but the instance has k = " + std::to_string(inst.k));
    auto violations = validate(inst.target, f);
    if (! violations.empty())
        throw InputError("labeling is not a valid kRiDF of the target: " + to_string(violations.front()));

    VertexSet d;
    for (int v = 0; v < inst.source.order(); ++v)
        if (f.labels[inst.core_map[v]] != 0)
            d.insert(v);
    return d;
}

namespace {
    auto hex(Mask m) -> std::string
    {
        char buffer[24];
        std::snprintf(buffer, sizeof(buffer), "0x%llx", static_cast<unsigned long long>(m));
        return buffer;
    }

    auto parse_int(std::string_view s, int base, std::size_t offset) -> unsigned long long
    {
        unsigned long long value = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value, base);
        if (ec != std::errc{} || end != s.data() + s.size() || s.empty())
            throw ParseError("instance: bad number \"" + std::string(s) + "\"", offset);
        return value;
    }

    auto split(std::string_view s, char sep) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> result;
        while (! s.empty()) {
            auto at = s.find(sep);
            if (at != 0)
                result.push_back(s.substr(0, at));
            if (at == std::string_view::npos)
                break;
            s.remove_prefix(at + 1);
        }
        return result;
    }
}

auto format_instance(const ReductionInstance & inst) -> std::string
{
    std::ostringstream out;
    out << "source " << encode_graph6(inst.source) << '\n';
    out << "x " << hex(inst.parts.x.bits) << '\n';
    out << "y " << hex(inst.parts.y.bits) << '\n';
    out << "k " << inst.k << '\n';
    out << "target " << encode_graph6(inst.target) << '\n';
    out << "core";
    for (int c : inst.core_map)
        out << ' ' << c;
    out << "\nleaves";
    for (auto & group : inst.leaf_map) {
        out << ' ';
        for (std::size_t i = 0; i < group.size(); ++i)
            out << (i ? "," : "") << group[i];
    }
    out << '\n';
    return out.str();
}

auto parse_instance(std::string_view text) -> ReductionInstance
{
    static constexpr std::string_view keys[] = {"source", "x", "y", "k", "target", "core", "leaves"};
    std::string_view values[7];
    std::size_t value_offsets[7] = {};
    std::size_t offset = 0;

    for (int i = 0; i < 7; ++i) {
        if (offset >= text.size())
            throw ParseError("instance: missing \"" + std::string(keys[i]) + "\" line", offset);
        auto end = text.find('\n', offset);
        auto line = text.substr(offset, end == std::string_view::npos ? std::string_view::npos : end - offset);
        if (! line.starts_with(keys[i]) || (line.size() > keys[i].size() && line[keys[i].size()] != ' '))
            throw ParseError("instance: expected \"" + std::string(keys[i]) + "\" line", offset);
        std::size_t skip = std::min(line.size(), keys[i].size() + 1);
        values[i] = line.substr(skip);
        value_offsets[i] = offset + skip;
        offset = end == std::string_view::npos ? text.size() : end + 1;
    }
    if (text.substr(offset).find_first_not_of(" \t\r\n") != std::string_view::npos)
        throw ParseError("instance: trailing content", offset);

    Graph source = parse_graph6(values[0]);
    Bipartition parts{VertexSet{parse_int(values[1].substr(values[1].starts_with("0x") ? 2 : 0), 16, value_offsets[1])},
        VertexSet{parse_int(values[2].substr(values[2].starts_with("0x") ? 2 : 0), 16, value_offsets[2])}};
    int k = static_cast<int>(parse_int(values[3], 10, value_offsets[3]));
    auto inst = build_reduction(source, parts, k);

    Graph target = parse_graph6(values[4]);
    std::vector<int> core;
    for (auto field : split(values[5], ' '))
        core.push_back(static_cast<int>(parse_int(field, 10, value_offsets[5])));
    std::vector<std::vector<int>> leaves;
    for (auto group : split(values[6], ' ')) {
        auto & out = leaves.emplace_back();
        for (auto field : split(group, ','))
            out.push_back(static_cast<int>(parse_int(field, 10, value_offsets[6])));
    }

    if (target != inst.target || core != inst.core_map || leaves != inst.leaf_map)
        throw InputError("instance target or maps do not match the construction from its source");
    return inst;
}

}
