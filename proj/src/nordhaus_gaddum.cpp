#include <rid/nordhaus_gaddum.hpp>
#include <rid/characterize.hpp>
#include <rid/codec.hpp>
#include <rid/enumerate.hpp>
#include <rid/error.hpp>
#include <rid/solver.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <mutex>
#include <set>
#include <thread>

namespace rid {

auto to_string(NGStatus s) -> std::string_view
{
    switch (s) {
        case NGStatus::below_range: return "below_range";
        case NGStatus::in_range: return "in_range";
        case NGStatus::at_upper: return "at_upper";
        case NGStatus::exceptional_c5: return "exceptional_c5";
        case NGStatus::violation: return "violation";
    }
    return "violation";
}

auto parse_ng_status(std::string_view s) -> std::optional<NGStatus>
{
    for (auto status : all_ng_statuses)
        if (to_string(status) == s)
            return status;
    return std::nullopt;
}

auto ng_status(int n, int sum, bool is_five_cycle) -> NGStatus
{
    if (n <= 1)
        return NGStatus::in_range;
    if (is_five_cycle)
        return sum == n + 3 ? NGStatus::exceptional_c5 : NGStatus::violation;
    if (sum > n + 2)
        return NGStatus::violation;
    if (n >= 3 && sum < 5)
        return NGStatus::below_range;
    if (sum == n + 2)
        return NGStatus::at_upper;
    return NGStatus::in_range;
}

auto ng_record(const Graph & g) -> NGRecord
{
    NGRecord r;
    r.graph6 = encode_graph6(g);
    r.n = g.order();
    r.gamma = gamma_bnb(g, 2).value;
    r.gamma_comp = gamma_bnb(complement(g), 2).value;
    r.sum = r.gamma + r.gamma_comp;
    r.status = ng_status(r.n, r.sum, is_c5(g));
    return r;
}

auto verify_indexed(std::size_t count, const std::function<Graph(std::size_t)> & at, const StreamOptions & options,
    const RecordSink & sink) -> NGReport
{
    if (options.workers < 1)
        throw InputError("worker count must be at least 1");

    NGReport report;
    std::size_t chunk = std::max<std::size_t>(options.chunk, 1);
    std::vector<std::optional<NGRecord>> slots;

    for (std::size_t start = 0; start < count; start += chunk) {
        std::size_t size = std::min(chunk, count - start);
        slots.assign(size, std::nullopt);

        std::atomic<std::size_t> next{0};
        std::mutex failure_lock;
        std::optional<std::pair<std::size_t, std::string>> failure;
        auto work = [&] {
            for (std::size_t i = next++; i < size; i = next++) {
                try {
                    Graph g = at(start + i);
                    if (g.order() >= options.min_n)
                        slots[i] = ng_record(g);
                }
                catch (const std::exception & e) {
                    std::lock_guard lock(failure_lock);
                    if (! failure || failure->first > start + i)
                        failure.emplace(start + i, e.what());
                }
            }
        };

        int helpers = static_cast<int>(std::min<std::size_t>(options.workers, size)) - 1;
        std::vector<std::jthread> pool;
        for (int w = 0; w < helpers; ++w)
            pool.emplace_back(work);
        work();
        pool.clear();
        if (failure)
            throw StreamItemError(failure->first, failure->second);

        for (auto & slot : slots) {
            if (! slot)
                continue;
            ++report.total;
            ++report.counts[static_cast<std::size_t>(slot->status)];
            if (breaks_bounds(slot->status))
                report.violations.push_back(*slot);
            if (slot->status == NGStatus::at_upper)
                report.extremal.push_back(slot->graph6);
            if (sink)
                sink(*slot);
        }
    }
    return report;
}

auto verify_stream(std::span<const Graph> graphs, const StreamOptions & options, const RecordSink & sink) -> NGReport
{
    return verify_indexed(graphs.size(), [&](std::size_t i) { return graphs[i]; }, options, sink);
}

auto dedup_isomorphic(std::span<const std::string> graph6_ids) -> std::vector<std::string>
{
    std::vector<std::string> result;
    std::set<std::string> seen;
    for (auto & text : graph6_ids) {
        Graph g = parse_graph6(text);
        if (g.order() > max_canonical_order || seen.insert(canonical_form(g)).second)
            result.push_back(text);
    }
    return result;
}

auto collect_extremal(std::span<const Graph> graphs, bool dedup, int workers) -> std::vector<std::string>
{
    StreamOptions options;
    options.workers = workers;
    auto report = verify_stream(graphs, options);
    return dedup ? dedup_isomorphic(report.extremal) : report.extremal;
}

auto format_record(const NGRecord & r) -> std::string
{
    std::string line = r.graph6;
    for (int x : {r.n, r.gamma, r.gamma_comp, r.sum}) {
        line.push_back('\t');
        line += std::to_string(x);
    }
    line.push_back('\t');
    line += to_string(r.status);
    return line;
}

auto parse_record(std::string_view line) -> NGRecord
{
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        auto tab = line.find('\t', pos);
        fields.push_back(line.substr(pos, tab == std::string_view::npos ? std::string_view::npos : tab - pos));
        if (tab == std::string_view::npos)
            break;
        pos = tab + 1;
    }
    if (fields.size() != 6)
        throw ParseError("record: expected 6 tab-separated fields, got " + std::to_string(fields.size()), 0);

    NGRecord r;
    r.graph6 = std::string(fields[0]);
    int * targets[] = {&r.n, &r.gamma, &r.gamma_comp, &r.sum};
    std::size_t offset = fields[0].size() + 1;
    for (int i = 0; i < 4; ++i) {
        auto f = fields[i + 1];
        auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), *targets[i]);
        if (ec != std::errc{} || end != f.data() + f.size())
            throw ParseError("record: bad integer field", offset);
        offset += f.size() + 1;
    }
    auto status = parse_ng_status(fields[5]);
    if (! status)
        throw ParseError("record: unknown status", offset);
    r.status = *status;
    return r;
}

auto summary_json(const NGReport & report) -> std::string
{
    nlohmann::ordered_json j;
    j["total"] = report.total;
    nlohmann::ordered_json counts;
    for (auto s : all_ng_statuses)
        counts[std::string(to_string(s))] = report.count(s);
    j["counts"] = counts;
    j["violations"] = report.violations.size();
    j["extremal"] = report.extremal.size();
    j["ok"] = report.ok();
    return j.dump();
}

}
