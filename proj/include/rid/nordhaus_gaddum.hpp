#pragma once

#include <rid/error.hpp>
#include <rid/graph.hpp>

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rid {

enum class NGStatus
{
    below_range,    // n >= 3 and the sum is under 5
    in_range,
    at_upper,       // sum = n + 2
    exceptional_c5, // a 5-cycle with sum = n + 3
    violation       // over n + 2, or a 5-cycle missing n + 3
};

inline constexpr std::array all_ng_statuses{
    NGStatus::below_range, NGStatus::in_range, NGStatus::at_upper, NGStatus::exceptional_c5, NGStatus::violation};

auto to_string(NGStatus s) -> std::string_view;
auto parse_ng_status(std::string_view s) -> std::optional<NGStatus>;

// Both below_range and violation break the bounds.
inline auto breaks_bounds(NGStatus s) -> bool { return s == NGStatus::below_range || s == NGStatus::violation; }

struct NGRecord
{
    std::string graph6;
    int n = 0;
    int gamma = 0;
    int gamma_comp = 0;
    int sum = 0;
    NGStatus status = NGStatus::in_range;

    friend auto operator==(const NGRecord &, const NGRecord &) -> bool = default;
};

// Bounds: nothing for n <= 1; only the upper bound n + 2 for n = 2; for n >= 3
// the lower bound 5 as well, with 5-cycles required to reach exactly n + 3.
auto ng_status(int n, int sum, bool is_five_cycle) -> NGStatus;

// gamma_ri2 of g and of its complement, by branch and bound.
auto ng_record(const Graph & g) -> NGRecord;

struct NGReport
{
    std::size_t total = 0;
    std::array<std::size_t, all_ng_statuses.size()> counts{};
    std::vector<NGRecord> violations;
    std::vector<std::string> extremal;

    auto count(NGStatus s) const -> std::size_t { return counts[static_cast<std::size_t>(s)]; }
    auto ok() const -> bool { return violations.empty(); }
};

struct StreamOptions
{
    int min_n = 0;       // graphs of smaller order are skipped entirely
    int workers = 1;
    std::size_t chunk = 4096;
};

// Raised when a stream item cannot be processed; index is its stream position.
class StreamItemError : public Error
{
public:
    StreamItemError(std::size_t index, const std::string & what) :
        Error(what),
        _index(index)
    {
    }

    auto index() const -> std::size_t { return _index; }

private:
    std::size_t _index;
};

using RecordSink = std::function<void(const NGRecord &)>;

// Records are computed by a pool of workers in chunks, then merged and handed
// to the sink in stream order, so the report and the sink output do not
// depend on the worker count.
auto verify_indexed(std::size_t count, const std::function<Graph(std::size_t)> & at, const StreamOptions & options = {},
    const RecordSink & sink = {}) -> NGReport;

auto verify_stream(std::span<const Graph> graphs, const StreamOptions & options = {}, const RecordSink & sink = {}) -> NGReport;

// Keeps the first graph of each isomorphism class; orders over 8 pass through.
auto dedup_isomorphic(std::span<const std::string> graph6_ids) -> std::vector<std::string>;

// graph6 ids of graphs with sum exactly n + 2, in stream order. With dedup,
// later graphs isomorphic to an earlier one are dropped (orders <= 8 only).
auto collect_extremal(std::span<const Graph> graphs, bool dedup, int workers = 1) -> std::vector<std::string>;

// graph6 TAB n TAB gamma TAB gamma_comp TAB sum TAB status
auto format_record(const NGRecord & r) -> std::string;
auto parse_record(std::string_view line) -> NGRecord;

// One-line JSON object with the totals.
auto summary_json(const NGReport & report) -> std::string;

}
