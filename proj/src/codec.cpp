#include <rid/codec.hpp>
#include <rid/error.hpp>

#include <cctype>
#include <sstream>

namespace rid {

namespace {
    constexpr int graph6_bias = 63;

    auto is_graph6_byte(char c) -> bool { return c >= 63 && c <= 126; }

    auto strip_line_end(std::string_view s) -> std::string_view
    {
        while (! s.empty() && (s.back() == '\n' || s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    }

    auto is_blank(std::string_view s) -> bool
    {
        for (char c : s)
            if (! std::isspace(static_cast<unsigned char>(c)))
                return false;
        return true;
    }
}

auto parse_graph6(std::string_view line) -> Graph
{
    std::size_t base = 0;
    if (line.starts_with(graph6_header)) {
        line.remove_prefix(graph6_header.size());
        base = graph6_header.size();
    }
    line = strip_line_end(line);

    if (line.empty())
        throw ParseError("graph6: missing order byte", base);
    if (line[0] == 126)
        throw ParseError("graph6: long form (n > 62) is not supported", base);
    if (! is_graph6_byte(line[0]))
        throw ParseError("graph6: invalid order byte", base);

    int n = line[0] - graph6_bias;
    std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t byte_count = (bit_count + 5) / 6;

    for (std::size_t i = 1; i < line.size() && i <= byte_count; ++i)
        if (! is_graph6_byte(line[i]))
            throw ParseError("graph6: invalid data byte", base + i);
    if (line.size() < 1 + byte_count)
        throw ParseError("graph6: truncated edge section, expected " + std::to_string(byte_count) + " data bytes", base + line.size());
    if (line.size() > 1 + byte_count)
        throw ParseError("graph6: trailing garbage", base + 1 + byte_count);

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int value = line[1 + k / 6] - graph6_bias;
            if ((value >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    if (bit_count % 6 != 0) {
        int value = line[byte_count] - graph6_bias;
        if (value & ((1 << (6 - bit_count % 6)) - 1))
            throw ParseError("graph6: nonzero padding bits", base + byte_count);
    }
    return g;
}

auto encode_graph6(const Graph & g) -> std::string
{
    int n = g.order();
    if (n > max_graph6_order)
        throw UnsupportedSize("graph6 short form supports at most 62 vertices, got " + std::to_string(n));
    std::string result(1, static_cast<char>(n + graph6_bias));
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                result.push_back(static_cast<char>(acc + graph6_bias));
                acc = filled = 0;
            }
        }
    if (filled)
        result.push_back(static_cast<char>((acc << (6 - filled)) + graph6_bias));
    return result;
}

namespace {
    auto read_edge_list_at(std::istream & in, std::size_t & line_no, std::string first) -> Graph
    {
        std::size_t header_line = line_no;
        std::istringstream header(first);
        long long n = -1, m = -1;
        std::string rest;
        if (! (header >> n >> m) || (header >> rest))
            throw InputError("line " + std::to_string(header_line) + ": expected edge-list header \"n m\"");
        if (n < 0 || n > max_vertices)
            throw UnsupportedSize("line " + std::to_string(header_line) + ": order " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
        if (m < 0)
            throw InputError("line " + std::to_string(header_line) + ": negative edge count");

        Graph g(static_cast<int>(n));
        std::string text;
        for (long long e = 0; e < m; ++e) {
            if (! std::getline(in, text))
                throw InputError("line " + std::to_string(line_no + 1) + ": edge list ended after " + std::to_string(e) + " of " + std::to_string(m) + " edges");
            ++line_no;
            std::istringstream row(text);
            long long u = -1, v = -1;
            if (! (row >> u >> v) || (row >> rest))
                throw InputError("line " + std::to_string(line_no) + ": expected edge \"u v\"");
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw InputError("line " + std::to_string(line_no) + ": invalid edge " + std::to_string(u) + " " + std::to_string(v));
            if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
                throw InputError("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
        return g;
    }

    auto looks_like_edge_list_header(const std::string & s) -> bool
    {
        std::istringstream header(s);
        long long n, m;
        std::string rest;
        return (header >> n >> m) && ! (header >> rest);
    }
}

auto parse_edge_list(std::istream & in) -> Graph
{
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (! is_blank(line))
            return read_edge_list_at(in, line_no, line);
    }
    throw InputError("edge list: missing header");
}

auto encode_edge_list(const Graph & g) -> std::string
{
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
    return out.str();
}

auto read_graphs(std::istream & in) -> std::vector<InputRecord>
{
    std::vector<InputRecord> result;
    std::string line;
    std::size_t line_no = 0;
    enum class Format { unknown, graph6, edge_list } format = Format::unknown;

    while (std::getline(in, line)) {
        ++line_no;
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        if (is_blank(line))
            continue;
        if (format == Format::unknown)
            format = looks_like_edge_list_header(line) ? Format::edge_list : Format::graph6;

        if (format == Format::edge_list) {
            std::size_t start = line_no;
            Graph g = read_edge_list_at(in, line_no, line);
            std::string text = encode_graph6(g);
            result.push_back(InputRecord{std::move(g), std::move(text), start, false, true});
        }
        else {
            try {
                Graph g = parse_graph6(line);
                bool header = line.starts_with(graph6_header);
                std::string text = header ? line.substr(graph6_header.size()) : line;
                result.push_back(InputRecord{std::move(g), std::move(text), line_no, header});
            }
            catch (const ParseError & e) {
                throw InputError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
    }
    return result;
}

}
