#include <rid/cli.hpp>
#include <rid/characterize.hpp>
#include <rid/codec.hpp>
#include <rid/enumerate.hpp>
#include <rid/error.hpp>
#include <rid/nordhaus_gaddum.hpp>
#include <rid/prism.hpp>
#include <rid/reduction.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>

namespace rid::cli {

namespace {
    using nlohmann::ordered_json;

    // A stream of graphs addressable by position, so that large enumerations
    // are never materialised.
    struct GraphSource
    {
        std::size_t count = 0;
        std::function<Graph(std::size_t)> at;
        std::function<std::string(std::size_t)> where;
        std::shared_ptr<std::vector<InputRecord>> records;  // file input only
    };

    // Runs fn for every graph, prefixing any error with the graph's location.
    template <typename Fn_>
    auto for_each_input(const GraphSource & source, Fn_ && fn) -> void
    {
        for (std::size_t i = 0; i < source.count; ++i) {
            try {
                fn(i, source.at(i));
            }
            catch (const Error & e) {
                throw InputError(source.where(i) + ": " + e.what());
            }
        }
    }

    auto random_graph(int n, std::mt19937_64 & rng) -> Graph
    {
        Graph g(n);
        std::bernoulli_distribution coin(0.5);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        return g;
    }

    auto open_source(const RunConfig & config, std::istream & in) -> GraphSource
    {
        GraphSource source;
        if (config.enumerate_n) {
            int n = *config.enumerate_n;
            source.where = [](std::size_t i) { return "graph #" + std::to_string(i + 1); };
            if (config.dedup) {
                auto graphs = std::make_shared<std::vector<Graph>>(enumerate_nonisomorphic(n));
                source.count = graphs->size();
                source.at = [graphs](std::size_t i) { return (*graphs)[i]; };
            }
            else {
                source.count = labeled_graph_count(n);
                source.at = [n](std::size_t i) { return labeled_graph(n, i); };
            }
            return source;
        }

        if (config.random_n) {
            if (*config.random_n < 0 || *config.random_n > max_vertices)
                throw UnsupportedSize("random graph order must lie in 0.." + std::to_string(max_vertices));
            std::mt19937_64 rng(config.seed);
            auto graphs = std::make_shared<std::vector<Graph>>();
            for (int i = 0; i < config.random_count; ++i)
                graphs->push_back(random_graph(*config.random_n, rng));
            source.count = graphs->size();
            source.at = [graphs](std::size_t i) { return (*graphs)[i]; };
            source.where = [](std::size_t i) { return "random graph #" + std::to_string(i + 1); };
            return source;
        }

        if (config.input_path) {
            std::ifstream file(*config.input_path);
            if (! file)
                throw InputError("cannot open input file " + *config.input_path);
            source.records = std::make_shared<std::vector<InputRecord>>(read_graphs(file));
        }
        else
            source.records = std::make_shared<std::vector<InputRecord>>(read_graphs(in));

        auto records = source.records;
        source.count = records->size();
        source.at = [records](std::size_t i) { return (*records)[i].graph; };
        source.where = [records](std::size_t i) { return "line " + std::to_string((*records)[i].line); };
        return source;
    }

    auto yes_no(bool b) -> const char * { return b ? "yes" : "no"; }

    auto run_solve(const RunConfig & config, const GraphSource & source, const std::string & method, std::ostream & out) -> int
    {
        long long total = 0;
        for_each_input(source, [&](std::size_t, const Graph & g) {
            auto result = method == "brute" ? gamma_brute(g, config.k, config.budget) : gamma_bnb(g, config.k);
            out << encode_graph6(g) << '\t' << g.order() << '\t' << config.k << '\t' << result.value << '\t' << to_string(result.method)
                << '\t' << result.nodes_explored << '\t' << format_labels(result.witness) << '\n';
            total += result.value;
        });
        ordered_json summary;
        summary["graphs"] = source.count;
        summary["k"] = config.k;
        summary["method"] = method;
        summary["value_total"] = total;
        out << summary.dump() << '\n';
        return success;
    }

    auto run_classify(const GraphSource & source, bool verify, std::ostream & out) -> int
    {
        std::size_t mismatches = 0, predicted_count = 0;
        for_each_input(source, [&](std::size_t, const Graph & g) {
            int n = g.order();
            std::string family = "-", matches = "-";
            if (n >= 3 && g.is_connected())
                family = to_token(classify_connected(g).variant);
            if (n >= 3)
                matches = yes_no(classify_graph(g).matches_n_minus_1);
            auto predicted = predict_gamma_ri2(g);
            predicted_count += predicted.has_value();

            out << encode_graph6(g) << '\t' << n << '\t' << family << '\t' << yes_no(is_trivial_components(g)) << '\t' << matches << '\t'
                << (predicted ? std::to_string(*predicted) : std::string("-"));
            if (verify) {
                int value = gamma_bnb(g, 2).value;
                bool agrees = predicted ? *predicted == value : value < n - 1;
                mismatches += ! agrees;
                out << '\t' << value << '\t' << (agrees ? "agree" : "MISMATCH");
            }
            out << '\n';
        });
        ordered_json summary;
        summary["graphs"] = source.count;
        summary["predicted"] = predicted_count;
        if (verify)
            summary["mismatches"] = mismatches;
        out << summary.dump() << '\n';
        return mismatches ? check_failed : success;
    }

    auto run_ng(const RunConfig & config, const GraphSource & source, int min_n, bool extremal, std::ostream & out) -> int
    {
        StreamOptions options;
        options.min_n = min_n;
        options.workers = config.workers;
        NGReport report;
        try {
            report = verify_indexed(source.count, source.at, options, [&](const NGRecord & r) { out << format_record(r) << '\n'; });
        }
        catch (const StreamItemError & e) {
            throw InputError(source.where(e.index()) + ": " + e.what());
        }

        if (extremal)
            for (auto & text : config.dedup ? dedup_isomorphic(report.extremal) : report.extremal)
                out << "extremal\t" << text << '\n';
        out << summary_json(report) << '\n';
        return report.ok() ? success : check_failed;
    }

    auto run_reduce(const RunConfig & config, const GraphSource & source, const std::optional<std::string> & instances_path, std::ostream & out) -> int
    {
        std::ofstream instances;
        if (instances_path) {
            instances.open(*instances_path);
            if (! instances)
                throw InputError("cannot open instance file " + *instances_path);
        }

        std::size_t mismatches = 0;
        for_each_input(source, [&](std::size_t, const Graph & g) {
            auto parts = bipartition(g);
            if (! parts)
                throw InputError("graph is not bipartite");
            auto inst = build_reduction(g, *parts, config.k);
            auto check = verify_reduction(inst, config.budget);

            auto lifted = lift_dominating_set(inst, check.dominating_witness);
            auto back = project_ridf(inst, lifted);
            auto projected = project_ridf(inst, check.target_witness);
            bool round_trip = is_valid(inst.target, lifted) && weight(lifted) == check.expected && back == check.dominating_witness
                && is_dominating(g, projected) && projected.size() == check.gamma_rik_target - inst.leaf_weight();

            bool ok = check.equal && round_trip;
            mismatches += ! ok;
            out << encode_graph6(g) << '\t' << config.k << '\t' << check.gamma_dom << '\t' << check.gamma_rik_target << '\t' << check.expected << '\t'
                << yes_no(check.equal) << '\t' << yes_no(round_trip) << '\n';
            if (instances_path)
                instances << format_instance(inst) << '\n';
        });
        ordered_json summary;
        summary["graphs"] = source.count;
        summary["k"] = config.k;
        summary["mismatches"] = mismatches;
        out << summary.dump() << '\n';
        return mismatches ? check_failed : success;
    }

    auto run_prism(const RunConfig & config, const GraphSource & source, std::ostream & out) -> int
    {
        std::size_t mismatches = 0;
        for_each_input(source, [&](std::size_t, const Graph & g) {
            auto report = prism_check(g, config.k, config.budget);
            bool ok = report.equal && report.lifted_witness_valid;
            mismatches += ! ok;
            out << encode_graph6(g) << '\t' << config.k << '\t' << report.gamma.value << '\t' << report.i_prism.value << '\t' << yes_no(report.equal)
                << '\t' << yes_no(report.lifted_witness_valid) << '\n';
        });
        ordered_json summary;
        summary["graphs"] = source.count;
        summary["k"] = config.k;
        summary["mismatches"] = mismatches;
        out << summary.dump() << '\n';
        return mismatches ? check_failed : success;
    }

    auto run_codec(const GraphSource & source, const std::string & to, std::ostream & out) -> int
    {
        for_each_input(source, [&](std::size_t i, const Graph & g) {
            const InputRecord * record = source.records ? &(*source.records)[i] : nullptr;
            bool edge_list = to.empty() ? record && record->from_edge_list : to == "edgelist";
            if (edge_list)
                out << encode_edge_list(g);
            else {
                if (to.empty() && record && record->had_header)
                    out << graph6_header;
                out << encode_graph6(g) << '\n';
            }
        });
        return success;
    }
}

auto run(std::span<const std::string> args, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    RunConfig config;
    CLI::App app{"Exact k-rainbow independent domination toolkit", "ridom"};
    app.require_subcommand(1);

    std::string method = "bnb", to;
    int min_n = 0;
    bool extremal = false, verify = false, roundtrip = false;
    std::optional<std::string> instances_path;

    auto add_common = [&](CLI::App * sub) {
        sub->add_option("--k", config.k, "number of colours")->check(CLI::Range(1, max_vertices - 1));
        auto * e = sub->add_option("--enumerate", config.enumerate_n, "built-in enumeration of all graphs on N vertices");
        auto * i = sub->add_option("--input", config.input_path, "graph6 or edge-list file");
        auto * r = sub->add_option("--random", config.random_n, "seeded random graphs G(N, 1/2)");
        e->excludes(i)->excludes(r);
        i->excludes(r);
        sub->add_option("--count", config.random_count, "number of random graphs")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", config.seed, "seed for --random");
        sub->add_option("--workers", config.workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--dedup", config.dedup, "one graph per isomorphism class");
        sub->add_option("--budget-labelings", config.budget.max_labelings, "brute-force labeling budget");
        sub->add_option("--budget-subsets", config.budget.max_subsets, "subset budget for i(G) and gamma(G)");
        sub->add_option("--out", config.output_path, "write the report here instead of stdout");
    };

    auto * solve = app.add_subcommand("solve", "gamma_rik and a witness for each graph");
    add_common(solve);
    solve->add_option("--method", method, "bnb or brute")->check(CLI::IsMember({"bnb", "brute"}));

    auto * classify = app.add_subcommand("classify", "structural family and gamma_ri2 shortcut for each graph");
    add_common(classify);
    classify->add_flag("--verify", verify, "compare the shortcut with the solver");

    auto * ng = app.add_subcommand("ng", "Nordhaus-Gaddum bound verification for gamma_ri2");
    add_common(ng);
    ng->add_option("--min-n", min_n, "skip graphs of smaller order");
    ng->add_flag("--extremal", extremal, "list graphs with sum n + 2");

    auto * reduce = app.add_subcommand("reduce", "build and verify the domination reduction for bipartite graphs");
    add_common(reduce);
    reduce->add_option("--instances", instances_path, "write serialized instances here");

    auto * prism = app.add_subcommand("prism", "compare gamma_rik(G) with i(G x K_k)");
    add_common(prism);

    auto * codec = app.add_subcommand("codec", "graph6 / edge-list conversion");
    add_common(codec);
    codec->add_flag("--roundtrip", roundtrip, "re-encode in the input format");
    codec->add_option("--to", to, "graph6 or edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));

    std::vector<const char *> argv{"ridom"};
    for (auto & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return success;
    }
    catch (const CLI::ParseError & e) {
        err << "ridom: " << e.what() << '\n';
        return usage_error;
    }

    if (codec->parsed() && roundtrip && ! to.empty()) {
        err << "ridom: --roundtrip and --to are exclusive\n";
        return usage_error;
    }
    if (reduce->parsed() && config.k < 2) {
        err << "ridom: reduce needs --k >= 2\n";
        return usage_error;
    }
    config.subcommand = app.get_subcommands().front()->get_name();

    std::ostringstream buffer;
    std::ostream & report = config.output_path ? static_cast<std::ostream &>(buffer) : out;
    int code = success;
    try {
        auto source = open_source(config, in);
        if (config.subcommand == "solve")
            code = run_solve(config, source, method, report);
        else if (config.subcommand == "classify")
            code = run_classify(source, verify, report);
        else if (config.subcommand == "ng")
            code = run_ng(config, source, min_n, extremal, report);
        else if (config.subcommand == "reduce")
            code = run_reduce(config, source, instances_path, report);
        else if (config.subcommand == "prism")
            code = run_prism(config, source, report);
        else
            code = run_codec(source, to, report);
    }
    catch (const Error & e) {
        err << "ridom: " << e.what() << '\n';
        return usage_error;
    }

    if (config.output_path) {
        std::ofstream file(*config.output_path);
        if (! file) {
            err << "ridom: cannot open output file " << *config.output_path << '\n';
            return usage_error;
        }
        file << buffer.str();
    }
    return code;
}

}
