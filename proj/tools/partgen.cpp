// partgen: minimal generating partitions from the command line.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage or input
// error, 3 search budget exhausted.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "partgen/demand_split.hpp"
#include "partgen/enumerate.hpp"
#include "partgen/generator.hpp"
#include "partgen/greedy.hpp"
#include "partgen/io.hpp"
#include "partgen/oracle.hpp"
#include "partgen/partition.hpp"

namespace {

using namespace partgen;
using io::json;

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kInconclusive = 3 };

struct Options {
    std::string format = "text";

    Part n = 0;
    Part k = 0;
    bool bound = false;

    Part n_max = 20;
    Part k_max = 10;

    std::vector<Part> parts;
    std::vector<Part> target;
    std::optional<Part> verify_n;
    std::string mode = "greedy";
    std::optional<std::uint64_t> max_nodes;

    std::string input;
    std::string output;
    std::optional<Part> split_k;
    bool tsplib = false;

    std::string expanded;
    std::string assignment;
    std::string recover_output;
};

bool structured(const Options& o)
{
    return o.format == "json";
}

SearchBudget budget_of(const Options& o)
{
    return SearchBudget{o.max_nodes};
}

int run_gen(const Options& o)
{
    const Partition mu = minimal_generator(o.n, o.k);
    if (structured(o)) {
        json out = io::to_json(mu);
        out["n"] = o.n;
        out["k"] = o.k;
        std::cout << io::dump(out);
    } else {
        std::cout << mu.to_string() << '\n';
    }
    return kOk;
}

int run_size(const Options& o)
{
    const auto size = generator_size(o.n, o.k);
    if (structured(o)) {
        json out{{"n", o.n}, {"k", o.k}, {"size", size}};
        if (o.bound)
            out["bound"] = size_upper_bound(o.n, o.k);
        std::cout << io::dump(out);
    } else if (o.bound) {
        std::cout << size << " (bound " << size_upper_bound(o.n, o.k) << ")\n";
    } else {
        std::cout << size << '\n';
    }
    return kOk;
}

int run_table(const Options& o)
{
    const SizeTable table = make_size_table(o.n_max, o.k_max);
    if (structured(o)) {
        json rows = json::array();
        for (Part k = 1; k <= table.k_max; ++k) {
            std::vector<std::int64_t> sizes;
            for (Part n = 1; n <= table.n_max; ++n)
                sizes.push_back(table.at(n, k));
            rows.push_back({{"k", k}, {"sizes", sizes}});
        }
        std::cout << io::dump({{"n_max", table.n_max}, {"k_max", table.k_max}, {"rows", rows}});
        return kOk;
    }

    std::size_t width = std::to_string(table.n_max).size();
    for (const auto v : table.entries)
        width = std::max(width, std::to_string(v).size());
    ++width;
    const std::size_t label = std::max<std::size_t>(std::to_string(table.k_max).size(), 3);
    const auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };

    std::string line = pad("k\\n", label);
    for (Part n = 1; n <= table.n_max; ++n)
        line += pad(std::to_string(n), width);
    std::cout << line << '\n';
    for (Part k = 1; k <= table.k_max; ++k) {
        line = pad(std::to_string(k), label);
        for (Part n = 1; n <= table.n_max; ++n)
            line += pad(std::to_string(table.at(n, k)), width);
        std::cout << line << '\n';
    }
    return kOk;
}

int exit_for(Outcome outcome)
{
    switch (outcome) {
    case Outcome::pass:
        return kOk;
    case Outcome::fail:
        return kFailed;
    case Outcome::inconclusive:
        break;
    }
    return kInconclusive;
}

int run_verify(const Options& o)
{
    const Partition mu(o.parts);
    const Part n = o.verify_n.value_or(mu.weight());
    const VerifyMode mode = o.mode == "exact" ? VerifyMode::exact_only : VerifyMode::greedy_first;
    const VerificationReport report = generates_all(mu, n, o.k, mode, budget_of(o));

    if (structured(o)) {
        std::cout << io::dump(io::to_json(report));
        return exit_for(report.outcome);
    }
    const std::string where = "(n=" + std::to_string(n) + ", k=" + std::to_string(o.k) + ", "
                              + std::string(to_string(mode)) + ")";
    switch (report.outcome) {
    case Outcome::pass:
        std::cout << "pass: " << mu.to_string() << " generates all " << report.partitions_checked
                  << " partitions of " << n << " with at most " << o.k << " parts " << where << '\n';
        break;
    case Outcome::fail:
        std::cout << "fail: " << mu.to_string() << " cannot generate " << report.counterexample->to_string() << ' '
                  << where << '\n';
        break;
    case Outcome::inconclusive:
        std::cout << "inconclusive: search budget exhausted after " << report.nodes_expanded << " nodes " << where
                  << '\n';
        break;
    }
    return exit_for(report.outcome);
}

std::string describe_stop(const Partition& mu, const GreedyTrace& trace)
{
    std::string out = "greedy: stuck at part " + std::to_string(mu[*trace.stuck_part]) + " (position "
                      + std::to_string(*trace.stuck_part + 1) + "), remaining";
    for (const Part r : trace.remaining_at_stop)
        out += " " + std::to_string(r);
    return out;
}

int run_witness(const Options& o)
{
    const Partition mu(o.parts);
    const Partition gamma(o.target);
    const GreedyOutcome greedy = greedy_generate(mu, gamma);

    if (greedy.succeeded()) {
        if (structured(o))
            std::cout << io::dump({{"method", "greedy"}, {"plan", io::to_json(*greedy.plan)}, {"trace", io::to_json(greedy.trace)}});
        else
            std::cout << greedy.plan->to_string() << '\n';
        return kOk;
    }

    const SearchResult exact = search_generation(mu, gamma, budget_of(o));
    const int code = exact.status == SearchStatus::found ? kOk
                     : exact.status == SearchStatus::impossible ? kFailed
                                                                : kInconclusive;
    if (structured(o)) {
        json out{{"method", "exact"}, {"trace", io::to_json(greedy.trace)}, {"nodes", exact.nodes}};
        out["plan"] = exact.plan ? io::to_json(*exact.plan) : json(nullptr);
        out["status"] = exact.status == SearchStatus::found ? "found"
                        : exact.status == SearchStatus::impossible ? "impossible"
                                                                   : "exhausted";
        std::cout << io::dump(out);
        return code;
    }
    std::cout << describe_stop(mu, greedy.trace) << '\n';
    if (exact.plan)
        std::cout << "exact: " << exact.plan->to_string() << '\n';
    else if (exact.status == SearchStatus::impossible)
        std::cout << "exact: no plan\n";
    else
        std::cout << "exact: search budget exhausted after " << exact.nodes << " nodes\n";
    return code;
}

int run_split(const Options& o)
{
    InstanceSpec instance;
    if (o.tsplib) {
        instance = io::read_tsplib_file(o.input, o.split_k);
    } else {
        instance = io::instance_from_json(io::read_json_file(o.input));
        if (o.split_k) {
            instance.fulfiller_count = *o.split_k;
            validate(instance);
        }
    }
    const ExpandedInstance expanded = expand_instance(instance);
    const std::string text = io::dump(io::to_json(expanded));
    if (o.output == "-") {
        std::cout << text;
        return kOk;
    }
    io::write_text_file(o.output, text);

    const auto bound = expansion_bound(instance);
    if (structured(o))
        std::cout << io::dump({{"customers", expanded.customers.size()},
                               {"copies", expanded.copies.size()},
                               {"bound", bound},
                               {"k", expanded.fulfiller_count},
                               {"output", o.output}});
    else
        std::cout << "expanded " << expanded.customers.size() << " customers into " << expanded.copies.size()
                  << " copies (bound " << bound << ", k=" << expanded.fulfiller_count << ")\n";
    return kOk;
}

int run_recover(const Options& o)
{
    const ExpandedInstance expanded = io::expanded_from_json(io::read_json_file(o.expanded));
    const CopyAssignment assignment = io::assignment_from_json(io::read_json_file(o.assignment));
    const SplitAssignment split = recover_solution(expanded, assignment);

    std::string text;
    if (structured(o) || !o.recover_output.empty()) {
        text = io::dump(io::to_json(split, expanded.fulfiller_count));
    } else {
        std::string current;
        for (const auto& [key, amount] : split.entries) {
            if (key.customer != current) {
                if (!current.empty())
                    text += '\n';
                current = key.customer;
                text += current + ":";
            }
            text += " " + key.fulfiller + "=" + std::to_string(amount);
        }
        if (!current.empty())
            text += '\n';
    }
    if (o.recover_output.empty())
        std::cout << text;
    else
        io::write_text_file(o.recover_output, text);
    return kOk;
}

void add_format(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Minimal partitions that generate every partition of n with at most k parts"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Print the minimal generator of n for k parts");
    gen->add_option("n", o.n, "Integer to partition")->required();
    gen->add_option("k", o.k, "Maximum number of parts to generate")->required();
    add_format(gen, o);

    auto* size = app.add_subcommand("size", "Print the size of the minimal generator");
    size->add_option("n", o.n)->required();
    size->add_option("k", o.k)->required();
    size->add_flag("--bound", o.bound, "Also print the logarithmic upper bound");
    add_format(size, o);

    auto* table = app.add_subcommand("table", "Print generator sizes for a range of n and k");
    table->add_option("--n-max", o.n_max, "Largest n (columns)");
    table->add_option("--k-max", o.k_max, "Largest k (rows)");
    add_format(table, o);

    auto* verify = app.add_subcommand("verify", "Check a partition against every partition of n with at most k parts");
    verify->add_option("parts", o.parts, "Candidate generator parts")->required();
    verify->add_option("--n", o.verify_n, "Weight to check (defaults to the sum of parts)");
    verify->add_option("--k", o.k, "Maximum number of parts")->required();
    verify->add_option("--mode", o.mode, "greedy (with exact fallback) or exact")
        ->check(CLI::IsMember({"greedy", "exact"}));
    verify->add_option("--max-nodes", o.max_nodes, "Search node budget");
    add_format(verify, o);

    auto* witness = app.add_subcommand("witness", "Show how one partition generates another");
    witness->add_option("parts", o.parts, "Source partition parts")->required();
    witness->add_option("--target", o.target, "Target partition parts")->required();
    witness->add_option("--max-nodes", o.max_nodes, "Search node budget");
    add_format(witness, o);

    auto* split = app.add_subcommand("split", "Expand customers into demand copies");
    split->add_option("input", o.input, "Instance file (native JSON or TSPLIB)")->required();
    split->add_option("output", o.output, "Expanded instance file, '-' for stdout")->required();
    split->add_option("--k", o.split_k, "Fleet size (overrides the file)");
    split->add_flag("--tsplib", o.tsplib, "Read the input as a TSPLIB CVRP file");
    add_format(split, o);

    auto* recover = app.add_subcommand("recover", "Fold a per-copy solution back onto customers");
    recover->add_option("expanded", o.expanded, "Expanded instance file")->required();
    recover->add_option("assignment", o.assignment, "Copy assignment file")->required();
    recover->add_option("--output", o.recover_output, "Write the split assignment as JSON here");
    add_format(recover, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen)
            return run_gen(o);
        if (*size)
            return run_size(o);
        if (*table)
            return run_table(o);
        if (*verify)
            return run_verify(o);
        if (*witness)
            return run_witness(o);
        if (*split)
            return run_split(o);
        if (*recover)
            return run_recover(o);
    } catch (const SearchExhausted& e) {
        std::cerr << "partgen: " << e.what() << '\n';
        return kInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "partgen: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
