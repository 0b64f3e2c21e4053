#include "mmdim/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mmdim/analysis.hpp"
#include "mmdim/bounds.hpp"
#include "mmdim/constructors.hpp"
#include "mmdim/io.hpp"
#include "mmdim/search.hpp"
#include "mmdim/transforms.hpp"

namespace mmdim::cli {

namespace {

using nlohmann::json;

/// Raised for a bad flag value discovered after CLI11 parsing.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct NoInput : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Options
{
    int a = 0, b = 0, c = 0;
    std::string format = "text";
    bool explain = false;
    bool with_witness = false;
    std::string input = "-";
    int peg = 0;
    int source = 0; // 1-based; 0 = last question
    int color_i = 0, color_j = 0;
    bool force = false;
    int max_sum = 21;
    int size = -1;
    int max_size = -1;
    double time_budget = 60.0;
    std::uint64_t node_limit = 100'000'000;
    int threads = 1;
    std::string emit_witness;
};

Params make_params(const Options& o)
{
    try {
        return Params(o.a, o.b, o.c);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void note_reordering(const Params& p, std::ostream& err)
{
    const auto canon = canonicalize(p);
    if (canon.reordered())
        err << "note: pegs sorted to " << canon.params << " internally; output uses the given peg order\n";
}

Strategy read_strategy(const Options& o, std::istream& in)
{
    std::string text;
    if (o.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream f(o.input);
        if (!f)
            throw NoInput("cannot open '" + o.input + "'");
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    return parse_strategy(text);
}

/// Block number (1-based), block shape and question type per question.
json explain_json(const Strategy& s)
{
    const auto cls = classify_questions(s);
    const auto graph = build_strategy_graph(s);
    std::vector<std::pair<int, BlockShape>> where(s.size());
    for (std::size_t b = 0; b < graph.blocks.size(); ++b) {
        for (auto v : graph.blocks[b].vertices)
            where[v] = {int(b) + 1, graph.blocks[b].shape};
    }
    json notes = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        notes.push_back({{"block", where[i].first},
                         {"shape", to_string(where[i].second)},
                         {"type", std::string(1, type_letter(cls[i].type))}});
    }
    return notes;
}

void write_strategy(const Strategy& s, const Options& o, std::ostream& out, json extra = json::object())
{
    if (o.format == "json") {
        json j = to_json(s);
        if (o.explain)
            j["explain"] = explain_json(s);
        for (auto& [k, v] : extra.items())
            j[k] = v;
        out << j.dump(2) << '\n';
        return;
    }
    if (o.format == "csv") {
        out << "q1,q2,q3" << (o.explain ? ",block,shape,type" : "") << '\n';
        const json notes = o.explain ? explain_json(s) : json();
        for (std::size_t i = 0; i < s.size(); ++i) {
            out << s[i][0] << ',' << s[i][1] << ',' << s[i][2];
            if (o.explain)
                out << ',' << notes[i]["block"].get<int>() << ',' << notes[i]["shape"].get<std::string>() << ','
                    << notes[i]["type"].get<std::string>();
            out << '\n';
        }
        return;
    }
    if (!o.explain) {
        write_strategy_text(out, s);
        return;
    }
    const json notes = explain_json(s);
    out << s.params().a() << ' ' << s.params().b() << ' ' << s.params().c() << '\n';
    for (std::size_t i = 0; i < s.size(); ++i) {
        out << s[i][0] << ' ' << s[i][1] << ' ' << s[i][2] << "  # q" << i + 1 << " block "
            << notes[i]["block"].get<int>() << " (" << notes[i]["shape"].get<std::string>() << ") type "
            << notes[i]["type"].get<std::string>() << '\n';
    }
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err)
{
    const Params p = make_params(o);
    note_reordering(p, err);
    const Strategy s = construct(p);
    json extra{{"case", to_string(classify_case(canonicalize(p).params))}};
    if (o.format == "text" && o.explain)
        out << "# case " << extra["case"].get<std::string>() << '\n';
    write_strategy(s, o, out, extra);
    return 0;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out)
{
    const Strategy s = read_strategy(o, in);
    const auto r = verify_feasible(s);
    if (o.format == "json") {
        json j{{"params", to_json(s.params())}, {"size", s.size()}, {"feasible", r.feasible}};
        j["witness"] = r.witness ? json::array({to_json(r.witness->first), to_json(r.witness->second)}) : json();
        out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "a,b,c,size,feasible,witness1,witness2\n"
            << s.params().a() << ',' << s.params().b() << ',' << s.params().c() << ',' << s.size() << ','
            << (r.feasible ? "true" : "false") << ',';
        if (r.witness)
            out << '"' << r.witness->first << "\",\"" << r.witness->second << '"';
        else
            out << ',';
        out << '\n';
    } else if (r.feasible) {
        out << "feasible: " << s.size() << " questions for " << s.params() << '\n';
    } else {
        out << "infeasible, witness " << to_string(r.witness->first) << '/' << to_string(r.witness->second)
            << '\n';
    }
    return 0;
}

int cmd_analyze(const Options& o, std::istream& in, std::ostream& out)
{
    const Strategy s = read_strategy(o, in);
    if (o.format == "json")
        out << analysis_json(s).dump(2) << '\n';
    else
        out << analysis_text(s);
    return 0;
}

json bound_json(const Bound& b)
{
    return {{"value", b.value}, {"provenance", to_string(b.provenance)}};
}

json dimension_json(const DimensionResult& r)
{
    json j{{"params", to_json(r.params)},
           {"case", to_string(r.tag)},
           {"lower", bound_json(r.lower)},
           {"upper", bound_json(r.upper)},
           {"open", !r.exact.has_value()}};
    j["exact"] = r.exact ? json(r.exact->value) : json();
    j["provenance"] = r.exact ? json(to_string(r.exact->provenance)) : json("open");
    if (r.witness)
        j["witness"] = to_json(*r.witness);
    return j;
}

int cmd_dimension(const Options& o, std::ostream& out, std::ostream& err)
{
    const Params p = make_params(o);
    note_reordering(p, err);
    const auto r = dimension(p, o.with_witness);
    if (o.format == "json") {
        out << dimension_json(r).dump(2) << '\n';
    } else if (o.format == "csv") {
        out << dimension_table_csv({r});
    } else {
        out << "params " << r.params << "\ncase " << to_string(r.tag) << "\nlower " << r.lower.value << " ("
            << to_string(r.lower.provenance) << ")\nupper " << r.upper.value << " ("
            << to_string(r.upper.provenance) << ")\n";
        if (r.exact)
            out << "exact " << r.exact->value << " (" << to_string(r.exact->provenance) << ")\n";
        else
            out << "exact open: " << r.lower.value << " <= f <= " << r.upper.value << '\n';
        if (r.witness) {
            out << "witness:\n";
            write_strategy_text(out, *r.witness);
        }
    }
    return 0;
}

int cmd_table(const Options& o, std::ostream& out)
{
    if (o.max_sum < 3)
        throw UsageError("--max-sum must be at least 3");
    const auto rows = dimension_table(o.max_sum);
    if (o.format == "json") {
        json j = json::array();
        for (const auto& r : rows)
            j.push_back(dimension_json(r));
        out << j.dump(2) << '\n';
    } else {
        out << dimension_table_csv(rows);
    }
    return 0;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err)
{
    const Params p = make_params(o);
    note_reordering(p, err);
    if (o.time_budget <= 0 || o.threads < 1)
        throw UsageError("--time-budget and --threads must be positive");
    SearchBudget budget;
    budget.time_limit = std::chrono::milliseconds(static_cast<long long>(o.time_budget * 1000));
    budget.node_limit = o.node_limit;
    budget.threads = o.threads;

    SearchOutcome r;
    std::string mode;
    if (o.size >= 0) {
        mode = "exists";
        r = exists_feasible(p, o.size, budget);
    } else if (o.max_size >= 0 && o.max_size < upper_bound(p).value) {
        // Deepen only up to the requested size.
        mode = "minimum";
        const auto t0 = std::chrono::steady_clock::now();
        std::uint64_t nodes = 0;
        r.status = SearchStatus::ExhaustedNone;
        for (int k = lower_bound(p).value; k <= o.max_size; ++k) {
            SearchBudget left = budget;
            left.time_limit -= std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0);
            r = exists_feasible(p, k, left);
            nodes += r.nodes_explored;
            r.nodes_explored = nodes;
            if (r.status != SearchStatus::ExhaustedNone)
                break;
            r.last_exhausted = k;
        }
    } else {
        mode = "minimum";
        r = min_feasible_size(p, budget);
    }
    err << "# elapsed " << r.elapsed.count() << " ms\n";

    if (r.witness && !o.emit_witness.empty()) {
        std::ofstream f(o.emit_witness);
        if (!f)
            throw NoInput("cannot write '" + o.emit_witness + "'");
        write_strategy_text(f, *r.witness);
    }

    if (o.format == "json") {
        json j{{"params", to_json(p)},
               {"mode", mode},
               {"status", to_string(r.status)},
               {"nodes", r.nodes_explored}};
        j["size"] = r.status == SearchStatus::FoundWitness ? json(r.size) : json();
        j["last_exhausted"] = r.last_exhausted >= 0 ? json(r.last_exhausted) : json();
        if (r.witness)
            j["witness"] = to_json(*r.witness);
        out << j.dump(2) << '\n';
    } else {
        out << "params " << p << "\nstatus " << to_string(r.status) << '\n';
        if (r.status == SearchStatus::FoundWitness)
            out << (mode == "exists" ? "size " : "minimum ") << r.size << '\n';
        if (r.last_exhausted >= 0)
            out << "no strategy with " << r.last_exhausted << " questions\n";
        out << "nodes " << r.nodes_explored << '\n';
        if (r.witness && o.explain) {
            out << "witness:\n";
            write_strategy_text(out, *r.witness);
        }
    }
    return r.status == SearchStatus::BudgetExceeded ? kExitBudget : 0;
}

int cmd_augment(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
{
    const Strategy s = read_strategy(o, in);
    if (s.empty())
        throw UsageError("cannot augment an empty strategy");
    const int source = o.source == 0 ? int(s.size()) : o.source;
    if (source < 1 || source > int(s.size()))
        throw UsageError("--source must be in [1," + std::to_string(s.size()) + "]");
    const Strategy t = augment_peg(s, o.peg - 1, std::size_t(source - 1));
    err << "note: added color " << t.params().colors(o.peg - 1) << " on peg " << o.peg << " by copying question "
        << source << '\n';
    write_strategy(t, o, out);
    return 0;
}

int cmd_project(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
{
    const Strategy s = read_strategy(o, in);
    const Peg peg = o.peg - 1;
    const int n = s.params().colors(peg);
    if (o.color_i == o.color_j || o.color_i < 1 || o.color_i > n || o.color_j < 1 || o.color_j > n)
        throw UsageError("-i and -j must be distinct colors in [1," + std::to_string(n) + "]");
    const bool ok = check_projectable(s, peg, o.color_i, o.color_j);
    if (!ok && !o.force) {
        err << "error: Q" << o.peg << '(' << o.color_i << ',' << o.color_j
            << ") does not meet the projection criterion; use --force to project anyway\n";
        return 1;
    }
    const auto r = project_detailed(s, peg, o.color_i, o.color_j);
    if (!ok)
        err << "warning: projection criterion not met; feasibility is not guaranteed\n";
    if (r.merged_duplicates)
        err << "note: " << r.merged_duplicates << " question(s) merged\n";
    write_strategy(r.strategy, o, out, json{{"projectable", ok}});
    return 0;
}

void add_params(CLI::App* cmd, Options& o)
{
    cmd->add_option("-a", o.a, "colors on peg 1")->required();
    cmd->add_option("-b", o.b, "colors on peg 2")->required();
    cmd->add_option("-c", o.c, "colors on peg 3")->required();
}

void add_format(CLI::App* cmd, Options& o, std::vector<std::string> allowed)
{
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(std::move(allowed)));
}

void add_input(CLI::App* cmd, Options& o)
{
    cmd->add_option("file", o.input, "strategy file in text or JSON format ('-' = stdin)");
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Metric dimension of K_a x K_b x K_c via static black-peg Mastermind strategies", "mmdim"};
    app.require_subcommand(1);

    auto* construct_cmd = app.add_subcommand("construct", "build a feasible strategy of upper-bound size");
    add_params(construct_cmd, o);
    add_format(construct_cmd, o, {"text", "json", "csv"});
    construct_cmd->add_flag("--explain", o.explain, "annotate each question with its block and type");

    auto* verify_cmd = app.add_subcommand("verify", "brute-force feasibility check");
    add_input(verify_cmd, o);
    add_format(verify_cmd, o, {"text", "json", "csv"});

    auto* analyze_cmd = app.add_subcommand("analyze", "question types, blocks, missing colors, patterns");
    add_input(analyze_cmd, o);
    add_format(analyze_cmd, o, {"text", "json"});

    auto* dimension_cmd = app.add_subcommand("dimension", "bounds and exact value of f(a,b,c)");
    add_params(dimension_cmd, o);
    add_format(dimension_cmd, o, {"text", "json", "csv"});
    dimension_cmd->add_flag("--witness", o.with_witness, "include a strategy of upper-bound size");

    auto* search_cmd = app.add_subcommand("search", "exhaustive search for a minimum feasible strategy");
    add_params(search_cmd, o);
    add_format(search_cmd, o, {"text", "json"});
    search_cmd->add_option("--size", o.size, "only decide whether a strategy of exactly this size exists")
        ->check(CLI::NonNegativeNumber);
    search_cmd->add_option("--max-size", o.max_size, "largest size to try")->check(CLI::NonNegativeNumber);
    search_cmd->add_option("--time-budget", o.time_budget, "seconds (default 60)");
    search_cmd->add_option("--node-limit", o.node_limit, "search nodes (default 1e8)");
    search_cmd->add_option("--threads", o.threads, "worker threads (default 1)");
    search_cmd->add_option("--emit-witness", o.emit_witness, "write the witness strategy to FILE");
    search_cmd->add_flag("--explain", o.explain, "also print the witness");

    auto* table_cmd = app.add_subcommand("table", "bounds for every sorted triple with a+b+c <= N");
    table_cmd->add_option("--max-sum", o.max_sum, "largest a+b+c (default 21)");
    add_format(table_cmd, o, {"text", "csv", "json"});

    auto* augment_cmd = app.add_subcommand("augment", "add one color to a peg, keeping feasibility");
    add_input(augment_cmd, o);
    augment_cmd->add_option("--peg", o.peg, "peg 1..3")->required()->check(CLI::Range(1, 3));
    augment_cmd->add_option("--source", o.source, "1-based question to copy (default: last)");
    add_format(augment_cmd, o, {"text", "json", "csv"});

    auto* project_cmd = app.add_subcommand("project", "merge color j into color i on a peg");
    add_input(project_cmd, o);
    project_cmd->add_option("--peg", o.peg, "peg 1..3")->required()->check(CLI::Range(1, 3));
    project_cmd->add_option("-i", o.color_i, "color kept")->required();
    project_cmd->add_option("-j", o.color_j, "color merged away")->required();
    project_cmd->add_flag("--force", o.force, "project even when the criterion fails");
    add_format(project_cmd, o, {"text", "json", "csv"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nrun 'mmdim --help' for usage\n";
        return kExitUsage;
    }

    try {
        if (*construct_cmd)
            return cmd_construct(o, out, err);
        if (*verify_cmd)
            return cmd_verify(o, in, out);
        if (*analyze_cmd)
            return cmd_analyze(o, in, out);
        if (*dimension_cmd)
            return cmd_dimension(o, out, err);
        if (*search_cmd)
            return cmd_search(o, out, err);
        if (*table_cmd)
            return cmd_table(o, out);
        if (*augment_cmd)
            return cmd_augment(o, in, out, err);
        if (*project_cmd)
            return cmd_project(o, in, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataErr;
    } catch (const NoInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitNoInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitSoftware;
    }
    return kExitUsage;
}

} // namespace mmdim::cli
