#include "cli.hpp"

#include "tcrs/dcrs.hpp"
#include "tcrs/errors.hpp"
#include "tcrs/gossip.hpp"
#include "tcrs/helly.hpp"
#include "tcrs/io.hpp"
#include "tcrs/oracles.hpp"
#include "tcrs/tree_solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>

namespace tcrs::cli {

namespace {

using nlohmann::json;

constexpr int ok = 0;
constexpr int negative = 1;
constexpr int bad_input = 2;

DiGraph load_request(const std::string& path)
{
    return parse_request(read_file(path)).graph;
}

json temporal_json(const TemporalGraph& g)
{
    return json::parse(emit_temporal(g));
}

json names(const DiGraph& g, const std::vector<Vertex>& vs)
{
    json out = json::array();
    for (auto v : vs)
        out.push_back(g.label(v));
    return out;
}

std::string joined(const DiGraph& g, const std::vector<Vertex>& vs, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        out += (i ? sep : "") + g.label(vs[i]);
    return out;
}

void print_edges(std::ostream& out, const TemporalGraph& g)
{
    const auto& labels = *g.labels();
    for (const auto& e : g.edges())
        out << "  " << labels[e.u] << (g.directed() ? " -> " : " -- ") << labels[e.v] << " @ " << e.t << "\n";
}

struct Options {
    bool json = false;
    std::string file;
    std::string second;
    std::string u;
    std::string v;
    std::size_t n = 0;
    bool components = false;
    bool brute = false;
    bool allow_multi = false;
    std::optional<std::size_t> max_k;
    std::string oracle;
};

int solve_dcrs_cmd(const Options& o, std::ostream& out)
{
    auto r = load_request(o.file);
    auto solution = solve_dcrs(r);
    if (o.json) {
        json comps = json::array();
        for (const auto& c : solution.components)
            comps.push_back({{"vertices", names(r, c.vertices)},
                             {"feedback_set", names(r, c.feedback_set)},
                             {"order", names(r, c.order)}});
        json doc = {{"size", solution.size()}, {"components", comps}, {"solution", temporal_json(solution.graph)}};
        out << doc.dump(2) << "\n";
    } else {
        out << "size " << solution.size() << "\n";
        for (const auto& c : solution.components)
            out << "component {" << joined(r, c.vertices, ",") << "}: feedback set {"
                << joined(r, c.feedback_set, ",") << "}, order " << joined(r, c.order, " ") << "\n";
        print_edges(out, solution.graph);
    }
    return ok;
}

const char* status_name(TreeStatus s)
{
    switch (s) {
    case TreeStatus::solved:
        return "solved";
    case TreeStatus::no_tree_solution:
        return "NO";
    case TreeStatus::input_not_supported:
        return "input_not_supported";
    }
    return "";
}

int solve_tree_cmd(const Options& o, std::ostream& out)
{
    auto r = load_request(o.file);
    TreeStatus status;
    std::optional<TemporalGraph> solution;
    if (o.components) {
        auto result = solve_tree_components(r);
        status = result.status;
        solution = std::move(result.combined);
    } else {
        auto result = solve_tree(r);
        status = result.status;
        if (result.tree)
            solution = result.tree->to_temporal();
    }
    if (o.json) {
        json doc = {{"status", status_name(status)}};
        if (solution)
            doc["solution"] = temporal_json(*solution);
        out << doc.dump(2) << "\n";
    } else if (status == TreeStatus::solved) {
        out << "tree solution with " << solution->size() << " edges\n";
        print_edges(out, *solution);
    } else if (status == TreeStatus::no_tree_solution) {
        out << "NO\n";
    } else {
        out << "input not supported: a connected component is not strongly connected\n";
    }
    return status == TreeStatus::solved ? ok : negative;
}

int verify_cmd(const Options& o, std::ostream& out)
{
    auto r = load_request(o.file);
    auto g = parse_temporal(read_file(o.second)).graph;
    auto report = verify(g, r);
    if (o.json) {
        json missing = json::array();
        for (auto a : report.missing)
            missing.push_back({r.label(a.from), r.label(a.to)});
        out << json{{"satisfied", report.satisfied}, {"missing", missing}}.dump(2) << "\n";
    } else if (report.satisfied) {
        out << "satisfied\n";
    } else {
        out << "not satisfied; missing:";
        for (auto a : report.missing)
            out << " (" << r.label(a.from) << "," << r.label(a.to) << ")";
        out << "\n";
    }
    return report.satisfied ? ok : negative;
}

int authorized_cmd(const Options& o, std::ostream& out)
{
    auto r = load_request(o.file);
    bool yes = is_authorized(r, r.vertex(o.u), r.vertex(o.v));
    if (o.json)
        out << json{{"authorized", yes}}.dump(2) << "\n";
    else
        out << (yes ? "authorized" : "not authorized") << "\n";
    return yes ? ok : negative;
}

int report_bool(const Options& o, std::ostream& out, const char* key, bool value)
{
    if (o.json)
        out << json{{key, value}}.dump(2) << "\n";
    else
        out << key << ": " << (value ? "yes" : "no") << "\n";
    return value ? ok : negative;
}

int unsupported(const Options& o, std::ostream& out, const char* why)
{
    if (o.json)
        out << json{{"status", "input_not_supported"}, {"reason", why}}.dump(2) << "\n";
    else
        out << "input not supported: " << why << "\n";
    return negative;
}

int walk_helly_cmd(const Options& o, std::ostream& out)
{
    auto r = load_request(o.file);
    if (o.brute) {
        if (!is_connected(r))
            return unsupported(o, out, "request graph is not connected");
        return report_bool(o, out, "walk_helly", brute_walk_helly(r));
    }
    if (!is_strongly_connected(r))
        return unsupported(o, out, "request graph is not strongly connected (try --brute)");
    return report_bool(o, out, "walk_helly", solve_tree(r).status == TreeStatus::solved);
}

int oracle_cmd(const Options& o, std::ostream& out)
{
    auto r = load_request(o.file);
    if (o.oracle == "walk-helly")
        return report_bool(o, out, "walk_helly", brute_walk_helly(r));
    if (o.oracle == "tree-rep") {
        auto tree = brute_tree_representation(r);
        if (o.json) {
            json doc = {{"found", tree.has_value()}};
            if (tree) {
                json edges = json::array();
                for (auto e : tree->edges())
                    edges.push_back({r.label(e.u), r.label(e.v)});
                doc["edges"] = edges;
            }
            out << doc.dump(2) << "\n";
        } else if (tree) {
            out << "tree representation:";
            for (auto e : tree->edges())
                out << " " << r.label(e.u) << "-" << r.label(e.v);
            out << "\n";
        } else {
            out << "no tree representation\n";
        }
        return tree ? ok : negative;
    }
    OracleConfig config{o.max_k, o.allow_multi};
    auto result = o.oracle == "min-crs" ? brute_min_crs(r, config) : brute_min_dcrs(r, config);
    if (o.json) {
        json doc = {{"feasible", result.feasible}, {"k", result.k}};
        if (result.witness)
            doc["witness"] = temporal_json(*result.witness);
        out << doc.dump(2) << "\n";
    } else if (result.feasible) {
        out << "k = " << result.k << "\n";
        print_edges(out, *result.witness);
    } else {
        out << "infeasible with at most " << result.k << " temporal edges\n";
    }
    return result.feasible ? ok : negative;
}

int export_dot_cmd(const Options& o, std::ostream& out)
{
    auto text = read_file(o.file);
    if (is_temporal_document(text))
        out << to_dot(parse_temporal(text).graph);
    else
        out << to_dot(parse_request(text).graph);
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Temporal connectivity request satisfaction", "tcrs"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Machine-readable JSON output");

    int (*action)(const Options&, std::ostream&) = nullptr;
    auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
        auto* s = app.add_subcommand(name, help);
        s->add_flag("--json", o.json, "Machine-readable JSON output");
        s->callback([&action, fn] { action = fn; });
        return s;
    };

    sub("solve-dcrs", "Optimal temporal digraph for a request graph", solve_dcrs_cmd)
        ->add_option("file", o.file, "Request graph JSON")
        ->required();
    auto* tree = sub("solve-tree", "Tree solution for a strongly connected request graph", solve_tree_cmd);
    tree->add_option("file", o.file, "Request graph JSON")->required();
    tree->add_flag("--components", o.components, "Solve every connected component separately");
    sub("gossip", "Print the 2n-4 temporally connected graph", nullptr)
        ->add_option("n", o.n, "Number of vertices")
        ->required()
        ->check(CLI::PositiveNumber);
    auto* ver = sub("verify", "Check a temporal graph against a request graph", verify_cmd);
    ver->add_option("request", o.file, "Request graph JSON")->required();
    ver->add_option("solution", o.second, "Temporal graph JSON")->required();
    auto* auth = sub("authorized", "Is the arc (u,v) authorized", authorized_cmd);
    auth->add_option("file", o.file, "Request graph JSON")->required();
    auth->add_option("u", o.u, "Tail label")->required();
    auth->add_option("v", o.v, "Head label")->required();
    auto* helly = sub("walk-helly", "Walk-Helly test", walk_helly_cmd);
    helly->add_option("file", o.file, "Request graph JSON")->required();
    helly->add_flag("--brute", o.brute, "Use the exhaustive oracle");
    auto* oracle = sub("oracle", "Exhaustive oracles for small instances", oracle_cmd);
    oracle->add_option("kind", o.oracle, "min-crs | min-dcrs | walk-helly | tree-rep")
        ->required()
        ->check(CLI::IsMember({"min-crs", "min-dcrs", "walk-helly", "tree-rep"}));
    oracle->add_option("file", o.file, "Request graph JSON")->required();
    oracle->add_flag("--allow-multi", o.allow_multi, "Allow an endpoint pair at two times");
    oracle->add_option("--max-k", o.max_k, "Largest solution size to search");
    sub("export-dot", "Graphviz rendering of a request or temporal graph", export_dot_cmd)
        ->add_option("file", o.file, "Request or temporal graph JSON")
        ->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return bad_input;
    }

    try {
        if (app.got_subcommand("gossip")) {
            out << emit_temporal(gossip_graph(o.n));
            return ok;
        }
        return action(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }
}

} // namespace tcrs::cli
