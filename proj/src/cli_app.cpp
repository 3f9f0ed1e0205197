#include "elimflip/cli_app.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "elimflip/constructions.hpp"
#include "elimflip/graph.hpp"
#include "elimflip/json_io.hpp"
#include "elimflip/projection.hpp"
#include "elimflip/rotation.hpp"
#include "elimflip/rotation_graph.hpp"
#include "elimflip/search_tree.hpp"

namespace elimflip {

namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    return nlohmann::json::parse(in);
}

// Accepts either a bare sequence array or an object holding one under
// "sequence" (the shape `transform` emits).
RotationSequence load_sequence(const std::string& path) {
    auto j = load_json(path);
    if (j.is_object() && j.contains("sequence"))
        return sequence_from_json(j["sequence"]);
    return sequence_from_json(j);
}

void emit(std::ostream& out, const nlohmann::json& j) {
    out << j.dump() << "\n";
}

int ceil_log2(int x) {
    int c = 0;
    while ((1 << c) < x)
        ++c;
    return c;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_tree(std::mt19937& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng() % v), v);
    return Graph(n, edges);
}

SearchTree random_search_tree(const Graph& g, std::mt19937& rng) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return from_elimination_order(g, order);
}

RotationSequence random_applicable(const Graph& g, SearchTree t, int len,
                                   std::mt19937& rng) {
    RotationSequence seq;
    for (int i = 0; i < len; ++i) {
        auto pairs = rotatable_pairs(g, t);
        if (pairs.empty())
            break;
        Rotation r = pairs[rng() % pairs.size()];
        t = rotate(g, t, r.parent, r.child);
        seq.push_back(r);
    }
    return seq;
}

std::vector<int> random_connected_subset(const Graph& g, std::mt19937& rng) {
    const int n = g.vertex_count();
    const int target = 1 + static_cast<int>(rng() % n);
    std::vector<char> in(n, 0);
    std::vector<int> chosen{static_cast<int>(rng() % n)};
    in[chosen[0]] = 1;
    while (static_cast<int>(chosen.size()) < target) {
        std::vector<int> frontier;
        for (int v : chosen)
            for (int w : g.neighbors(v))
                if (!in[w])
                    frontier.push_back(w);
        if (frontier.empty())
            break;
        int w = frontier[rng() % frontier.size()];
        in[w] = 1;
        chosen.push_back(w);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

struct CheckReport {
    nlohmann::json checks = nlohmann::json::array();
    int failed = 0;

    void add(const std::string& name, bool ok, const std::string& detail) {
        checks.push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
        if (!ok)
            ++failed;
    }
};

int run_checks(std::ostream& out, std::ostream& err) {
    CheckReport rep;
    auto run = [&](const std::string& name, auto&& fn) {
        try {
            auto [ok, detail] = fn();
            rep.add(name, ok, detail);
        } catch (const std::exception& e) {
            rep.add(name, false, std::string("exception: ") + e.what());
        }
        const auto& last = rep.checks.back();
        err << (last["ok"].get<bool>() ? "ok   " : "FAIL ") << name << ": "
            << last["detail"].get<std::string>() << "\n";
    };

    run("path-counts-catalan", [] {
        const std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
        int good = 0;
        for (int n = 1; n <= 6; ++n)
            good += count_search_trees(path_graph(n)) == catalan[n];
        return std::pair(good == 6, std::to_string(good) + "/6 path counts match");
    });

    run("complete-counts-factorial", [] {
        std::uint64_t want = 2;
        int good = 0;
        for (int n = 2; n <= 5; ++n, want *= n)
            good += count_search_trees(complete_graph(n)) == want;
        return std::pair(good == 4, std::to_string(good) + "/4 complete counts match");
    });

    run("pentagon", [] {
        auto rg = build_rotation_graph(path_graph(3));
        bool ok = rg.nodes.size() == 5 && rg.edges.size() == 5 && diameter(rg) == 2;
        return std::pair(ok, std::to_string(rg.nodes.size()) + " nodes, " +
                                 std::to_string(rg.edges.size()) + " edges");
    });

    run("rotation-graph-regular-connected", [] {
        int graphs = 0;
        for (int n = 1; n <= 5; ++n)
            for (const Graph& g : enumerate_labeled_trees(n)) {
                auto rg = build_rotation_graph(g);
                if (2 * rg.edges.size() != rg.nodes.size() * (n - 1))
                    return std::pair(false, "regularity violated at n=" + std::to_string(n));
                int d = diameter(rg);  // throws if disconnected
                if (n >= 2 && d < n - 1)
                    return std::pair(false, "diameter below edge count at n=" + std::to_string(n));
                ++graphs;
            }
        return std::pair(true, std::to_string(graphs) + " tree rotation graphs checked");
    });

    run("flip-changes-two-tubes", [] {
        long pairs = 0;
        std::vector<Graph> hosts;
        for (int n = 1; n <= 5; ++n)
            for (const Graph& g : enumerate_labeled_trees(n))
                hosts.push_back(g);
        hosts.push_back(complete_graph(3));
        for (const Graph& g : hosts)
            for (const SearchTree& t : enumerate_search_trees(g))
                for (const Rotation& r : rotatable_pairs(g, t)) {
                    if (tubing_difference(g, t, rotate(g, t, r.parent, r.child)) != 2)
                        return std::pair(false, std::string("rotation moved more than two tubes"));
                    ++pairs;
                }
        return std::pair(true, std::to_string(pairs) + " rotations checked");
    });

    run("projection-commutes", [] {
        std::mt19937 rng(20260822);
        int skipped = 0;
        for (int i = 0; i < 100; ++i) {
            int n = 2 + static_cast<int>(rng() % 9);
            Graph g = random_tree(rng, n);
            SearchTree t = random_search_tree(g, rng);
            RotationSequence pi = random_applicable(g, t, 1 + rng() % 12, rng);
            std::vector<int> s = random_connected_subset(g, rng);
            Graph sub = induced_subgraph(g, s);
            ReplayStats stats;
            SearchTree lhs = apply_projected_sequence(
                sub, project_tree(g, t, s),
                relabel_sequence(project_sequence(pi, s), s), &stats);
            SearchTree rhs = project_tree(g, apply_sequence(g, t, pi), s);
            skipped += stats.skipped;
            if (!(lhs == rhs))
                return std::pair(false, "commutation failed at instance " + std::to_string(i));
        }
        return std::pair(true, "100 instances, " + std::to_string(skipped) + " skipped steps");
    });

    run("shelling-order-invariance", [] {
        std::mt19937 rng(4251);
        auto prune_two = [](const Graph& g, const SearchTree& t, int first, int second) {
            std::vector<int> keep;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (v != first)
                    keep.push_back(v);
            Graph g1 = induced_subgraph(g, keep);
            SearchTree t1 = prune_leaf(g, t, first);
            return prune_leaf(g1, t1, second - (second > first ? 1 : 0));
        };
        for (int i = 0; i < 100; ++i) {
            int n = 3 + static_cast<int>(rng() % 8);
            Graph g = random_tree(rng, n);
            SearchTree t = random_search_tree(g, rng);
            std::vector<int> leaves;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 1)
                    leaves.push_back(v);
            int x = leaves[rng() % leaves.size()];
            int y = x;
            while (y == x)
                y = leaves[rng() % leaves.size()];
            if (!(prune_two(g, t, x, y) == prune_two(g, t, y, x)))
                return std::pair(false, "prune order mattered at instance " + std::to_string(i));
        }
        return std::pair(true, std::string("100 two-leaf commutations hold"));
    });

    run("bit-reversal", [] {
        for (int k = 1; k <= 10; ++k) {
            auto sigma = bit_reversal(k);
            for (int i = 0; i < static_cast<int>(sigma.size()); ++i)
                if (sigma[sigma[i]] != i)
                    return std::pair(false, "not an involution at k=" + std::to_string(k));
        }
        bool lit = bit_reversal(3) == std::vector<int>{0, 2, 1, 3} &&
                   bit_reversal(4) == std::vector<int>{0, 4, 2, 6, 1, 5, 3, 7};
        return std::pair(lit, std::string(lit ? "involution for k<=10, literals match"
                                  : "literal values mismatch"));
    });

    run("alternation-endpoints", [] {
        for (int k = 1; k <= 8; ++k) {
            GkSpec spec = build_gk(k);
            if (alternation_number(spec, build_tk(spec)) != 0)
                return std::pair(false, "T_k alternation nonzero at k=" + std::to_string(k));
            if (alternation_number(spec, build_tk_prime(spec)) != (1 << (k - 1)) - 1)
                return std::pair(false, "T'_k alternation wrong at k=" + std::to_string(k));
        }
        return std::pair(true, std::string("0 and l-1 for k<=8"));
    });

    run("transform-endpoint", [] {
        std::mt19937 rng(77);
        long total = 0;
        for (int n : {15, 31})
            for (int i = 0; i < 10; ++i) {
                Graph g = random_tree(rng, n);
                SearchTree t1 = random_search_tree(g, rng);
                SearchTree t2 = random_search_tree(g, rng);
                RotationSequence seq = transform(g, t1, t2);
                if (static_cast<int>(seq.size()) > 2 * n * ceil_log2(n + 1))
                    return std::pair(false, "transform too long at n=" + std::to_string(n));
                if (!(apply_sequence(g, t1, seq) == t2))
                    return std::pair(false, "transform missed target at n=" + std::to_string(n));
                SearchTree cdt = centroid_decomposition_tree(g);
                if (!validate(g, cdt) || height(cdt) > ceil_log2(n + 1))
                    return std::pair(false, "centroid tree too tall at n=" + std::to_string(n));
                total += static_cast<long>(seq.size());
            }
        return std::pair(true, "20 pairs hit their target, total length " +
                                   std::to_string(total));
    });

    nlohmann::json summary = {
        {"passed", static_cast<int>(rep.checks.size()) - rep.failed},
        {"failed", rep.failed},
        {"checks", rep.checks}};
    emit(out, summary);
    return rep.failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"search trees on graphs: rotations, projections, exact distances"};
    app.require_subcommand(1);
    int rc = 0;

    // construct
    auto* construct = app.add_subcommand(
        "construct", "emit sigma_k, G_k, T_k or T'_k as JSON");
    int k = 1;
    std::string what;
    construct->add_option("--k", k, "parameter k >= 1")->required();
    construct->add_option("--what", what, "one of sigma, gk, tk, tk-prime")
        ->required()
        ->check(CLI::IsMember({"sigma", "gk", "tk", "tk-prime"}));
    construct->callback([&] {
        if (what == "sigma") {
            emit(out, nlohmann::json(bit_reversal(k)));
            return;
        }
        GkSpec spec = build_gk(k);
        if (what == "gk")
            emit(out, graph_to_json(spec.graph));
        else if (what == "tk")
            emit(out, tree_to_json(build_tk(spec)));
        else
            emit(out, tree_to_json(build_tk_prime(spec)));
    });

    // validate
    auto* vcmd = app.add_subcommand("validate", "check a search tree against its graph");
    std::string v_graph, v_tree;
    vcmd->add_option("--graph", v_graph, "graph JSON file")->required();
    vcmd->add_option("--tree", v_tree, "tree JSON file")->required();
    vcmd->callback([&] {
        Graph g = graph_from_json(load_json(v_graph));
        SearchTree t = tree_from_json(load_json(v_tree));
        bool ok = validate(g, t);
        emit(out, nlohmann::json{{"valid", ok}});
        if (!ok)
            rc = 1;
    });

    // rotate
    auto* rcmd = app.add_subcommand("rotate", "apply one rotation, or list the legal ones");
    std::string r_graph, r_tree;
    int r_parent = -1, r_child = -1;
    bool r_list = false;
    rcmd->add_option("--graph", r_graph, "graph JSON file")->required();
    rcmd->add_option("--tree", r_tree, "tree JSON file")->required();
    auto* opt_parent = rcmd->add_option("--parent", r_parent, "parent endpoint");
    auto* opt_child = rcmd->add_option("--child", r_child, "child endpoint");
    rcmd->add_flag("--list", r_list, "emit all rotatable pairs instead");
    rcmd->callback([&] {
        Graph g = graph_from_json(load_json(r_graph));
        SearchTree t = tree_from_json(load_json(r_tree));
        if (r_list) {
            emit(out, sequence_to_json(rotatable_pairs(g, t)));
            return;
        }
        if (opt_parent->count() == 0 || opt_child->count() == 0)
            throw CLI::RequiredError("rotate needs --parent and --child (or --list)");
        emit(out, tree_to_json(rotate(g, t, r_parent, r_child)));
    });

    // apply
    auto* acmd = app.add_subcommand("apply", "apply a rotation sequence to a tree");
    std::string a_graph, a_tree, a_seq;
    acmd->add_option("--graph", a_graph, "graph JSON file")->required();
    acmd->add_option("--tree", a_tree, "tree JSON file")->required();
    acmd->add_option("--sequence", a_seq, "rotation sequence JSON file")->required();
    acmd->callback([&] {
        Graph g = graph_from_json(load_json(a_graph));
        SearchTree t = tree_from_json(load_json(a_tree));
        emit(out, tree_to_json(apply_sequence(g, t, load_sequence(a_seq))));
    });

    // project
    auto* pcmd = app.add_subcommand(
        "project", "project a tree (contracting pruned parts) or filter a sequence");
    std::string p_graph, p_tree, p_seq, p_subset;
    auto* opt_ptree = pcmd->add_option("--tree", p_tree, "tree JSON file");
    auto* opt_pseq = pcmd->add_option("--sequence", p_seq, "sequence JSON file");
    pcmd->add_option("--graph", p_graph, "graph JSON file (tree projection only)");
    pcmd->add_option("--subset", p_subset, "vertex set JSON file")->required();
    pcmd->callback([&] {
        if ((opt_ptree->count() == 0) == (opt_pseq->count() == 0))
            throw CLI::RequiredError("project needs exactly one of --tree, --sequence");
        std::vector<int> s = vertex_set_from_json(load_json(p_subset));
        if (opt_pseq->count() > 0) {
            emit(out, sequence_to_json(project_sequence(load_sequence(p_seq), s)));
            return;
        }
        if (p_graph.empty())
            throw CLI::RequiredError("project --tree needs --graph");
        Graph g = graph_from_json(load_json(p_graph));
        SearchTree t = tree_from_json(load_json(p_tree));
        emit(out, tree_to_json(project_tree(g, t, s)));
    });

    // enumerate
    auto* ecmd = app.add_subcommand("enumerate", "list all search trees of a graph");
    std::string e_graph, e_format = "json";
    std::uint64_t e_cap = 10'000'000;
    bool e_full = false;
    ecmd->add_option("--graph", e_graph, "graph JSON file")->required();
    ecmd->add_option("--max-nodes", e_cap, "enumeration cap")->envname("EF_MAX_NODES");
    ecmd->add_option("--format", e_format, "json or dot (dot draws the rotation graph)")
        ->check(CLI::IsMember({"json", "dot"}));
    ecmd->add_flag("--full-labels", e_full, "label dot nodes with whole trees");
    ecmd->callback([&] {
        Graph g = graph_from_json(load_json(e_graph));
        if (e_format == "dot") {
            out << to_dot(build_rotation_graph(g, e_cap), e_full);
            return;
        }
        auto trees = enumerate_search_trees(g, e_cap);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : trees)
            arr.push_back(tree_to_json(t));
        emit(out, nlohmann::json{{"count", trees.size()}, {"trees", arr}});
    });

    // distance
    auto* dcmd = app.add_subcommand("distance", "exact rotation distance between two trees");
    std::string d_graph, d_from, d_to;
    SearchCaps caps;
    dcmd->add_option("--graph", d_graph, "graph JSON file")->required();
    dcmd->add_option("--from", d_from, "tree JSON file")->required();
    dcmd->add_option("--to", d_to, "tree JSON file")->required();
    dcmd->add_option("--max-nodes", caps.max_nodes, "visited-node cap")
        ->envname("EF_MAX_NODES");
    dcmd->add_option("--max-seconds", caps.max_seconds, "time cap, 0 = none");
    dcmd->callback([&] {
        Graph g = graph_from_json(load_json(d_graph));
        SearchTree t1 = tree_from_json(load_json(d_from));
        SearchTree t2 = tree_from_json(load_json(d_to));
        DistanceAttempt a = distance_attempt(g, t1, t2, caps);
        err << "visited " << a.visited << " trees in " << a.seconds << "s\n";
        nlohmann::json j = {{"found", a.found},
                            {"distance", a.found ? nlohmann::json(a.distance)
                                                 : nlohmann::json(nullptr)},
                            {"visited", a.visited}};
        if (!a.found)
            j["limit"] = a.limit;
        emit(out, j);
        if (!a.found)
            rc = 1;
    });

    // diameter
    auto* diacmd = app.add_subcommand("diameter", "largest rotation distance on a graph");
    std::string dia_graph;
    std::uint64_t dia_cap = 10'000'000;
    diacmd->add_option("--graph", dia_graph, "graph JSON file")->required();
    diacmd->add_option("--max-nodes", dia_cap, "enumeration cap")->envname("EF_MAX_NODES");
    diacmd->callback([&] {
        Graph g = graph_from_json(load_json(dia_graph));
        RotationGraph rg = build_rotation_graph(g, dia_cap);
        emit(out, nlohmann::json{{"nodes", rg.nodes.size()},
                                 {"edges", rg.edges.size()},
                                 {"diameter", diameter(rg)}});
    });

    // transform
    auto* tcmd = app.add_subcommand(
        "transform", "rotation sequence between two trees via the centroid tree");
    std::string t_graph, t_from, t_to;
    tcmd->add_option("--graph", t_graph, "graph JSON file")->required();
    tcmd->add_option("--from", t_from, "tree JSON file")->required();
    tcmd->add_option("--to", t_to, "tree JSON file")->required();
    tcmd->callback([&] {
        Graph g = graph_from_json(load_json(t_graph));
        SearchTree t1 = tree_from_json(load_json(t_from));
        SearchTree t2 = tree_from_json(load_json(t_to));
        RotationSequence seq = transform(g, t1, t2);
        int n = g.vertex_count();
        emit(out, nlohmann::json{{"sequence", sequence_to_json(seq)},
                                 {"length", seq.size()},
                                 {"bound", 2 * n * ceil_log2(n + 1)}});
    });

    // check
    auto* ccmd = app.add_subcommand("check", "run the built-in invariant suites");
    ccmd->callback([&] { rc = run_checks(out, err); });

    std::vector<const char*> argv{"elimflip"};
    for (const auto& s : args)
        argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << " (visited " << e.visited() << ")\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace elimflip
