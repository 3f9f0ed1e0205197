#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "elimflip/constructions.hpp"
#include "elimflip/graph.hpp"
#include "elimflip/rotation.hpp"
#include "elimflip/rotation_graph.hpp"
#include "elimflip/search_tree.hpp"
#include "oracles.hpp"

using namespace elimflip;

namespace {

std::vector<int> bfs_from(const RotationGraph& rg, int s) {
    std::vector<std::vector<int>> adj(rg.nodes.size());
    for (auto [a, b] : rg.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> dist(rg.nodes.size(), -1), queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::set<std::pair<int, std::vector<int>>> key_set(const std::vector<SearchTree>& trees) {
    std::set<std::pair<int, std::vector<int>>> keys;
    for (const SearchTree& t : trees)
        keys.insert(oracles::tree_key(t));
    return keys;
}

}  // namespace

TEST_CASE("counting matches brute force, Catalan and factorial") {
    for (int n = 1; n <= 7; ++n)
        CHECK(count_search_trees(oracles::path_graph(n)) == oracles::catalan()[n]);
    CHECK(count_search_trees(oracles::path_graph(10)) == 16796);
    CHECK(count_search_trees(oracles::path_graph(20)) == 6564120420ULL);
    for (int n = 1; n <= 7; ++n)
        CHECK(count_search_trees(oracles::complete_graph(n)) == oracles::factorial(n));
    CHECK(count_search_trees(oracles::star_graph(4)) == 16);

    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : oracles::all_connected_graphs(n))
            CHECK(count_search_trees(g) == oracles::search_trees_by_orders(g).size());
    for (const Graph& g : enumerate_labeled_trees(5))
        CHECK(count_search_trees(g) == oracles::search_trees_by_orders(g).size());
    CHECK(count_search_trees(oracles::cycle_graph(5)) ==
          oracles::search_trees_by_orders(oracles::cycle_graph(5)).size());

    CHECK_THROWS_AS(count_search_trees(Graph(2, {})), std::invalid_argument);
    CHECK_THROWS_AS(count_search_trees(Graph()), std::invalid_argument);
    CHECK_THROWS_AS(count_search_trees(oracles::path_graph(65)), std::invalid_argument);
    CHECK_THROWS_AS(count_search_trees(oracles::path_graph(40)), std::overflow_error);
}

TEST_CASE("enumeration is exact, deduplicated and capped") {
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : oracles::all_connected_graphs(n)) {
            auto got = enumerate_search_trees(g);
            CHECK(got.size() == count_search_trees(g));
            for (const SearchTree& t : got)
                CHECK(validate(g, t));
            CHECK(key_set(got) == key_set(oracles::search_trees_by_filter(g)));
        }
    for (const Graph& g : enumerate_labeled_trees(5)) {
        auto got = enumerate_search_trees(g);
        CHECK(key_set(got) == key_set(oracles::search_trees_by_orders(g)));
    }
    // canonical order: lexicographic in the shifted parent array
    auto trees = enumerate_search_trees(oracles::path_graph(4));
    CHECK(std::is_sorted(trees.begin(), trees.end(),
                         [](const SearchTree& a, const SearchTree& b) {
                             return a.parent < b.parent;
                         }));

    try {
        enumerate_search_trees(oracles::path_graph(4), 3);
        FAIL("expected CapExceededError");
    } catch (const CapExceededError& e) {
        CHECK(e.visited() == 14);
    }
}

TEST_CASE("rotation graphs are (n-1)-regular and connected") {
    std::vector<Graph> hosts;
    for (int n = 2; n <= 4; ++n)
        for (const Graph& g : oracles::all_connected_graphs(n))
            hosts.push_back(g);
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_labeled_trees(n))
            hosts.push_back(g);
    hosts.push_back(oracles::cycle_graph(5));
    hosts.push_back(oracles::complete_graph(5));

    for (const Graph& g : hosts) {
        const int n = g.vertex_count();
        RotationGraph rg = build_rotation_graph(g);
        std::vector<int> degree(rg.nodes.size(), 0);
        for (auto [a, b] : rg.edges) {
            CHECK(a < b);
            ++degree[a];
            ++degree[b];
        }
        for (int d : degree)
            CHECK(d == n - 1);
        CHECK(std::is_sorted(rg.edges.begin(), rg.edges.end()));
        auto dist = bfs_from(rg, 0);
        CHECK(std::count(dist.begin(), dist.end(), -1) == 0);
        CHECK(2 * rg.edges.size() == rg.nodes.size() * (n - 1));
    }
}

TEST_CASE("rotation graph edges join trees one flip apart") {
    for (const Graph& g : {oracles::path_graph(4), oracles::complete_graph(3),
                           oracles::star_graph(4)}) {
        RotationGraph rg = build_rotation_graph(g);
        for (auto [a, b] : rg.edges)
            CHECK(tubing_difference(g, rg.nodes[a], rg.nodes[b]) == 2);
    }
}

TEST_CASE("the dedicated fixtures: pentagon and hexagon") {
    RotationGraph penta = build_rotation_graph(oracles::path_graph(3));
    CHECK(penta.nodes.size() == 5);
    CHECK(penta.edges.size() == 5);
    CHECK(diameter(penta) == 2);
    CHECK(diameter(oracles::path_graph(3)) == 2);

    RotationGraph hexa = build_rotation_graph(oracles::complete_graph(3));
    CHECK(hexa.nodes.size() == 6);
    CHECK(hexa.edges.size() == 6);
    CHECK(diameter(hexa) == 3);

    CHECK(build_rotation_graph(oracles::path_graph(4)).nodes.size() == 14);
    CHECK(build_rotation_graph(oracles::complete_graph(4)).nodes.size() == 24);
}

TEST_CASE("diameter agrees with an all-pairs sweep and is at least n-1 on trees") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_labeled_trees(n)) {
            RotationGraph rg = build_rotation_graph(g);
            int best = 0;
            for (std::size_t s = 0; s < rg.nodes.size(); ++s) {
                auto dist = bfs_from(rg, static_cast<int>(s));
                best = std::max(best, *std::max_element(dist.begin(), dist.end()));
            }
            int d = diameter(rg);
            CHECK(d == best);
            CHECK(d >= n - 1);
        }

    RotationGraph split;
    split.nodes.resize(2);
    CHECK_THROWS_AS(diameter(split), std::logic_error);
}

TEST_CASE("exact distances match full breadth-first search") {
    for (const Graph& g : {oracles::path_graph(4), oracles::complete_graph(3),
                           oracles::star_graph(4), oracles::cycle_graph(4)}) {
        RotationGraph rg = build_rotation_graph(g);
        for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
            auto dist = bfs_from(rg, static_cast<int>(i));
            for (std::size_t j = 0; j < rg.nodes.size(); ++j) {
                DistanceAttempt a = distance_attempt(g, rg.nodes[i], rg.nodes[j]);
                CHECK(a.found);
                CHECK(a.distance == dist[j]);
                CHECK(a.limit.empty());
                CHECK(distance(g, rg.nodes[i], rg.nodes[j]) == dist[j]);
            }
        }
    }
}

TEST_CASE("distance respects the two endpoint fixtures of the family") {
    GkSpec g2 = build_gk(2);
    CHECK(distance(g2.graph, build_tk(g2), build_tk_prime(g2)) == 2);
    CHECK(lower_bound_f(2) == 1);  // the certificate is not tight at k = 2

    GkSpec g3 = build_gk(3);
    int d3 = distance(g3.graph, build_tk(g3), build_tk_prime(g3));
    CHECK(d3 >= lower_bound_f(3));
    RotationSequence seq = transform(g3.graph, build_tk(g3), build_tk_prime(g3));
    CHECK(d3 <= static_cast<int>(seq.size()));
}

TEST_CASE("distance search honors its caps") {
    Graph p4 = oracles::path_graph(4);
    RotationGraph rg = build_rotation_graph(p4);
    // pick two trees a full diameter apart
    int from = 0, to = 0, best = -1;
    for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
        auto dist = bfs_from(rg, static_cast<int>(i));
        for (std::size_t j = 0; j < rg.nodes.size(); ++j)
            if (dist[j] > best) {
                best = dist[j];
                from = static_cast<int>(i);
                to = static_cast<int>(j);
            }
    }
    REQUIRE(best >= 3);

    SearchCaps tight;
    tight.max_nodes = 1;
    DistanceAttempt a = distance_attempt(p4, rg.nodes[from], rg.nodes[to], tight);
    CHECK(!a.found);
    CHECK(a.limit == "nodes");
    CHECK(a.visited > 1);
    CHECK_THROWS_AS(distance(p4, rg.nodes[from], rg.nodes[to], tight), CapExceededError);

    SearchCaps rushed;
    rushed.max_seconds = 1e-12;
    DistanceAttempt b = distance_attempt(p4, rg.nodes[from], rg.nodes[to], rushed);
    CHECK(!b.found);
    CHECK(b.limit == "time");

    // identical endpoints never hit a cap
    DistanceAttempt c = distance_attempt(p4, rg.nodes[from], rg.nodes[from], tight);
    CHECK(c.found);
    CHECK(c.distance == 0);

    CHECK_THROWS_AS(distance_attempt(p4, rg.nodes[0], SearchTree{}, {}),
                    std::invalid_argument);
}

TEST_CASE("the larger byte codec agrees with the packed one") {
    // 16 vertices forces the byte-string codec; a star's trees are few
    Graph star16 = oracles::star_graph(16);
    std::mt19937 rng(2024);
    SearchTree a = oracles::random_search_tree(star16, rng);
    SearchTree b = oracles::random_search_tree(star16, rng);
    int d = distance(star16, a, b);
    CHECK(d >= 0);
    RotationSequence seq = transform(star16, a, b);
    CHECK(d <= static_cast<int>(seq.size()));
    CHECK((d == 0) == (a == b));
}

TEST_CASE("DOT rendering") {
    RotationGraph rg = build_rotation_graph(oracles::path_graph(2));
    CHECK(to_dot(rg) ==
          "graph rotation_graph {\n"
          "  N0 [label=\"0\"];\n"
          "  N1 [label=\"1\"];\n"
          "  N0 -- N1;\n"
          "}\n");
    std::string full = to_dot(rg, true);
    CHECK(full.find("r=0 p=[-1,0]") != std::string::npos);
    CHECK(full.find("r=1 p=[1,-1]") != std::string::npos);

    RotationGraph penta = build_rotation_graph(oracles::path_graph(3));
    std::string dot = to_dot(penta);
    std::size_t links = 0, pos = 0;
    while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
        ++links;
        pos += 4;
    }
    CHECK(links == penta.edges.size());
}
