#include "elimflip/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace elimflip {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0)
        throw std::invalid_argument("graph: negative vertex count");
    adj_.resize(n);
    for (const auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += static_cast<int>(nbrs.size());
    }
    edge_count_ /= 2;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v))
        throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = neighbors(u);
    if (!has_vertex(v))
        throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range");
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v)
                edges.emplace_back(u, v);
    return edges;  // already lexicographic: u ascending, adjacency sorted
}

std::vector<std::vector<int>> components_within(const Graph& g,
                                                std::span<const int> s) {
    const int n = g.vertex_count();
    std::vector<char> in_set(n, 0);
    for (int v : s) {
        if (!g.has_vertex(v))
            throw std::invalid_argument("components_within: vertex out of range");
        if (in_set[v])
            throw std::invalid_argument("components_within: duplicate vertex in set");
        in_set[v] = 1;
    }
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int start : s) {
        if (seen[start])
            continue;
        std::vector<int> comp;
        stack.push_back(start);
        seen[start] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (in_set[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

std::vector<std::vector<int>> components_after_removal(const Graph& g, int v) {
    if (!g.has_vertex(v))
        throw std::invalid_argument("components_after_removal: vertex out of range");
    std::vector<int> rest;
    rest.reserve(g.vertex_count() - 1);
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v)
            rest.push_back(u);
    return components_within(g, rest);
}

bool is_connected(const Graph& g, std::span<const int> s) {
    if (s.empty())
        return false;
    return components_within(g, s).size() == 1;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0)
        return false;
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        all[v] = v;
    return is_connected(g, all);
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

namespace {

Graph tree_from_prufer(int n, const std::vector<int>& code) {
    std::vector<int> deg(n, 1);
    for (int v : code)
        ++deg[v];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    // smallest-leaf elimination
    std::vector<char> used(n, 0);
    for (int v : code) {
        int leaf = -1;
        for (int u = 0; u < n; ++u)
            if (deg[u] == 1 && !used[u]) {
                leaf = u;
                break;
            }
        edges.emplace_back(leaf, v);
        used[leaf] = 1;
        --deg[v];
    }
    int a = -1, b = -1;
    for (int u = 0; u < n; ++u)
        if (!used[u]) {
            if (a < 0)
                a = u;
            else
                b = u;
        }
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

}  // namespace

std::vector<Graph> enumerate_labeled_trees(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("enumerate_labeled_trees: n must be in [1,8]");
    std::vector<Graph> trees;
    if (n == 1) {
        trees.emplace_back(1, std::vector<std::pair<int, int>>{});
        return trees;
    }
    if (n == 2) {
        trees.emplace_back(2, std::vector<std::pair<int, int>>{{0, 1}});
        return trees;
    }
    std::vector<int> code(n - 2, 0);
    while (true) {
        trees.push_back(tree_from_prufer(n, code));
        int i = n - 3;
        while (i >= 0 && code[i] == n - 1)
            code[i--] = 0;
        if (i < 0)
            break;
        ++code[i];
    }
    return trees;
}

Graph induced_subgraph(const Graph& g, std::span<const int> s) {
    std::vector<int> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("induced_subgraph: duplicate vertex in set");
    const int n = g.vertex_count();
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!g.has_vertex(sorted[i]))
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        local[sorted[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : sorted)
        for (int v : g.neighbors(u))
            if (u < v && local[v] >= 0)
                edges.emplace_back(local[u], local[v]);
    return Graph(static_cast<int>(sorted.size()), edges);
}

}  // namespace elimflip
