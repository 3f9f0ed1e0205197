#include "elimflip/search_tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace elimflip {

void Tubing::canonicalize() {
    for (auto& tube : tubes)
        std::sort(tube.begin(), tube.end());
    std::sort(tubes.begin(), tubes.end());
}

std::vector<std::vector<int>> children_lists(const SearchTree& t) {
    std::vector<std::vector<int>> children(t.parent.size());
    for (int v = 0; v < t.vertex_count(); ++v)
        if (v != t.root && t.parent[v] >= 0)
            children[t.parent[v]].push_back(v);
    return children;  // ascending by construction
}

std::vector<int> subtree_vertices(const SearchTree& t, int v) {
    auto children = children_lists(t);
    std::vector<int> verts;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        verts.push_back(u);
        for (int c : children[u])
            stack.push_back(c);
    }
    std::sort(verts.begin(), verts.end());
    return verts;
}

std::vector<int> depths(const SearchTree& t) {
    const int n = t.vertex_count();
    if (t.root < 0 || t.root >= n || t.parent[t.root] != -1)
        return {};
    auto children = children_lists(t);
    std::vector<int> depth(n, -1);
    std::vector<int> stack{t.root};
    depth[t.root] = 0;
    int visited = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++visited;
        for (int c : children[u]) {
            depth[c] = depth[u] + 1;
            stack.push_back(c);
        }
    }
    if (visited != n)
        return {};
    return depth;
}

int height(const SearchTree& t) {
    auto depth = depths(t);
    if (depth.empty())
        throw std::invalid_argument("height: parent assignment is not a rooted tree");
    return *std::max_element(depth.begin(), depth.end()) + 1;
}

bool validate(const Graph& g, const SearchTree& t) {
    const int n = g.vertex_count();
    if (t.vertex_count() != n)
        throw std::invalid_argument("validate: tree has " + std::to_string(t.vertex_count()) +
                                    " vertices, graph has " + std::to_string(n));
    if (n == 0)
        throw std::invalid_argument("validate: empty graph");
    if (t.root < 0 || t.root >= n)
        throw std::invalid_argument("validate: root out of range");
    for (int v = 0; v < n; ++v) {
        int p = t.parent[v];
        if (v == t.root) {
            if (p != -1)
                throw std::invalid_argument("validate: root must have parent -1");
        } else if (p < 0 || p >= n || p == v) {
            throw std::invalid_argument("validate: parent of " + std::to_string(v) +
                                        " out of range");
        }
    }

    // structural: parent map must be a rooted tree spanning [0,n)
    auto depth = depths(t);
    if (depth.empty())
        return false;

    // Euler intervals for O(1) ancestor tests
    auto children = children_lists(t);
    std::vector<int> tin(n), tout(n);
    {
        int timer = 0;
        // iterative DFS with explicit post-visit
        std::vector<std::pair<int, bool>> stack{{t.root, false}};
        while (!stack.empty()) {
            auto [u, post] = stack.back();
            stack.pop_back();
            if (post) {
                tout[u] = timer;
                continue;
            }
            tin[u] = timer++;
            stack.emplace_back(u, true);
            for (int c : children[u])
                stack.emplace_back(c, false);
        }
    }
    auto is_ancestor = [&](int a, int d) { return tin[a] <= tin[d] && tout[d] <= tout[a]; };

    // every graph edge must join an ancestor-descendant pair
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v && !is_ancestor(u, v) && !is_ancestor(v, u))
                return false;

    // every subtree must induce a connected subgraph
    for (int v = 0; v < n; ++v) {
        auto sub = subtree_vertices(t, v);
        if (!is_connected(g, sub))
            return false;
    }
    return true;
}

namespace {

void build_from_order(const Graph& g, const std::vector<int>& pos,
                      std::span<const int> verts, int parent_vertex,
                      SearchTree& out) {
    // root = vertex of verts earliest in the order
    int root = verts[0];
    for (int v : verts)
        if (pos[v] < pos[root])
            root = v;
    out.parent[root] = parent_vertex;
    if (parent_vertex == -1)
        out.root = root;
    std::vector<int> rest;
    rest.reserve(verts.size() - 1);
    for (int v : verts)
        if (v != root)
            rest.push_back(v);
    for (const auto& comp : components_within(g, rest))
        build_from_order(g, pos, comp, root, out);
}

}  // namespace

SearchTree from_elimination_order(const Graph& g, std::span<const int> order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("from_elimination_order: order size mismatch");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("from_elimination_order: not a permutation");
        pos[v] = i;
    }
    if (!is_connected(g))
        throw std::invalid_argument("from_elimination_order: graph not connected");
    SearchTree t;
    t.parent.assign(n, -1);
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v)
        all[v] = v;
    build_from_order(g, pos, all, -1, t);
    return t;
}

Tubing to_tubing(const Graph& g, const SearchTree& t) {
    if (!validate(g, t))
        throw std::invalid_argument("to_tubing: not a valid search tree");
    Tubing tb;
    tb.tubes.reserve(t.vertex_count());
    for (int v = 0; v < t.vertex_count(); ++v)
        tb.tubes.push_back(subtree_vertices(t, v));
    tb.canonicalize();
    return tb;
}

SearchTree from_tubing(const Graph& g, const Tubing& tb) {
    const int n = g.vertex_count();
    Tubing canon = tb;
    canon.canonicalize();
    if (static_cast<int>(canon.tubes.size()) != n)
        throw std::invalid_argument("from_tubing: maximal tubing must have exactly n tubes");
    for (std::size_t i = 0; i + 1 < canon.tubes.size(); ++i)
        if (canon.tubes[i] == canon.tubes[i + 1])
            throw std::invalid_argument("from_tubing: duplicate tube");
    for (const auto& tube : canon.tubes) {
        if (tube.empty())
            throw std::invalid_argument("from_tubing: empty tube");
        for (int v : tube)
            if (!g.has_vertex(v))
                throw std::invalid_argument("from_tubing: tube vertex out of range");
        if (std::adjacent_find(tube.begin(), tube.end()) != tube.end())
            throw std::invalid_argument("from_tubing: repeated vertex in tube");
        if (!is_connected(g, tube))
            throw std::invalid_argument("from_tubing: tube does not induce a connected subgraph");
    }
    // pairwise: nested or nonadjacent
    for (std::size_t i = 0; i < canon.tubes.size(); ++i) {
        for (std::size_t j = i + 1; j < canon.tubes.size(); ++j) {
            const auto& a = canon.tubes[i];
            const auto& b = canon.tubes[j];
            std::vector<int> inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(inter));
            bool nested = inter.size() == a.size() || inter.size() == b.size();
            if (nested)
                continue;
            if (!inter.empty())
                throw std::invalid_argument("from_tubing: tubes overlap without nesting");
            std::vector<int> uni;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
            if (is_connected(g, uni))
                throw std::invalid_argument("from_tubing: disjoint tubes are adjacent");
        }
    }
    // vertex v <-> smallest tube containing v; its root is v
    SearchTree t;
    t.parent.assign(n, -1);
    t.root = -1;
    std::vector<int> smallest(n, -1);  // tube index
    for (int v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < canon.tubes.size(); ++i) {
            const auto& tube = canon.tubes[i];
            if (!std::binary_search(tube.begin(), tube.end(), v))
                continue;
            if (smallest[v] < 0 || tube.size() < canon.tubes[smallest[v]].size())
                smallest[v] = static_cast<int>(i);
        }
        if (smallest[v] < 0)
            throw std::invalid_argument("from_tubing: vertex " + std::to_string(v) +
                                        " not covered by any tube");
    }
    std::vector<int> tube_root(n, -1);
    for (int v = 0; v < n; ++v) {
        if (tube_root[smallest[v]] != -1)
            throw std::invalid_argument("from_tubing: two vertices share a smallest tube");
        tube_root[smallest[v]] = v;
    }
    // parent of a tube's root = root of the smallest strictly containing tube
    for (std::size_t i = 0; i < canon.tubes.size(); ++i) {
        const auto& tube = canon.tubes[i];
        int best = -1;
        for (std::size_t j = 0; j < canon.tubes.size(); ++j) {
            if (j == i || canon.tubes[j].size() <= tube.size())
                continue;
            if (std::includes(canon.tubes[j].begin(), canon.tubes[j].end(), tube.begin(),
                              tube.end())) {
                if (best < 0 || canon.tubes[j].size() < canon.tubes[best].size())
                    best = static_cast<int>(j);
            }
        }
        if (best < 0) {
            if (t.root != -1)
                throw std::invalid_argument("from_tubing: more than one maximal tube");
            t.root = tube_root[i];
        } else {
            t.parent[tube_root[i]] = tube_root[best];
        }
    }
    if (!validate(g, t) || !(to_tubing(g, t) == canon))
        throw std::invalid_argument("from_tubing: tubing is not maximal on this graph");
    return t;
}

Ranking to_ranking(const Graph& g, const SearchTree& t) {
    if (!validate(g, t))
        throw std::invalid_argument("to_ranking: not a valid search tree");
    auto depth = depths(t);
    int h = *std::max_element(depth.begin(), depth.end()) + 1;
    Ranking r;
    r.color.resize(t.vertex_count());
    for (int v = 0; v < t.vertex_count(); ++v)
        r.color[v] = h - depth[v];
    return r;
}

namespace {

void build_from_ranking(const Graph& g, const Ranking& r, std::span<const int> verts,
                        int parent_vertex, SearchTree& out) {
    int root = -1;
    bool tie = false;
    for (int v : verts) {
        if (root < 0 || r.color[v] > r.color[root]) {
            root = v;
            tie = false;
        } else if (r.color[v] == r.color[root]) {
            tie = true;
        }
    }
    if (tie)
        throw std::invalid_argument(
            "from_ranking: maximum color shared within a connected component");
    out.parent[root] = parent_vertex;
    if (parent_vertex == -1)
        out.root = root;
    std::vector<int> rest;
    rest.reserve(verts.size() - 1);
    for (int v : verts)
        if (v != root)
            rest.push_back(v);
    for (const auto& comp : components_within(g, rest))
        build_from_ranking(g, r, comp, root, out);
}

}  // namespace

SearchTree from_ranking(const Graph& g, const Ranking& r) {
    const int n = g.vertex_count();
    if (static_cast<int>(r.color.size()) != n)
        throw std::invalid_argument("from_ranking: color map size mismatch");
    for (int c : r.color)
        if (c < 1)
            throw std::invalid_argument("from_ranking: colors must be positive");
    if (!is_connected(g))
        throw std::invalid_argument("from_ranking: graph not connected");
    SearchTree t;
    t.parent.assign(n, -1);
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v)
        all[v] = v;
    build_from_ranking(g, r, all, -1, t);
    return t;
}

}  // namespace elimflip
