#include "elimflip/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace elimflip {

std::vector<int> bit_reversal(int k) {
    if (k < 1)
        throw std::invalid_argument("bit_reversal: k must be at least 1");
    if (k > 24)
        throw std::invalid_argument("bit_reversal: k too large");
    std::vector<int> sigma{0};
    for (int i = 2; i <= k; ++i) {
        std::vector<int> next;
        next.reserve(sigma.size() * 2);
        for (int x : sigma)
            next.push_back(2 * x);
        for (int x : sigma)
            next.push_back(2 * x + 1);
        sigma = std::move(next);
    }
    return sigma;
}

GkSpec build_gk(int k) {
    if (k < 1)
        throw std::invalid_argument("build_gk: k must be at least 1");
    if (k > 20)
        throw std::invalid_argument("build_gk: k too large");
    const int n = (1 << k) - 1;
    const int l = 1 << (k - 1);
    // heap index h in [1, n]: children 2h, 2h+1; h >= l is a leaf.
    // Leaves get ids 0..l-1 left to right, internal vertices l..n-1 in
    // breadth-first order, which is increasing heap order.
    auto id = [&](int h) { return h >= l ? h - l : l + (h - 1); };
    std::vector<std::pair<int, int>> edges;
    for (int h = 1; h < l; ++h) {
        edges.emplace_back(id(h), id(2 * h));
        edges.emplace_back(id(h), id(2 * h + 1));
    }
    GkSpec spec;
    spec.k = k;
    spec.graph = Graph(n, edges);
    spec.root = id(1);
    spec.leaves.resize(l);
    std::iota(spec.leaves.begin(), spec.leaves.end(), 0);
    for (int side = 0; side < 2 && k >= 2; ++side) {
        auto& out = side == 0 ? spec.side_a : spec.side_b;
        std::vector<int> stack{2 + side};
        while (!stack.empty()) {
            int h = stack.back();
            stack.pop_back();
            out.push_back(id(h));
            if (h < l) {
                stack.push_back(2 * h);
                stack.push_back(2 * h + 1);
            }
        }
        std::sort(out.begin(), out.end());
    }
    return spec;
}

SearchTree build_tk(const GkSpec& spec) {
    const int n = spec.graph.vertex_count();
    SearchTree t;
    t.root = spec.root;
    t.parent.assign(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{spec.root};
    seen[spec.root] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : spec.graph.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                t.parent[w] = u;
                stack.push_back(w);
            }
    }
    return t;
}

SearchTree build_tk_prime(const GkSpec& spec) {
    auto sigma = bit_reversal(spec.k);
    const int l = static_cast<int>(sigma.size());
    SearchTree t = build_tk(spec);
    t.root = sigma[0];
    t.parent[sigma[0]] = -1;
    for (int i = 1; i < l; ++i)
        t.parent[sigma[i]] = sigma[i - 1];
    if (spec.k >= 2)
        t.parent[spec.root] = sigma[l - 1];
    return t;
}

namespace {

std::vector<char> side_table(const GkSpec& spec) {
    std::vector<char> side(spec.graph.vertex_count(), 0);
    for (int v : spec.side_a)
        side[v] = 1;
    for (int v : spec.side_b)
        side[v] = 2;
    return side;
}

}  // namespace

int alternation_number(const GkSpec& spec, const SearchTree& t) {
    if (!validate(spec.graph, t))
        throw std::invalid_argument("alternation_number: not a valid search tree");
    auto side = side_table(spec);
    auto kids = children_lists(t);
    int best = 0;
    std::vector<std::pair<int, int>> stack{{t.root, 0}};
    while (!stack.empty()) {
        auto [u, acc] = stack.back();
        stack.pop_back();
        best = std::max(best, acc);
        for (int w : kids[u]) {
            int cross = (side[u] != 0 && side[w] != 0 && side[u] != side[w]) ? 1 : 0;
            stack.emplace_back(w, acc + cross);
        }
    }
    return best;
}

RotationClass classify_rotation(const GkSpec& spec, const Rotation& rot) {
    if (!spec.graph.has_vertex(rot.parent) || !spec.graph.has_vertex(rot.child))
        throw std::invalid_argument("classify_rotation: endpoint out of range");
    if (rot.parent == spec.root || rot.child == spec.root)
        return RotationClass::R;
    auto side = side_table(spec);
    char a = side[rot.parent];
    char b = side[rot.child];
    if (a == 0 || b == 0)
        throw std::logic_error("classify_rotation: endpoint outside both sides");
    if (a == b)
        return a == 1 ? RotationClass::AA : RotationClass::BB;
    return RotationClass::AB;
}

const char* to_string(RotationClass c) {
    switch (c) {
        case RotationClass::AA: return "AA";
        case RotationClass::BB: return "BB";
        case RotationClass::AB: return "AB";
        case RotationClass::R: return "R";
    }
    return "?";
}

long long lower_bound_f(int k) {
    if (k < 1)
        throw std::invalid_argument("lower_bound_f: k must be at least 1");
    // f(k) = (k-1) * 2^(k-2), which leaves 64 signed bits at k = 60
    if (k > 59)
        throw std::invalid_argument("lower_bound_f: k too large");
    long long f = 0;
    for (int i = 2; i <= k; ++i)
        f = 2 * f + (1LL << (i - 2));
    return f;
}

namespace {

// Centroid of the connected induced subgraph on verts (sorted ascending);
// smallest id wins ties.
int centroid_in(const Graph& g, const std::vector<int>& verts) {
    const int m = static_cast<int>(verts.size());
    if (m == 1)
        return verts[0];
    const int n = g.vertex_count();
    std::vector<char> in(n, 0);
    for (int v : verts)
        in[v] = 1;
    std::vector<int> order, par(n, -1), size(n, 1), stack{verts[0]};
    std::vector<char> seen(n, 0);
    seen[verts[0]] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (int w : g.neighbors(u))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                par[w] = u;
                stack.push_back(w);
            }
    }
    if (static_cast<int>(order.size()) != m)
        throw std::invalid_argument("centroid: vertex set is not connected");
    for (int i = m - 1; i > 0; --i)
        size[par[order[i]]] += size[order[i]];
    for (int v : verts) {
        int worst = m - size[v];
        for (int w : g.neighbors(v))
            if (in[w] && par[w] == v)
                worst = std::max(worst, size[w]);
        if (2 * worst <= m)
            return v;
    }
    throw std::logic_error("centroid: no vertex qualifies");
}

}  // namespace

int centroid(const Graph& g) {
    if (!is_tree(g))
        throw std::invalid_argument("centroid: graph is not a tree");
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return centroid_in(g, all);
}

SearchTree centroid_decomposition_tree(const Graph& g) {
    if (!is_tree(g))
        throw std::invalid_argument("centroid_decomposition_tree: graph is not a tree");
    const int n = g.vertex_count();
    SearchTree t;
    t.parent.assign(n, -1);
    std::vector<std::pair<std::vector<int>, int>> todo;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    todo.emplace_back(std::move(all), -1);
    while (!todo.empty()) {
        auto [verts, par] = std::move(todo.back());
        todo.pop_back();
        int c = centroid_in(g, verts);
        t.parent[c] = par;
        if (par == -1)
            t.root = c;
        std::vector<int> rest;
        for (int v : verts)
            if (v != c)
                rest.push_back(v);
        if (!rest.empty())
            for (auto& comp : components_within(g, rest))
                todo.emplace_back(std::move(comp), c);
    }
    return t;
}

RotationSequence rotate_to_root(const Graph& g, const SearchTree& t, int v) {
    if (!validate(g, t))
        throw std::invalid_argument("rotate_to_root: not a valid search tree");
    if (!g.has_vertex(v))
        throw std::invalid_argument("rotate_to_root: vertex out of range");
    SearchTree cur = t;
    RotationSequence seq;
    while (cur.root != v) {
        int u = cur.parent[v];
        seq.push_back({u, v});
        detail::rotate_in_place(g, cur, u, v);
    }
    return seq;
}

RotationSequence centroid_transform(const Graph& g, const SearchTree& t) {
    if (!is_tree(g))
        throw std::invalid_argument("centroid_transform: graph is not a tree");
    if (!validate(g, t))
        throw std::invalid_argument("centroid_transform: not a valid search tree");
    const int n = g.vertex_count();
    SearchTree cur = t;
    RotationSequence seq;
    std::vector<char> in(n, 0);
    std::vector<std::vector<int>> todo;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    todo.push_back(std::move(all));
    while (!todo.empty()) {
        std::vector<int> verts = std::move(todo.back());
        todo.pop_back();
        if (verts.size() <= 1)
            continue;
        int c = centroid_in(g, verts);
        for (int v : verts)
            in[v] = 1;
        // lift the centroid to the top of this component's subtree
        while (c != cur.root && in[cur.parent[c]]) {
            int u = cur.parent[c];
            seq.push_back({u, c});
            detail::rotate_in_place(g, cur, u, c);
        }
        for (int v : verts)
            in[v] = 0;
        std::vector<int> rest;
        for (int v : verts)
            if (v != c)
                rest.push_back(v);
        for (auto& comp : components_within(g, rest))
            todo.push_back(std::move(comp));
    }
    return seq;
}

RotationSequence transform(const Graph& g, const SearchTree& t1, const SearchTree& t2) {
    if (!is_tree(g))
        throw std::invalid_argument("transform: graph is not a tree");
    RotationSequence seq = centroid_transform(g, t1);
    RotationSequence back = invert_sequence(centroid_transform(g, t2));
    seq.insert(seq.end(), back.begin(), back.end());
    return seq;
}

}  // namespace elimflip
