#include "elimflip/rotation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace elimflip {

std::vector<Rotation> rotatable_pairs(const Graph& g, const SearchTree& t) {
    if (!validate(g, t))
        throw std::invalid_argument("rotatable_pairs: not a valid search tree");
    std::vector<Rotation> pairs;
    pairs.reserve(t.vertex_count() - 1);
    for (int v = 0; v < t.vertex_count(); ++v)
        if (v != t.root)
            pairs.push_back({t.parent[v], v});
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

namespace detail {

// Core rotation on the parent array; assumes v is a child of u.
// Kept free of validation so enumeration and BFS can call it per edge.
void rotate_in_place(const Graph& g, SearchTree& t, int u, int v) {
    const int n = t.vertex_count();
    // children of v and subtree membership, one pass each
    std::vector<int> child_of(n, -1);  // maps w -> its child-of-v subtree top, else -1
    std::vector<int> v_children;
    for (int w = 0; w < n; ++w)
        if (w != t.root && t.parent[w] == v)
            v_children.push_back(w);
    // mark each subtree of v by its top vertex
    {
        std::vector<std::vector<int>> children(n);
        for (int w = 0; w < n; ++w)
            if (w != t.root && t.parent[w] >= 0)
                children[t.parent[w]].push_back(w);
        std::vector<int> stack;
        for (int top : v_children) {
            stack.push_back(top);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                child_of[x] = top;
                for (int c : children[x])
                    stack.push_back(c);
            }
        }
    }
    const int p = (u == t.root) ? -1 : t.parent[u];
    t.parent[v] = p;
    if (p == -1)
        t.root = v;
    t.parent[u] = v;
    // subtree S of v moves under u iff u has a g-neighbor in S
    std::vector<char> moves(n, 0);
    for (int w : g.neighbors(u))
        if (child_of[w] >= 0)
            moves[child_of[w]] = 1;
    for (int top : v_children)
        if (moves[top])
            t.parent[top] = u;
}

}  // namespace detail

SearchTree rotate(const Graph& g, const SearchTree& t, int u, int v) {
    const int n = t.vertex_count();
    if (n != g.vertex_count())
        throw std::invalid_argument("rotate: tree/graph size mismatch");
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("rotate: vertex out of range");
    if (v == t.root || t.parent[v] != u)
        throw std::invalid_argument("rotate: " + std::to_string(v) + " is not a child of " +
                                    std::to_string(u));
    SearchTree result = t;
    detail::rotate_in_place(g, result, u, v);
    return result;
}

SearchTree apply_sequence(const Graph& g, SearchTree t, const RotationSequence& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto& [u, v] = seq[i];
        if (v < 0 || v >= t.vertex_count() || v == t.root || t.parent[v] != u)
            throw std::invalid_argument("apply_sequence: step " + std::to_string(i) +
                                        " inapplicable: " + std::to_string(v) +
                                        " is not a child of " + std::to_string(u));
        detail::rotate_in_place(g, t, u, v);
    }
    return t;
}

RotationSequence invert_sequence(const RotationSequence& seq) {
    RotationSequence inv;
    inv.reserve(seq.size());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        inv.push_back({it->child, it->parent});
    return inv;
}

int tubing_difference(const Graph& g, const SearchTree& a, const SearchTree& b) {
    Tubing ta = to_tubing(g, a);
    Tubing tb = to_tubing(g, b);
    std::vector<std::vector<int>> diff;
    std::set_symmetric_difference(ta.tubes.begin(), ta.tubes.end(), tb.tubes.begin(),
                                  tb.tubes.end(), std::back_inserter(diff));
    return static_cast<int>(diff.size());
}

}  // namespace elimflip
