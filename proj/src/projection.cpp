#include "elimflip/projection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace elimflip {

namespace {

// pruning state on original ids
struct PruneState {
    std::vector<char> alive;
    std::vector<int> parent;
    int root;
    int alive_count;
};

PruneState make_state(const SearchTree& t) {
    PruneState st;
    st.alive.assign(t.parent.size(), 1);
    st.parent = t.parent;
    st.root = t.root;
    st.alive_count = t.vertex_count();
    return st;
}

// remove x, which must have at most one child in the current tree
void prune_vertex(PruneState& st, int x) {
    int child = -1;
    for (std::size_t v = 0; v < st.parent.size(); ++v) {
        if (st.alive[v] && static_cast<int>(v) != st.root && st.parent[v] == x) {
            if (child != -1)
                throw std::logic_error("prune: vertex has two children");
            child = static_cast<int>(v);
        }
    }
    if (x == st.root) {
        if (child == -1)
            throw std::logic_error("prune: cannot remove the last vertex");
        st.root = child;
        st.parent[child] = -1;
    } else if (child != -1) {
        st.parent[child] = st.parent[x];
    }
    st.alive[x] = 0;
    --st.alive_count;
}

SearchTree relabel_state(const PruneState& st) {
    std::vector<int> kept;
    for (std::size_t v = 0; v < st.alive.size(); ++v)
        if (st.alive[v])
            kept.push_back(static_cast<int>(v));
    std::vector<int> local(st.alive.size(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i)
        local[kept[i]] = static_cast<int>(i);
    SearchTree out;
    out.parent.resize(kept.size());
    out.root = local[st.root];
    for (std::size_t i = 0; i < kept.size(); ++i) {
        int p = (kept[i] == st.root) ? -1 : st.parent[kept[i]];
        out.parent[i] = (p == -1) ? -1 : local[p];
    }
    return out;
}

void check_projection_inputs(const Graph& g, const SearchTree& t) {
    if (!is_tree(g))
        throw std::invalid_argument("projection: host graph must be a tree");
    if (!validate(g, t))
        throw std::invalid_argument("projection: not a valid search tree");
}

std::vector<char> subset_flags(const Graph& g, std::span<const int> s) {
    std::vector<char> in_set(g.vertex_count(), 0);
    for (int v : s) {
        if (!g.has_vertex(v))
            throw std::invalid_argument("projection: subset vertex out of range");
        if (in_set[v])
            throw std::invalid_argument("projection: duplicate subset vertex");
        in_set[v] = 1;
    }
    return in_set;
}

}  // namespace

SearchTree prune_leaf(const Graph& g, const SearchTree& t, int x) {
    check_projection_inputs(g, t);
    if (g.vertex_count() < 2)
        throw std::invalid_argument("prune_leaf: host must have at least two vertices");
    if (!g.has_vertex(x))
        throw std::invalid_argument("prune_leaf: vertex out of range");
    if (g.degree(x) != 1)
        throw std::invalid_argument("prune_leaf: " + std::to_string(x) +
                                    " is not a leaf of the host tree");
    PruneState st = make_state(t);
    prune_vertex(st, x);
    return relabel_state(st);
}

SearchTree project_tree(const Graph& g, const SearchTree& t, std::span<const int> s) {
    check_projection_inputs(g, t);
    auto in_set = subset_flags(g, s);
    if (s.empty() || !is_connected(g, s))
        throw std::invalid_argument("project_tree: subset must induce a nonempty connected subgraph");

    PruneState st = make_state(t);
    const int n = g.vertex_count();
    std::vector<int> host_degree(n, 0);
    for (int v = 0; v < n; ++v)
        host_degree[v] = g.degree(v);
    while (st.alive_count > static_cast<int>(s.size())) {
        int x = -1;
        for (int v = 0; v < n; ++v) {
            if (st.alive[v] && !in_set[v] && host_degree[v] <= 1) {
                x = v;
                break;
            }
        }
        if (x < 0)
            throw std::logic_error("project_tree: no prunable host leaf found");
        for (int w : g.neighbors(x))
            if (st.alive[w])
                --host_degree[w];
        prune_vertex(st, x);
    }
    return relabel_state(st);
}

SearchTree project_tree_direct(const Graph& g, const SearchTree& t,
                               std::span<const int> s) {
    check_projection_inputs(g, t);
    auto in_set = subset_flags(g, s);
    if (s.empty() || !is_connected(g, s))
        throw std::invalid_argument(
            "project_tree_direct: subset must induce a nonempty connected subgraph");

    const int n = g.vertex_count();
    PruneState st = make_state(t);

    // components of the tree restricted to the complement of s
    std::vector<int> comp_id(n, -1);
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < n; ++v) {
        if (in_set[v] || comp_id[v] != -1)
            continue;
        std::vector<int> comp, stack{v};
        comp_id[v] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            // tree neighbors: parent and children
            std::vector<int> tnbrs;
            if (u != t.root)
                tnbrs.push_back(t.parent[u]);
            for (int w = 0; w < n; ++w)
                if (w != t.root && t.parent[w] == u)
                    tnbrs.push_back(w);
            for (int w : tnbrs)
                if (!in_set[w] && comp_id[w] == -1) {
                    comp_id[w] = comp_id[u];
                    stack.push_back(w);
                }
        }
        comps.push_back(std::move(comp));
    }

    for (const auto& comp : comps) {
        bool holds_root = false;
        int above = -1;
        std::vector<int> below;
        for (int u : comp) {
            if (u == st.root)
                holds_root = true;
            else if (in_set[st.parent[u]])
                above = st.parent[u];
            for (int w = 0; w < n; ++w)
                if (w != st.root && st.parent[w] == u && in_set[w])
                    below.push_back(w);
        }
        int outside = static_cast<int>(below.size()) + (above >= 0 ? 1 : 0);
        if (outside > 2 || (holds_root && outside > 1))
            throw std::logic_error("project_tree_direct: component with too many neighbors");
        if (holds_root) {
            if (below.empty())
                throw std::logic_error("project_tree_direct: subset not reachable from root");
            st.root = below.front();
            st.parent[below.front()] = -1;
        } else if (above >= 0 && below.size() == 1) {
            st.parent[below.front()] = above;
        }
        // a component seen by one vertex only is dropped as a whole
        for (int u : comp) {
            st.alive[u] = 0;
            --st.alive_count;
        }
    }
    return relabel_state(st);
}

RotationSequence project_sequence(const RotationSequence& seq, std::span<const int> s) {
    std::vector<int> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    auto contains = [&](int v) {
        return std::binary_search(sorted.begin(), sorted.end(), v);
    };
    RotationSequence kept;
    for (const Rotation& r : seq)
        if (contains(r.parent) && contains(r.child))
            kept.push_back(r);
    return kept;
}

RotationSequence relabel_sequence(const RotationSequence& seq, std::span<const int> s) {
    std::vector<int> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    auto local = [&](int v) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        if (it == sorted.end() || *it != v)
            throw std::invalid_argument("relabel_sequence: endpoint not in subset");
        return static_cast<int>(it - sorted.begin());
    };
    RotationSequence out;
    out.reserve(seq.size());
    for (const Rotation& r : seq)
        out.push_back({local(r.parent), local(r.child)});
    return out;
}

SearchTree apply_projected_sequence(const Graph& sub, SearchTree t,
                                    const RotationSequence& local_seq,
                                    ReplayStats* stats) {
    for (const auto& [u, v] : local_seq) {
        if (v >= 0 && v < t.vertex_count() && v != t.root && t.parent[v] == u) {
            detail::rotate_in_place(sub, t, u, v);
            if (stats)
                ++stats->applied;
        } else if (stats) {
            ++stats->skipped;
        }
    }
    return t;
}

}  // namespace elimflip
