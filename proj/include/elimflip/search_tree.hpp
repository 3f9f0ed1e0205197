#ifndef ELIMFLIP_SEARCH_TREE_HPP
#define ELIMFLIP_SEARCH_TREE_HPP

#include <span>
#include <vector>

#include "elimflip/graph.hpp"

namespace elimflip {

/// Rooted tree on the vertex set of a graph, stored as root plus parent
/// assignment. parent[root] == -1. Children are unordered; equality is
/// root plus parent map.
struct SearchTree {
    int root = 0;
    std::vector<int> parent;

    int vertex_count() const { return static_cast<int>(parent.size()); }

    friend bool operator==(const SearchTree&, const SearchTree&) = default;
};

/// Set of tubes (vertex subsets). Canonical form: each tube sorted
/// ascending, tubes sorted lexicographically.
struct Tubing {
    std::vector<std::vector<int>> tubes;

    void canonicalize();

    friend bool operator==(const Tubing&, const Tubing&) = default;
};

/// Vertex coloring with colors in [1,k]; equal-colored vertices are
/// separated on every path by a higher color.
struct Ranking {
    std::vector<int> color;

    friend bool operator==(const Ranking&, const Ranking&) = default;
};

/// Children of each vertex, sorted ascending.
std::vector<std::vector<int>> children_lists(const SearchTree& t);

/// Vertex set of the subtree rooted at v, sorted ascending.
std::vector<int> subtree_vertices(const SearchTree& t, int v);

/// Depth of every vertex (root has depth 0), or empty if the parent
/// assignment is not a rooted tree on [0,n).
std::vector<int> depths(const SearchTree& t);

/// Number of vertices on the longest root-to-leaf path; 1 for a single
/// vertex.
int height(const SearchTree& t);

/// True iff t is a search tree on g: every subtree induces a connected
/// subgraph of g and every g-edge joins an ancestor-descendant pair.
/// Throws std::invalid_argument when the vertex sets mismatch or ids are
/// out of range (distinct from returning false).
bool validate(const Graph& g, const SearchTree& t);

/// Root the first vertex of the order, then recurse on the components of
/// the remaining graph, rooting each at its earliest vertex in the order.
SearchTree from_elimination_order(const Graph& g, std::span<const int> order);

/// Subtree vertex sets of a valid search tree; maximal tubing of size n.
Tubing to_tubing(const Graph& g, const SearchTree& t);

/// Inverse of to_tubing. Throws if the tubing is not a maximal valid
/// tubing on g.
SearchTree from_tubing(const Graph& g, const Tubing& tb);

/// color(v) = height(t) - depth(v), so colors run 1..height(t) with the
/// root on top.
Ranking to_ranking(const Graph& g, const SearchTree& t);

/// Root each recursive component at its unique maximum-color vertex.
/// Throws if a component's maximum color is shared (invalid ranking).
SearchTree from_ranking(const Graph& g, const Ranking& r);

}  // namespace elimflip

#endif
