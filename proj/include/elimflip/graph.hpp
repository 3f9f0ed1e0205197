#ifndef ELIMFLIP_GRAPH_HPP
#define ELIMFLIP_GRAPH_HPP

#include <span>
#include <utility>
#include <vector>

namespace elimflip {

using VertexId = int;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction. Self-loops are rejected, parallel edges
/// are collapsed.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;
    bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }

    /// Edge list sorted lexicographically, u < v in each pair.
    std::vector<std::pair<int, int>> edge_list() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

/// Connected components of G[s], each sorted ascending, components ordered
/// by their minimum element. Vertices of s must be valid and distinct.
std::vector<std::vector<int>> components_within(const Graph& g,
                                                std::span<const int> s);

/// Components of G - v, ordered by minimum element.
std::vector<std::vector<int>> components_after_removal(const Graph& g, int v);

/// True iff G[s] is connected. Empty set -> false, singleton -> true.
bool is_connected(const Graph& g, std::span<const int> s);

/// Whole-graph connectivity; false for the empty graph.
bool is_connected(const Graph& g);

/// Connected with exactly n-1 edges.
bool is_tree(const Graph& g);

/// All n^(n-2) labeled trees on n vertices via Prufer sequences.
/// Supported for 1 <= n <= 8.
std::vector<Graph> enumerate_labeled_trees(int n);

/// Induced subgraph G[s]. Vertex i of the result corresponds to the i-th
/// smallest element of s.
Graph induced_subgraph(const Graph& g, std::span<const int> s);

}  // namespace elimflip

#endif
