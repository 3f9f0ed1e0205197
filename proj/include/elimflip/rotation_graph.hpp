#ifndef ELIMFLIP_ROTATION_GRAPH_HPP
#define ELIMFLIP_ROTATION_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "elimflip/graph.hpp"
#include "elimflip/rotation.hpp"
#include "elimflip/search_tree.hpp"

namespace elimflip {

struct SearchCaps {
    std::uint64_t max_nodes = 10'000'000;
    double max_seconds = 0.0;  // 0 = no time limit
};

class CapExceededError : public std::runtime_error {
public:
    CapExceededError(const std::string& what, std::uint64_t visited)
        : std::runtime_error(what), visited_(visited) {}
    std::uint64_t visited() const { return visited_; }

private:
    std::uint64_t visited_;
};

/// All search trees of g as nodes, one edge per rotation. (n-1)-regular
/// and connected.
struct RotationGraph {
    std::vector<SearchTree> nodes;           // canonical order
    std::vector<std::pair<int, int>> edges;  // node indices, first < second, sorted
};

/// Exact number of search trees on connected g, by recursive root choice
/// with per-component memoization. Throws std::overflow_error if the count
/// does not fit in 64 bits.
std::uint64_t count_search_trees(const Graph& g);

/// Every search tree exactly once, in canonical (encoded) order. Throws
/// CapExceededError when the total count exceeds the cap, reporting it.
std::vector<SearchTree> enumerate_search_trees(const Graph& g,
                                               std::uint64_t max_trees = 10'000'000);

RotationGraph build_rotation_graph(const Graph& g, std::uint64_t max_trees = 10'000'000);

struct DistanceAttempt {
    bool found = false;
    int distance = -1;
    std::uint64_t visited = 0;
    double seconds = 0.0;
    std::string limit;  // "", "nodes" or "time" when the search gave up
};

/// Bidirectional BFS over rotations; never materializes the full graph.
DistanceAttempt distance_attempt(const Graph& g, const SearchTree& from,
                                 const SearchTree& to, const SearchCaps& caps = {});

/// Exact rotation distance; throws CapExceededError when a cap is hit.
int distance(const Graph& g, const SearchTree& from, const SearchTree& to,
             const SearchCaps& caps = {});

/// Largest pairwise distance, via BFS from every node of the built graph.
int diameter(const RotationGraph& rg);
int diameter(const Graph& g, std::uint64_t max_trees = 10'000'000);

/// DOT rendering; full_labels switches node labels between the serialized
/// tree and the opaque index.
std::string to_dot(const RotationGraph& rg, bool full_labels = false);

}  // namespace elimflip

#endif
