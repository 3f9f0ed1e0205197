#ifndef ELIMFLIP_PROJECTION_HPP
#define ELIMFLIP_PROJECTION_HPP

#include <span>
#include <vector>

#include "elimflip/graph.hpp"
#include "elimflip/rotation.hpp"
#include "elimflip/search_tree.hpp"

namespace elimflip {

/// Remove a degree-one vertex of a tree host from a search tree: delete it
/// when it has no child, contract its two incident tree edges when it has
/// one, promote its unique child when it is the root. The result lives on
/// induced_subgraph(g, V minus {x}): ids above x shift down by one.
SearchTree prune_leaf(const Graph& g, const SearchTree& t, int x);

/// Iteratively prune host leaves outside s (smallest id first) until only
/// s remains. Result lives on induced_subgraph(g, s); vertex i of the
/// result is the i-th smallest element of s.
SearchTree project_tree(const Graph& g, const SearchTree& t, std::span<const int> s);

/// Same projection computed from the connected components of the tree
/// restricted to the complement of s: a component seen by two outside
/// vertices contracts to an edge, one seen by a single vertex is deleted
/// (promoting that vertex to root when the component held it).
SearchTree project_tree_direct(const Graph& g, const SearchTree& t,
                               std::span<const int> s);

/// Keep only rotations with both endpoints in s. Purely syntactic; ids are
/// unchanged.
RotationSequence project_sequence(const RotationSequence& seq, std::span<const int> s);

/// Rewrite a sequence on original ids into the dense ids of
/// induced_subgraph(g, s). All endpoints must lie in s.
RotationSequence relabel_sequence(const RotationSequence& seq, std::span<const int> s);

struct ReplayStats {
    int applied = 0;
    int skipped = 0;
};

/// Replay a projected sequence on a projected tree: a step whose second
/// vertex is not currently a child of its first is skipped instead of
/// raising, since projecting a rotation can degenerate it to the identity.
SearchTree apply_projected_sequence(const Graph& sub, SearchTree t,
                                    const RotationSequence& local_seq,
                                    ReplayStats* stats = nullptr);

}  // namespace elimflip

#endif
