#ifndef ELIMFLIP_ROTATION_HPP
#define ELIMFLIP_ROTATION_HPP

#include <vector>

#include "elimflip/graph.hpp"
#include "elimflip/search_tree.hpp"

namespace elimflip {

/// Rotation instruction: child must be a child of parent in the tree the
/// rotation is applied to.
struct Rotation {
    int parent = -1;
    int child = -1;

    friend bool operator==(const Rotation&, const Rotation&) = default;
    friend auto operator<=>(const Rotation&, const Rotation&) = default;
};

using RotationSequence = std::vector<Rotation>;

/// One rotation per tree edge, parent first, sorted by (parent, child).
/// Throws if t is not a valid search tree on g.
std::vector<Rotation> rotatable_pairs(const Graph& g, const SearchTree& t);

/// The rotation on (u,v): v takes u's place (child of u's parent, or root),
/// u becomes a child of v, and each former subtree S of v moves under u
/// iff u has a g-neighbor in S. Throws if v is not a child of u.
SearchTree rotate(const Graph& g, const SearchTree& t, int u, int v);

/// Left fold of rotate; throws identifying the index of the first
/// inapplicable step.
SearchTree apply_sequence(const Graph& g, SearchTree t, const RotationSequence& seq);

/// Reverse the sequence and swap each pair; applying seq then its inverse
/// is the identity.
RotationSequence invert_sequence(const RotationSequence& seq);

/// Size of the symmetric difference of the two trees' tubings.
int tubing_difference(const Graph& g, const SearchTree& a, const SearchTree& b);

namespace detail {
/// Unchecked in-place rotation; v must be a child of u. Enumeration, BFS
/// and replay loops call this once per edge.
void rotate_in_place(const Graph& g, SearchTree& t, int u, int v);
}  // namespace detail

}  // namespace elimflip

#endif
