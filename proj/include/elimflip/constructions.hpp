#ifndef ELIMFLIP_CONSTRUCTIONS_HPP
#define ELIMFLIP_CONSTRUCTIONS_HPP

#include <vector>

#include "elimflip/graph.hpp"
#include "elimflip/rotation.hpp"
#include "elimflip/search_tree.hpp"

namespace elimflip {

/// Bit-reversal permutation of parameter k: the recursive interleaving
/// sigma_1 = (0), sigma_k = 2*sigma_{k-1} ++ (2*sigma_{k-1} + 1).
/// Equivalently, entry i is i with its (k-1)-bit representation reversed.
/// Length 2^(k-1). Throws for k < 1 or k > 24.
std::vector<int> bit_reversal(int k);

/// The hard instance of parameter k: a complete binary tree on n = 2^k - 1
/// vertices. Leaves carry ids 0..l-1 left to right (l = 2^(k-1)); internal
/// vertices carry ids l..n-1 in breadth-first order from the degree-two
/// root r (so r = l). side_a is the vertex set of the subtree holding
/// leaves 0..l/2-1, side_b the other; both are empty for k = 1.
struct GkSpec {
    int k = 1;
    Graph graph;
    int root = 0;
    std::vector<int> side_a;
    std::vector<int> side_b;
    std::vector<int> leaves;
};

GkSpec build_gk(int k);

/// The search tree isomorphic to G_k itself: root r, then each component
/// recursively rooted at its degree-two vertex.
SearchTree build_tk(const GkSpec& spec);

/// The far-away search tree: a chain of all leaves in bit-reversal order
/// starting at leaf 0, whose last leaf attaches to the internal part of
/// T_k (rooted at r, same shape as in T_k).
SearchTree build_tk_prime(const GkSpec& spec);

/// Largest number of side-crossing edges (one endpoint in side_a, the
/// other in side_b) on any root-to-leaf path of t. Edges touching r
/// cross nothing, as r belongs to neither side.
int alternation_number(const GkSpec& spec, const SearchTree& t);

/// Where a rotation's endpoints live relative to the two sides of G_k.
/// R covers rotations touching the root r itself.
enum class RotationClass { AA, BB, AB, R };

RotationClass classify_rotation(const GkSpec& spec, const Rotation& rot);

const char* to_string(RotationClass c);

/// The certified rotation-distance lower bound between T_k and T'_k:
/// f(1) = 0, f(k) = 2 f(k-1) + 2^(k-2), taken with equality. Makes no
/// tightness claim.
long long lower_bound_f(int k);

/// A vertex whose removal leaves components of size at most n/2 each
/// (one always exists in a tree); ties broken by smallest id.
int centroid(const Graph& g);

/// Canonical low search tree on a tree g: centroid as root, recurse on
/// the removal components. Height is at most ceil(log2(n+1)) vertices.
SearchTree centroid_decomposition_tree(const Graph& g);

/// Rotations (parent(v), v) repeated until v is the root; length equals
/// the depth of v in t.
RotationSequence rotate_to_root(const Graph& g, const SearchTree& t, int v);

/// Sequence carrying t to centroid_decomposition_tree(g): rotate the
/// centroid up, then recurse on the component subtrees. Length at most
/// n * ceil(log2(n+1)).
RotationSequence centroid_transform(const Graph& g, const SearchTree& t);

/// Sequence carrying t1 to t2 through the centroid decomposition:
/// centroid_transform(t1) followed by the inverse of centroid_transform(t2).
/// Length at most 2 * n * ceil(log2(n+1)).
RotationSequence transform(const Graph& g, const SearchTree& t1, const SearchTree& t2);

}  // namespace elimflip

#endif
