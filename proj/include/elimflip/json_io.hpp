#ifndef ELIMFLIP_JSON_IO_HPP
#define ELIMFLIP_JSON_IO_HPP

#include <vector>

#include <json.hpp>

#include "elimflip/graph.hpp"
#include "elimflip/rotation.hpp"
#include "elimflip/search_tree.hpp"

namespace elimflip {

// Interchange formats:
//   Graph            {"n": int, "edges": [[u,v], ...]}   edges sorted
//   SearchTree       {"root": int, "parent": {"0": p0, "1": p1, ...}}
//                    one entry per vertex, the root mapping to -1
//   Tubing           sorted list of sorted vertex lists
//   RotationSequence [[u,v], ...]
// The from_json functions throw std::invalid_argument on shape violations;
// structural validity against a graph is checked separately by validate().

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json tree_to_json(const SearchTree& t);
SearchTree tree_from_json(const nlohmann::json& j);

nlohmann::json tubing_to_json(const Tubing& tb);
Tubing tubing_from_json(const nlohmann::json& j);

nlohmann::json sequence_to_json(const RotationSequence& seq);
RotationSequence sequence_from_json(const nlohmann::json& j);

/// Plain array of distinct vertex ids, e.g. a projection subset.
std::vector<int> vertex_set_from_json(const nlohmann::json& j);

}  // namespace elimflip

#endif
