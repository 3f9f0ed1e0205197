#include "elimflip/json_io.hpp"

#include <stdexcept>
#include <string>

namespace elimflip {

namespace {

int as_int(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::pair<int, int> as_pair(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument(std::string(what) + " must be a pair");
    return {as_int(j[0], what), as_int(j[1], what)};
}

}  // namespace

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edge_list())
        edges.push_back({u, v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph: expected {\"n\": ..., \"edges\": ...}");
    int n = as_int(j["n"], "graph n");
    if (n < 0)
        throw std::invalid_argument("graph: n must be nonnegative");
    if (!j["edges"].is_array())
        throw std::invalid_argument("graph: edges must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"])
        edges.push_back(as_pair(e, "graph edge"));
    return Graph(n, edges);
}

nlohmann::json tree_to_json(const SearchTree& t) {
    nlohmann::json parent = nlohmann::json::object();
    for (int v = 0; v < t.vertex_count(); ++v)
        parent[std::to_string(v)] = t.parent[v];
    return {{"root", t.root}, {"parent", parent}};
}

SearchTree tree_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("root") || !j.contains("parent"))
        throw std::invalid_argument("tree: expected {\"root\": ..., \"parent\": ...}");
    const auto& pmap = j["parent"];
    if (!pmap.is_object())
        throw std::invalid_argument("tree: parent must be an object");
    SearchTree t;
    t.root = as_int(j["root"], "tree root");
    const int n = static_cast<int>(pmap.size());
    t.parent.assign(n, -2);
    for (const auto& [key, value] : pmap.items()) {
        int v;
        try {
            std::size_t pos = 0;
            v = std::stoi(key, &pos);
            // canonical decimal only: no sign, no leading zeros, no suffix
            if (pos != key.size() || key != std::to_string(v))
                throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw std::invalid_argument("tree: parent key '" + key + "' is not a vertex id");
        }
        if (v < 0 || v >= n)
            throw std::invalid_argument("tree: parent keys must cover 0.." +
                                        std::to_string(n - 1) + " exactly");
        t.parent[v] = as_int(value, "tree parent value");
    }
    for (int v = 0; v < n; ++v)
        if (t.parent[v] == -2)
            throw std::invalid_argument("tree: missing parent entry for vertex " +
                                        std::to_string(v));
    if (n == 0 || t.root < 0 || t.root >= n)
        throw std::invalid_argument("tree: root out of range");
    return t;
}

nlohmann::json tubing_to_json(const Tubing& tb) {
    Tubing canon = tb;
    canon.canonicalize();
    nlohmann::json out = nlohmann::json::array();
    for (const auto& tube : canon.tubes)
        out.push_back(tube);
    return out;
}

Tubing tubing_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw std::invalid_argument("tubing: expected an array of vertex lists");
    Tubing tb;
    for (const auto& tube : j) {
        if (!tube.is_array())
            throw std::invalid_argument("tubing: each tube must be an array");
        std::vector<int> t;
        for (const auto& v : tube)
            t.push_back(as_int(v, "tube vertex"));
        tb.tubes.push_back(std::move(t));
    }
    tb.canonicalize();
    return tb;
}

nlohmann::json sequence_to_json(const RotationSequence& seq) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : seq)
        out.push_back({r.parent, r.child});
    return out;
}

RotationSequence sequence_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw std::invalid_argument("sequence: expected an array of pairs");
    RotationSequence seq;
    for (const auto& e : j) {
        auto [u, v] = as_pair(e, "rotation");
        seq.push_back({u, v});
    }
    return seq;
}

std::vector<int> vertex_set_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw std::invalid_argument("vertex set: expected an array of ids");
    std::vector<int> s;
    for (const auto& v : j)
        s.push_back(as_int(v, "vertex id"));
    return s;
}

}  // namespace elimflip
