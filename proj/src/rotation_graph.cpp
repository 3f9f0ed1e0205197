#include "elimflip/rotation_graph.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <unordered_map>

namespace elimflip {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s < a)
        throw std::overflow_error("count_search_trees: count exceeds 64 bits");
    return s;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a)
        throw std::overflow_error("count_search_trees: count exceeds 64 bits");
    return a * b;
}

// components of G[mask] as masks
std::vector<std::uint64_t> mask_components(const Graph& g, std::uint64_t mask) {
    std::vector<std::uint64_t> comps;
    std::uint64_t todo = mask;
    while (todo) {
        int start = std::countr_zero(todo);
        std::uint64_t comp = 0, stack = 1ULL << start;
        while (stack) {
            int u = std::countr_zero(stack);
            stack &= stack - 1;
            if (comp & (1ULL << u))
                continue;
            comp |= 1ULL << u;
            for (int w : g.neighbors(u))
                if ((mask >> w & 1) && !(comp >> w & 1))
                    stack |= 1ULL << w;
        }
        comps.push_back(comp);
        todo &= ~comp;
    }
    return comps;
}

std::uint64_t count_rec(const Graph& g, std::uint64_t mask,
                        std::unordered_map<std::uint64_t, std::uint64_t>& memo) {
    if ((mask & (mask - 1)) == 0)
        return 1;  // singleton
    auto it = memo.find(mask);
    if (it != memo.end())
        return it->second;
    std::uint64_t total = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) {
        int root = std::countr_zero(m);
        std::uint64_t ways = 1;
        for (std::uint64_t comp : mask_components(g, mask & ~(1ULL << root)))
            ways = checked_mul(ways, count_rec(g, comp, memo));
        total = checked_add(total, ways);
    }
    memo[mask] = total;
    return total;
}

// tree fragment on a vertex subset: top vertex + (child, parent) relations
struct Fragment {
    int top;
    std::vector<std::pair<int, int>> links;
};

const std::vector<Fragment>& enum_rec(
    const Graph& g, std::uint64_t mask,
    std::unordered_map<std::uint64_t, std::vector<Fragment>>& memo) {
    auto it = memo.find(mask);
    if (it != memo.end())
        return it->second;
    std::vector<Fragment> result;
    if ((mask & (mask - 1)) == 0) {
        result.push_back({std::countr_zero(mask), {}});
        return memo.emplace(mask, std::move(result)).first->second;
    }
    for (std::uint64_t m = mask; m; m &= m - 1) {
        int root = std::countr_zero(m);
        auto comps = mask_components(g, mask & ~(1ULL << root));
        std::vector<const std::vector<Fragment>*> lists;
        lists.reserve(comps.size());
        for (std::uint64_t comp : comps)
            lists.push_back(&enum_rec(g, comp, memo));
        // odometer over the component choices
        std::vector<std::size_t> idx(lists.size(), 0);
        while (true) {
            Fragment f{root, {}};
            for (std::size_t i = 0; i < lists.size(); ++i) {
                const Fragment& sub = (*lists[i])[idx[i]];
                f.links.insert(f.links.end(), sub.links.begin(), sub.links.end());
                f.links.emplace_back(sub.top, root);
            }
            result.push_back(std::move(f));
            std::size_t i = 0;
            while (i < lists.size() && ++idx[i] == lists[i]->size())
                idx[i++] = 0;
            if (i == lists.size())
                break;
        }
    }
    return memo.emplace(mask, std::move(result)).first->second;
}

std::string encode_tree(const SearchTree& t) {
    std::string key(t.parent.size(), '\0');
    for (std::size_t i = 0; i < t.parent.size(); ++i)
        key[i] = static_cast<char>(t.parent[i] + 1);
    return key;
}

SearchTree decode_tree(const std::string& key) {
    SearchTree t;
    t.parent.resize(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) {
        t.parent[i] = static_cast<int>(static_cast<unsigned char>(key[i])) - 1;
        if (t.parent[i] == -1)
            t.root = static_cast<int>(i);
    }
    return t;
}

// nibble packing for n <= 15: exact-distance searches stay allocation-light
struct Codec64 {
    using Key = std::uint64_t;
    static bool usable(int n) { return n <= 15; }
    static Key encode(const SearchTree& t) {
        Key k = 0;
        for (std::size_t i = 0; i < t.parent.size(); ++i)
            k |= static_cast<Key>(t.parent[i] + 1) << (4 * i);
        return k;
    }
    static SearchTree decode(Key k, int n) {
        SearchTree t;
        t.parent.resize(n);
        for (int i = 0; i < n; ++i) {
            t.parent[i] = static_cast<int>(k >> (4 * i) & 0xF) - 1;
            if (t.parent[i] == -1)
                t.root = i;
        }
        return t;
    }
};

struct CodecBytes {
    using Key = std::string;
    static bool usable(int n) { return n <= 254; }
    static Key encode(const SearchTree& t) { return encode_tree(t); }
    static SearchTree decode(const Key& k, int) { return decode_tree(k); }
};

template <class Codec>
DistanceAttempt bidirectional_search(const Graph& g, const SearchTree& from,
                                     const SearchTree& to, const SearchCaps& caps) {
    DistanceAttempt out;
    const int n = g.vertex_count();
    const auto start_time = Clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(Clock::now() - start_time).count();
    };

    if (from == to) {
        out.found = true;
        out.distance = 0;
        out.visited = 1;
        return out;
    }

    using Key = typename Codec::Key;
    std::unordered_map<Key, int> dist[2];
    std::vector<Key> frontier[2];
    dist[0].emplace(Codec::encode(from), 0);
    dist[1].emplace(Codec::encode(to), 0);
    frontier[0].push_back(Codec::encode(from));
    frontier[1].push_back(Codec::encode(to));
    int radius[2] = {0, 0};
    int best = -1;
    int side = 0;

    while (!frontier[0].empty() && !frontier[1].empty()) {
        if (best >= 0 && best <= radius[0] + radius[1])
            break;
        // strict alternation keeps the radii balanced, which makes the
        // stopping rule exact
        std::vector<Key> next;
        for (const Key& key : frontier[side]) {
            SearchTree t = Codec::decode(key, n);
            for (int v = 0; v < n; ++v) {
                if (v == t.root)
                    continue;
                SearchTree r = t;
                detail::rotate_in_place(g, r, t.parent[v], v);
                Key rk = Codec::encode(r);
                if (dist[side].emplace(rk, radius[side] + 1).second) {
                    auto hit = dist[1 - side].find(rk);
                    if (hit != dist[1 - side].end()) {
                        int cand = radius[side] + 1 + hit->second;
                        if (best < 0 || cand < best)
                            best = cand;
                    }
                    next.push_back(std::move(rk));
                }
            }
            out.visited = dist[0].size() + dist[1].size();
            if (out.visited > caps.max_nodes) {
                out.limit = "nodes";
                out.seconds = elapsed();
                return out;
            }
            if (caps.max_seconds > 0 && elapsed() > caps.max_seconds) {
                out.limit = "time";
                out.seconds = elapsed();
                return out;
            }
        }
        frontier[side] = std::move(next);
        ++radius[side];
        side = 1 - side;
    }
    out.visited = dist[0].size() + dist[1].size();
    out.seconds = elapsed();
    if (best >= 0) {
        out.found = true;
        out.distance = best;
    }
    return out;
}

}  // namespace

std::uint64_t count_search_trees(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || n > 64)
        throw std::invalid_argument("count_search_trees: supported for 1 <= n <= 64");
    if (!is_connected(g))
        throw std::invalid_argument("count_search_trees: graph not connected");
    std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    std::unordered_map<std::uint64_t, std::uint64_t> memo;
    return count_rec(g, full, memo);
}

std::vector<SearchTree> enumerate_search_trees(const Graph& g, std::uint64_t max_trees) {
    const int n = g.vertex_count();
    std::uint64_t total = count_search_trees(g);
    if (total > max_trees)
        throw CapExceededError("enumerate_search_trees: " + std::to_string(total) +
                                   " search trees exceed cap " + std::to_string(max_trees),
                               total);
    std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    std::unordered_map<std::uint64_t, std::vector<Fragment>> memo;
    const auto& fragments = enum_rec(g, full, memo);
    std::vector<SearchTree> trees;
    trees.reserve(fragments.size());
    for (const auto& f : fragments) {
        SearchTree t;
        t.root = f.top;
        t.parent.assign(n, -1);
        for (auto [child, parent] : f.links)
            t.parent[child] = parent;
        trees.push_back(std::move(t));
    }
    std::sort(trees.begin(), trees.end(), [](const SearchTree& a, const SearchTree& b) {
        return encode_tree(a) < encode_tree(b);
    });
    return trees;
}

RotationGraph build_rotation_graph(const Graph& g, std::uint64_t max_trees) {
    RotationGraph rg;
    rg.nodes = enumerate_search_trees(g, max_trees);
    std::unordered_map<std::string, int> index;
    index.reserve(rg.nodes.size());
    for (std::size_t i = 0; i < rg.nodes.size(); ++i)
        index.emplace(encode_tree(rg.nodes[i]), static_cast<int>(i));
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> found;
    for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
        const SearchTree& t = rg.nodes[i];
        for (int v = 0; v < n; ++v) {
            if (v == t.root)
                continue;
            SearchTree r = t;
            detail::rotate_in_place(g, r, t.parent[v], v);
            auto it = index.find(encode_tree(r));
            if (it == index.end())
                throw std::logic_error("build_rotation_graph: rotation left the node set");
            int j = it->second;
            found.emplace_back(std::min<int>(static_cast<int>(i), j),
                               std::max<int>(static_cast<int>(i), j));
        }
    }
    std::sort(found.begin(), found.end());
    rg.edges = found;
    rg.edges.erase(std::unique(rg.edges.begin(), rg.edges.end()), rg.edges.end());
    if (found.size() != 2 * rg.edges.size())
        throw std::logic_error("build_rotation_graph: rotation adjacency not symmetric");
    return rg;
}

DistanceAttempt distance_attempt(const Graph& g, const SearchTree& from,
                                 const SearchTree& to, const SearchCaps& caps) {
    if (!validate(g, from) || !validate(g, to))
        throw std::invalid_argument("distance: input is not a valid search tree");
    if (Codec64::usable(g.vertex_count()))
        return bidirectional_search<Codec64>(g, from, to, caps);
    if (!CodecBytes::usable(g.vertex_count()))
        throw std::invalid_argument("distance: graph too large");
    return bidirectional_search<CodecBytes>(g, from, to, caps);
}

int distance(const Graph& g, const SearchTree& from, const SearchTree& to,
             const SearchCaps& caps) {
    DistanceAttempt a = distance_attempt(g, from, to, caps);
    if (!a.found)
        throw CapExceededError("distance: " + a.limit + " cap exceeded after visiting " +
                                   std::to_string(a.visited) + " trees",
                               a.visited);
    return a.distance;
}

int diameter(const RotationGraph& rg) {
    const int count = static_cast<int>(rg.nodes.size());
    std::vector<std::vector<int>> adj(count);
    for (auto [a, b] : rg.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    int best = 0;
    std::vector<int> dist(count);
    std::vector<int> queue;
    for (int s = 0; s < count; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            best = std::max(best, dist[u]);
            for (int w : adj[u])
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        if (static_cast<int>(queue.size()) != count)
            throw std::logic_error("diameter: rotation graph is disconnected");
    }
    return best;
}

int diameter(const Graph& g, std::uint64_t max_trees) {
    return diameter(build_rotation_graph(g, max_trees));
}

std::string to_dot(const RotationGraph& rg, bool full_labels) {
    std::string dot = "graph rotation_graph {\n";
    for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
        dot += "  N" + std::to_string(i) + " [label=\"";
        if (full_labels) {
            const SearchTree& t = rg.nodes[i];
            dot += "r=" + std::to_string(t.root) + " p=[";
            for (std::size_t v = 0; v < t.parent.size(); ++v) {
                if (v)
                    dot += ",";
                dot += std::to_string(t.parent[v]);
            }
            dot += "]";
        } else {
            dot += std::to_string(i);
        }
        dot += "\"];\n";
    }
    for (auto [a, b] : rg.edges)
        dot += "  N" + std::to_string(a) + " -- N" + std::to_string(b) + ";\n";
    dot += "}\n";
    return dot;
}

}  // namespace elimflip
