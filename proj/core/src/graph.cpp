#include "polycon/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "nlohmann/json.hpp"

namespace polycon {

Graph::Graph(int p) : p_(p), words_((p + 63) / 64), adj_(p), bits_(p) {
    for (auto& row : bits_) row.assign(words_, 0);
}

Graph Graph::from_edges(int p, const std::vector<std::pair<int, int>>& edges) {
    Graph g(p);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    require(u >= 0 && u < p_ && v >= 0 && v < p_ && u != v, "MalformedInput",
            "bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (has_edge(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    bits_[u][v >> 6] |= 1ull << (v & 63);
    bits_[v][u >> 6] |= 1ull << (u & 63);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    return (bits_[u][v >> 6] >> (v & 63)) & 1;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < p_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < p_; ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::common_neighbor(int u, int v) const {
    for (int w = 0; w < words_; ++w) {
        if (bits_[u][w] & bits_[v][w]) return true;
    }
    return false;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<int> inv(p_, -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) inv[keep[i]] = i;
    Graph g(static_cast<int>(keep.size()));
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        for (int u : adj_[keep[i]]) {
            if (inv[u] > i) g.add_edge(i, inv[u]);
        }
    }
    return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    Graph g(p_);
    for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
    return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

Graph underlying_graph(const PlaneMap& m) {
    require(m.simple(), "MalformedInput", "underlying graph of a non-simple map");
    Graph g(m.vertex_count());
    for (Dart d : m.edge_reps()) g.add_edge(m.vertex_of(d), m.head_of(d));
    return g;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.order(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] != -1) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int u : g.neighbors(v)) {
                if (comp[u] == -1) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

bool is_connected(const Graph& g) { return g.order() <= 1 || component_count(g) == 1; }

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = color[v] ^ 1;
                    q.push(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

bool connected_avoiding(const Graph& g, int skip1, int skip2) {
    const int p = g.order();
    int start = -1;
    int expected = 0;
    for (int v = 0; v < p; ++v) {
        if (v != skip1 && v != skip2) {
            if (start == -1) start = v;
            ++expected;
        }
    }
    if (expected <= 1) return true;
    std::vector<char> seen(p, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (u == skip1 || u == skip2 || seen[u]) continue;
            seen[u] = 1;
            ++cnt;
            stack.push_back(u);
        }
    }
    return cnt == expected;
}

} // namespace

bool is_k_connected(const Graph& g, int k) {
    require(k >= 1 && k <= 3, "KTooLarge", "k-connectivity implemented for k <= 3 only");
    require(g.order() > k, "KTooLarge",
            "k-connectivity needs more than k vertices, got p = " + std::to_string(g.order()));
    if (!is_connected(g)) return false;
    if (k == 1) return true;
    for (int v = 0; v < g.order(); ++v) {
        if (!connected_avoiding(g, v, -1)) return false;
    }
    if (k == 2) return true;
    for (int v = 0; v < g.order(); ++v) {
        for (int u = v + 1; u < g.order(); ++u) {
            if (!connected_avoiding(g, v, u)) return false;
        }
    }
    return true;
}

bool is_polyhedral(const Graph& g) {
    return g.order() >= 4 && is_planar(g) && is_k_connected(g, 3);
}

bool is_maximal_planar(const Graph& g) {
    return g.order() >= 4 && g.size() == 3 * g.order() - 6 && is_planar(g);
}

GraphClass classify(const Graph& g) {
    GraphClass c;
    c.connected_components = component_count(g);
    c.bipartite = is_bipartite(g);
    c.planar = is_planar(g);
    c.max_degree = g.max_degree();
    c.maximal_planar = c.planar && g.order() >= 4 && g.size() == 3 * g.order() - 6;
    c.polyhedral = c.planar && g.order() >= 4 && is_k_connected(g, 3);
    return c;
}

namespace {

// Colour refinement: iterate hashing of sorted neighbour colours until stable.
std::vector<int> refine_colors(const Graph& g) {
    std::vector<int> color(g.order());
    for (int v = 0; v < g.order(); ++v) color[v] = g.degree(v);
    for (int round = 0; round < g.order(); ++round) {
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> classes;
        for (int v = 0; v < g.order(); ++v) {
            std::vector<int> sig;
            sig.reserve(g.degree(v));
            for (int u : g.neighbors(v)) sig.push_back(color[u]);
            std::sort(sig.begin(), sig.end());
            classes[{color[v], std::move(sig)}].push_back(v);
        }
        std::vector<int> next(g.order());
        int id = 0;
        for (const auto& [key, verts] : classes) {
            for (int v : verts) next[v] = id;
            ++id;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

bool extend_iso(const Graph& a, const Graph& b, const std::vector<int>& ca,
                const std::vector<int>& cb, std::vector<int>& map, std::vector<char>& used,
                int v) {
    if (v == a.order()) return true;
    for (int w = 0; w < b.order(); ++w) {
        if (used[w] || cb[w] != ca[v]) continue;
        bool ok = true;
        for (int u : a.neighbors(v)) {
            if (u < v && !b.has_edge(map[u], w)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            // mapped non-neighbours must stay non-neighbours
            for (int u = 0; u < v && ok; ++u) {
                if (!a.has_edge(u, v) && b.has_edge(map[u], w)) ok = false;
            }
        }
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (extend_iso(a, b, ca, cb, map, used, v + 1)) return true;
        used[w] = 0;
    }
    return false;
}

} // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (a.order() == 0) return true;
    std::vector<int> ca = refine_colors(a), cb = refine_colors(b);
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
    std::vector<int> map(a.order(), -1);
    std::vector<char> used(b.order(), 0);
    return extend_iso(a, b, ca, cb, map, used, 0);
}

std::string to_edge_json(const Graph& g) {
    nlohmann::json j;
    j["p"] = g.order();
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    nlohmann::json je = nlohmann::json::array();
    for (auto [u, v] : edges) je.push_back({u, v});
    j["edges"] = std::move(je);
    return j.dump();
}

Graph from_edge_json(const std::string& json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const std::exception& e) {
        fail("MalformedInput", std::string("bad edge-list JSON: ") + e.what());
    }
    require(j.contains("p") && j.contains("edges"), "MalformedInput",
            "edge-list JSON needs fields p and edges");
    Graph g(j["p"].get<int>());
    for (const auto& e : j["edges"]) {
        require(e.is_array() && e.size() == 2, "MalformedInput", "edge entries are pairs");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

} // namespace polycon
