#include "polycon/operators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace polycon {

Graph con(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.common_neighbor(u, v)) out.add_edge(u, v);
        }
    }
    return out;
}

namespace {

void check_two_connected(const PlaneMap& m, const char* who) {
    require(m.simple(), "NotTwoConnected", std::string(who) + " requires a simple map");
    const Graph g = underlying_graph(m);
    require(g.order() >= 3 && is_k_connected(g, 2), "NotTwoConnected",
            std::string(who) + " requires a 2-connected map");
}

} // namespace

Graph facecon(const PlaneMap& m) {
    check_two_connected(m, "facecon");
    Graph out(m.vertex_count());
    for (const auto& walk : m.faces()) {
        const int len = static_cast<int>(walk.size());
        for (int i = 0; i < len; ++i) {
            const int u = walk[i], v = walk[(i + 2) % len];
            if (u != v) out.add_edge(u, v);
        }
    }
    return out;
}

std::pair<Graph, OddDualClass> odd_dual(const PlaneMap& m) {
    OddDualClass cls;
    for (int f = 0; f < m.face_count(); ++f) {
        if (m.face_length(f) % 2 == 1) cls.odd_face_ids.push_back(f);
    }
    std::vector<int> index(m.face_count(), -1);
    for (size_t i = 0; i < cls.odd_face_ids.size(); ++i) index[cls.odd_face_ids[i]] = static_cast<int>(i);

    Graph g(static_cast<int>(cls.odd_face_ids.size()));
    for (Dart d : m.edge_reps()) {
        const int f1 = m.face_of(d), f2 = m.face_of(m.twin(d));
        if (f1 != f2 && index[f1] != -1 && index[f2] != -1 && !g.has_edge(index[f1], index[f2])) {
            g.add_edge(index[f1], index[f2]);
        }
    }

    const int k = g.order();
    if (k == 0) {
        cls.tag = OddDualTag::Empty;
    } else if (k == 2) {
        cls.tag = g.size() == 1 ? OddDualTag::K2 : OddDualTag::K2Bar;
    } else if (k == 4 && g.size() == 6) {
        cls.tag = OddDualTag::K4;
    } else {
        cls.tag = OddDualTag::Other;
    }
    return {std::move(g), std::move(cls)};
}

const char* odd_dual_tag_name(OddDualTag t) {
    switch (t) {
        case OddDualTag::Empty: return "EMPTY";
        case OddDualTag::K2Bar: return "K2BAR";
        case OddDualTag::K2: return "K2";
        case OddDualTag::K4: return "K4";
        case OddDualTag::Other: return "OTHER";
    }
    return "?";
}

bool predict_con_planar(const PlaneMap& m) {
    const Graph g = underlying_graph(m);
    require(is_polyhedral(g), "NotPolyhedral", "predictor applies to polyhedra only");
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 3) return false;
    }
    if (is_bipartite(g)) return true;
    const auto tag = odd_dual(m).second.tag;
    return tag == OddDualTag::K2Bar || tag == OddDualTag::K4;
}

namespace {

// Perfect pairings of `items` in lexicographic order of sorted pairs: always
// pair the smallest unpaired element with each remaining one in turn.
void enumerate_pairings(std::vector<int>& items, std::vector<std::pair<int, int>>& cur,
                        std::vector<std::vector<std::pair<int, int>>>& out) {
    if (items.empty()) {
        out.push_back(cur);
        return;
    }
    const int head = items.front();
    for (size_t j = 1; j < items.size(); ++j) {
        const int mate = items[j];
        std::vector<int> rest;
        for (size_t k = 1; k < items.size(); ++k) {
            if (k != j) rest.push_back(items[k]);
        }
        cur.push_back({head, mate});
        enumerate_pairings(rest, cur, out);
        cur.pop_back();
    }
}

std::vector<int> dual_bfs_dist(const Graph& dual_g, int src) {
    std::vector<int> dist(dual_g.order(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int u : dual_g.neighbors(v)) {
            if (dist[u] == -1) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
        }
    }
    return dist;
}

// Shortest dual path src -> dst; ties broken by smallest face id (neighbours
// are explored in increasing order and parents fixed at first discovery).
std::vector<int> dual_bfs_path(const Graph& dual_g, int src, int dst) {
    std::vector<int> parent(dual_g.order(), -2);
    std::queue<int> q;
    parent[src] = -1;
    q.push(src);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        if (v == dst) break;
        for (int u : dual_g.neighbors(v)) {
            if (parent[u] == -2) {
                parent[u] = v;
                q.push(u);
            }
        }
    }
    std::vector<int> path;
    for (int v = dst; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

PlaneMap evenise(const PlaneMap& m) {
    const Graph g = underlying_graph(m);
    require(is_polyhedral(g), "NotPolyhedral", "evenisation applies to polyhedra");
    for (int v = 0; v < g.order(); ++v) {
        require(g.degree(v) == 3, "NotCubic", "evenisation applies to 3-regular polyhedra");
    }
    if (is_bipartite(g)) return m;

    std::vector<int> odd;
    for (int f = 0; f < m.face_count(); ++f) {
        if (m.face_length(f) % 2 == 1) odd.push_back(f);
    }

    // Dual adjacency and the shared edge of each adjacent face pair.
    Graph dual_g(m.face_count());
    std::map<std::pair<int, int>, Dart> shared;
    for (Dart d : m.edge_reps()) {
        int f1 = m.face_of(d), f2 = m.face_of(m.twin(d));
        if (f1 == f2) continue;
        if (f1 > f2) std::swap(f1, f2);
        if (!dual_g.has_edge(f1, f2)) {
            dual_g.add_edge(f1, f2);
            shared[{f1, f2}] = d;
        }
    }

    std::vector<std::vector<int>> dist;
    for (int f : odd) dist.push_back(dual_bfs_dist(dual_g, f));
    std::vector<int> odd_index(m.face_count(), -1);
    for (size_t i = 0; i < odd.size(); ++i) odd_index[odd[i]] = static_cast<int>(i);

    std::vector<std::vector<std::pair<int, int>>> pairings;
    std::vector<std::pair<int, int>> cur;
    enumerate_pairings(odd, cur, pairings);

    int best_total = -1;
    for (const auto& pairing : pairings) {
        int total = 0;
        for (auto [a, b] : pairing) total += dist[odd_index[a]][b];
        if (best_total == -1 || total < best_total) best_total = total;
    }

    for (const auto& pairing : pairings) {
        int total = 0;
        for (auto [a, b] : pairing) total += dist[odd_index[a]][b];
        if (total != best_total) continue;

        std::set<Dart> to_delete;
        std::set<std::pair<int, int>> dual_edges_used;
        bool ok = true;
        for (auto [a, b] : pairing) {
            const auto path = dual_bfs_path(dual_g, a, b);
            for (size_t i = 0; ok && i + 1 < path.size(); ++i) {
                auto fe = std::minmax(path[i], path[i + 1]);
                if (!dual_edges_used.insert({fe.first, fe.second}).second) ok = false;
                to_delete.insert(shared.at({fe.first, fe.second}));
            }
        }
        if (!ok) continue;

        // The union of the chosen dual paths must be acyclic.
        {
            std::vector<int> uf(m.face_count());
            std::iota(uf.begin(), uf.end(), 0);
            std::function<int(int)> find = [&](int x) {
                return uf[x] == x ? x : uf[x] = find(uf[x]);
            };
            for (auto [x, y] : dual_edges_used) {
                const int rx = find(x), ry = find(y);
                if (rx == ry) {
                    ok = false;
                    break;
                }
                uf[rx] = ry;
            }
        }
        if (!ok) continue;

        PlaneMap result;
        try {
            result = m.delete_edges(to_delete);
        } catch (const Error&) {
            continue;
        }
        const Graph rg = underlying_graph(result);
        if (rg.order() == m.vertex_count() && is_bipartite(rg) && rg.order() >= 3 &&
            is_k_connected(rg, 2)) {
            return result;
        }
    }
    fail("EveniseFailed", "no minimal pairing yields a bipartite 2-connected spanning subgraph");
}

PlaneMap radial(const PlaneMap& m) {
    check_two_connected(m, "radial");
    const int n = m.vertex_count();
    std::vector<std::vector<int>> rot(n + m.face_count());
    for (int v = 0; v < n; ++v) {
        const Dart d0 = m.first_dart(v);
        Dart d = d0;
        do {
            rot[v].push_back(n + m.face_of(d));
            d = m.rot(d);
        } while (d != d0);
    }
    for (int f = 0; f < m.face_count(); ++f) {
        auto walk = m.face_walk(f);
        std::reverse(walk.begin(), walk.end());
        rot[n + f] = std::move(walk);
    }
    return PlaneMap::from_rotation(rot);
}

PlaneMap medial(const PlaneMap& m) {
    check_two_connected(m, "medial");
    const auto reps = m.edge_reps();
    std::vector<int> edge_index(m.dart_count(), -1);
    for (size_t i = 0; i < reps.size(); ++i) edge_index[reps[i]] = static_cast<int>(i);
    auto eidx = [&](Dart d) { return edge_index[m.edge_id(d)]; };

    // Medial darts: 2 per primal dart. out(d) = 2d leaves the medial vertex
    // of edge(d) across the corner (d, rot d); in(d) = 2d+1 is its twin.
    const int D = m.dart_count();
    std::vector<Dart> twin(2 * D), rot(2 * D);
    std::vector<int> vertex_of(2 * D);
    for (Dart d = 0; d < D; ++d) {
        twin[2 * d] = 2 * d + 1;
        twin[2 * d + 1] = 2 * d;
        vertex_of[2 * d] = eidx(d);
        vertex_of[2 * d + 1] = eidx(m.rot(d));
        rot[2 * d] = 2 * m.rot_prev(d) + 1;
        rot[2 * d + 1] = 2 * m.twin(m.rot(d));
    }
    return PlaneMap::from_darts(std::move(twin), std::move(rot), std::move(vertex_of),
                                static_cast<int>(reps.size()));
}

} // namespace polycon
