#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>

#include "polycon/graph.hpp"

// Planarity by incremental face embedding (Demoucron-Malgrange-Pertuiset):
// start from a cycle of the block, repeatedly compute the bridges of the
// embedded subgraph, and draw a path of some bridge whose attachments all lie
// on one face into that face. A bridge with no admissible face certifies
// non-planarity. Blocks are embedded independently and merged at cut
// vertices, so the witness covers the whole connected graph.

namespace polycon {

namespace {

struct Dmp {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> rot; // rotation lists of the embedded subgraph
    std::vector<char> in_h;
    std::vector<std::vector<char>> drawn; // embedded adjacency

    explicit Dmp(const Graph& graph)
        : g(graph), n(graph.order()), rot(n), in_h(n, 0),
          drawn(n, std::vector<char>(n, 0)) {}

    void mark(int u, int v) { drawn[u][v] = drawn[v][u] = 1; }

    struct DartRef {
        int v;
        int i;
    };

    DartRef face_next(const DartRef& d) const {
        const int u = rot[d.v][d.i];
        int j = 0;
        while (rot[u][j] != d.v) ++j;
        return {u, static_cast<int>((j + 1) % rot[u].size())};
    }

    // All faces of the current embedding, as dart lists.
    std::vector<std::vector<DartRef>> trace_faces() const {
        std::vector<std::vector<DartRef>> out;
        std::vector<std::vector<char>> seen(n);
        for (int v = 0; v < n; ++v) seen[v].assign(rot[v].size(), 0);
        for (int v = 0; v < n; ++v) {
            for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
                if (seen[v][i]) continue;
                std::vector<DartRef> walk;
                DartRef d{v, i};
                while (!seen[d.v][d.i]) {
                    seen[d.v][d.i] = 1;
                    walk.push_back(d);
                    d = face_next(d);
                }
                out.push_back(std::move(walk));
            }
        }
        return out;
    }

    // Insert the path p (p.front() and p.back() embedded, interior fresh)
    // into the face given by its dart list.
    void embed_path(const std::vector<int>& p, const std::vector<DartRef>& face) {
        const int a = p.front(), b = p.back();
        int ia = -1, ib = -1;
        for (const auto& d : face) {
            if (d.v == a) ia = d.i;
            if (d.v == b) ib = d.i;
        }
        rot[a].insert(rot[a].begin() + ia, p[1]);
        rot[b].insert(rot[b].begin() + ib, p[p.size() - 2]);
        for (size_t k = 1; k + 1 < p.size(); ++k) {
            rot[p[k]] = {p[k - 1], p[k + 1]};
            in_h[p[k]] = 1;
        }
        for (size_t k = 0; k + 1 < p.size(); ++k) mark(p[k], p[k + 1]);
    }

    bool run(const std::vector<int>& cycle) {
        for (size_t i = 0; i < cycle.size(); ++i) {
            const int v = cycle[i];
            const int prev = cycle[(i + cycle.size() - 1) % cycle.size()];
            const int next = cycle[(i + 1) % cycle.size()];
            rot[v] = {prev, next};
            in_h[v] = 1;
            mark(v, next);
        }

        while (true) {
            // Bridges: chords between embedded vertices, and components of
            // the rest with their attachment sets.
            struct Bridge {
                std::vector<int> attachments;
                std::vector<int> inner; // empty for a chord
                int chord_u = -1, chord_v = -1;
            };
            std::vector<Bridge> bridges;
            for (int u = 0; u < n; ++u) {
                if (!in_h[u]) continue;
                for (int v : g.neighbors(u)) {
                    if (v > u && in_h[v] && !drawn[u][v]) {
                        Bridge br;
                        br.attachments = {u, v};
                        br.chord_u = u;
                        br.chord_v = v;
                        bridges.push_back(std::move(br));
                    }
                }
            }
            std::vector<int> comp(n, -1);
            for (int s = 0; s < n; ++s) {
                if (in_h[s] || comp[s] != -1) continue;
                Bridge br;
                std::vector<int> stack{s};
                comp[s] = 1;
                std::set<int> att;
                while (!stack.empty()) {
                    const int v = stack.back();
                    stack.pop_back();
                    br.inner.push_back(v);
                    for (int u : g.neighbors(v)) {
                        if (in_h[u]) {
                            att.insert(u);
                        } else if (comp[u] == -1) {
                            comp[u] = 1;
                            stack.push_back(u);
                        }
                    }
                }
                br.attachments.assign(att.begin(), att.end());
                bridges.push_back(std::move(br));
            }
            if (bridges.empty()) return true;

            auto faces = trace_faces();
            std::vector<std::set<int>> face_verts(faces.size());
            for (size_t f = 0; f < faces.size(); ++f) {
                for (const auto& d : faces[f]) face_verts[f].insert(d.v);
            }

            int best = -1, best_count = -1, best_face = -1;
            for (size_t bi = 0; bi < bridges.size(); ++bi) {
                int count = 0, first = -1;
                for (size_t f = 0; f < faces.size(); ++f) {
                    bool ok = true;
                    for (int a : bridges[bi].attachments) {
                        if (!face_verts[f].count(a)) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        ++count;
                        if (first == -1) first = static_cast<int>(f);
                    }
                }
                if (count == 0) return false;
                if (best == -1 || count < best_count) {
                    best = static_cast<int>(bi);
                    best_count = count;
                    best_face = first;
                    if (count == 1) break;
                }
            }

            const Bridge& br = bridges[best];
            std::vector<int> path;
            if (br.inner.empty()) {
                path = {br.chord_u, br.chord_v};
            } else {
                // BFS through the bridge interior from one attachment to another.
                const int a = br.attachments.front();
                std::vector<int> parent(n, -2);
                std::vector<int> queue;
                for (int v : g.neighbors(a)) {
                    if (!in_h[v] && comp[v] != -1 &&
                        std::find(br.inner.begin(), br.inner.end(), v) != br.inner.end()) {
                        parent[v] = -1;
                        queue.push_back(v);
                    }
                }
                int hit = -1, hit_att = -1;
                for (size_t qi = 0; qi < queue.size() && hit == -1; ++qi) {
                    const int v = queue[qi];
                    for (int u : g.neighbors(v)) {
                        if (in_h[u] && u != a) {
                            hit = v;
                            hit_att = u;
                            break;
                        }
                        if (!in_h[u] && parent[u] == -2 &&
                            std::find(br.inner.begin(), br.inner.end(), u) != br.inner.end()) {
                            parent[u] = v;
                            queue.push_back(u);
                        }
                    }
                }
                require(hit != -1, "NotSpherical", "bridge with a single attachment");
                path.push_back(hit_att);
                for (int v = hit; v != -1; v = parent[v]) path.push_back(v);
                path.push_back(a);
            }
            embed_path(path, faces[best_face]);
        }
    }
};

std::vector<int> find_cycle(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> parent(g.order(), -2);
    const int root = verts.front();
    parent[root] = -1;
    std::vector<int> stack{root};
    std::vector<int> order;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : g.neighbors(v)) {
            if (parent[u] == -2) {
                parent[u] = v;
                stack.push_back(u);
            } else if (u != parent[v]) {
                // close the cycle through the DFS-tree paths of v and u
                std::vector<int> pv, pu;
                for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                std::reverse(pv.begin(), pv.end());
                std::reverse(pu.begin(), pu.end());
                size_t k = 0;
                while (k + 1 < pv.size() && k + 1 < pu.size() && pv[k + 1] == pu[k + 1]) ++k;
                std::vector<int> cycle(pv.begin() + k, pv.end());
                for (size_t i = pu.size(); i-- > k + 1;) cycle.push_back(pu[i]);
                return cycle;
            }
        }
    }
    return {};
}

// Biconnected components as edge lists (Hopcroft-Tarjan).
std::vector<std::vector<std::pair<int, int>>> blocks_of(const Graph& g) {
    const int n = g.order();
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<std::pair<int, int>>> out;
    int counter = 0;

    struct Frame {
        int v;
        size_t i;
    };
    for (int s = 0; s < n; ++s) {
        if (num[s] != -1) continue;
        std::vector<Frame> rec{{s, 0}};
        num[s] = low[s] = counter++;
        while (!rec.empty()) {
            auto& [v, i] = rec.back();
            if (i < g.neighbors(v).size()) {
                const int u = g.neighbors(v)[i++];
                if (num[u] == -1) {
                    stack.push_back({v, u});
                    parent[u] = v;
                    num[u] = low[u] = counter++;
                    rec.push_back({u, 0});
                } else if (u != parent[v] && num[u] < num[v]) {
                    stack.push_back({v, u});
                    low[v] = std::min(low[v], num[u]);
                }
            } else {
                rec.pop_back();
                if (!rec.empty()) {
                    const int p = rec.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) {
                        out.emplace_back();
                        while (true) {
                            auto e = stack.back();
                            stack.pop_back();
                            out.back().push_back(e);
                            if (e.first == p && e.second == v) break;
                        }
                    }
                }
            }
        }
    }
    return out;
}

bool embed_block(const Graph& g, const std::vector<std::pair<int, int>>& block_edges,
                 std::vector<std::vector<int>>* rot_accum) {
    std::set<int> vset;
    for (auto [u, v] : block_edges) {
        vset.insert(u);
        vset.insert(v);
    }
    std::vector<int> verts(vset.begin(), vset.end());
    std::vector<int> local(g.order(), -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);

    if (block_edges.size() == 1) {
        if (rot_accum) {
            auto [u, v] = block_edges.front();
            (*rot_accum)[u].push_back(v);
            (*rot_accum)[v].push_back(u);
        }
        return true;
    }

    Graph b(static_cast<int>(verts.size()));
    for (auto [u, v] : block_edges) b.add_edge(local[u], local[v]);
    if (b.order() >= 3 && b.size() > 3 * b.order() - 6) return false;

    std::vector<int> all(b.order());
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> cycle = find_cycle(b, all);
    require(!cycle.empty(), "NotSpherical", "2-connected block without a cycle");

    Dmp dmp(b);
    if (!dmp.run(cycle)) return false;
    if (rot_accum) {
        for (int lv = 0; lv < b.order(); ++lv) {
            for (int lu : dmp.rot[lv]) (*rot_accum)[verts[lv]].push_back(verts[lu]);
        }
    }
    return true;
}

} // namespace

bool is_planar(const Graph& g, std::vector<std::vector<int>>* witness) {
    if (witness) witness->assign(g.order(), {});
    if (g.order() >= 3 && g.size() > 3 * g.order() - 6) return false;
    std::vector<std::vector<int>> rot(g.order());
    for (const auto& block : blocks_of(g)) {
        if (!embed_block(g, block, witness ? &rot : nullptr)) return false;
    }
    if (witness) {
        if (is_connected(g)) {
            *witness = std::move(rot);
        } else {
            witness->clear();
        }
    }
    return true;
}

bool is_planar(const Graph& g) { return is_planar(g, nullptr); }

namespace {

struct SubdivisionSearch {
    const Graph& g;
    std::vector<char> used;
    std::vector<char> branch;
    std::vector<std::pair<int, int>> pairs;

    explicit SubdivisionSearch(const Graph& graph)
        : g(graph), used(graph.order(), 0), branch(graph.order(), 0) {}

    bool connect(size_t idx) {
        if (idx == pairs.size()) return true;
        return path_dfs(pairs[idx].first, pairs[idx].second, idx);
    }

    bool path_dfs(int v, int t, size_t idx) {
        if (g.has_edge(v, t) && connect(idx + 1)) return true;
        for (int u : g.neighbors(v)) {
            if (used[u] || branch[u]) continue;
            used[u] = 1;
            if (path_dfs(u, t, idx)) return true;
            used[u] = 0;
        }
        return false;
    }

    bool try_branches(const std::vector<int>& bs, const std::vector<std::pair<int, int>>& want) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(branch.begin(), branch.end(), 0);
        for (int v : bs) branch[v] = 1;
        pairs = want;
        return connect(0);
    }
};

bool has_k5_subdivision(const Graph& g) {
    std::vector<int> cand;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) >= 4) cand.push_back(v);
    }
    if (cand.size() < 5) return false;
    SubdivisionSearch search(g);
    const int c = static_cast<int>(cand.size());
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            for (int d = b + 1; d < c; ++d)
                for (int e = d + 1; e < c; ++e)
                    for (int f = e + 1; f < c; ++f) {
                        std::vector<int> bs = {cand[a], cand[b], cand[d], cand[e], cand[f]};
                        std::vector<std::pair<int, int>> want;
                        for (int i = 0; i < 5; ++i)
                            for (int j = i + 1; j < 5; ++j) want.push_back({bs[i], bs[j]});
                        if (search.try_branches(bs, want)) return true;
                    }
    return false;
}

bool has_k33_subdivision(const Graph& g) {
    std::vector<int> cand;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) >= 3) cand.push_back(v);
    }
    if (cand.size() < 6) return false;
    SubdivisionSearch search(g);
    const int c = static_cast<int>(cand.size());
    std::vector<int> pick;
    // choose 6 branch vertices, then one of the 10 bipartitions
    std::vector<int> idx(6);
    std::function<bool(int, int)> choose = [&](int from, int k) -> bool {
        if (k == 6) {
            std::vector<int> bs;
            for (int i : idx) bs.push_back(cand[i]);
            for (unsigned sidemask = 0; sidemask < 32; ++sidemask) {
                if (__builtin_popcount(sidemask) != 2) continue; // vertex 0 on side A; pick 2 more of remaining 5
                std::vector<int> side_a{bs[0]}, side_b;
                for (int i = 0; i < 5; ++i) {
                    if ((sidemask >> i) & 1) {
                        side_a.push_back(bs[i + 1]);
                    } else {
                        side_b.push_back(bs[i + 1]);
                    }
                }
                std::vector<std::pair<int, int>> want;
                for (int x : side_a)
                    for (int y : side_b) want.push_back({x, y});
                if (search.try_branches(bs, want)) return true;
            }
            return false;
        }
        for (int i = from; i < c; ++i) {
            idx[k] = i;
            if (choose(i + 1, k + 1)) return true;
        }
        return false;
    };
    return choose(0, 0);
}

} // namespace

bool kuratowski_free(const Graph& g) {
    return !has_k5_subdivision(g) && !has_k33_subdivision(g);
}

} // namespace polycon
