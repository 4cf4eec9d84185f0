#include "polycon/generators.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_set>

#include "json.hpp"
#include "polycon/graph.hpp"
#include "polycon/planar_code.hpp"

namespace polycon {

namespace {

PlaneMap pyramid(int n) {
    require(n >= 3, "UnknownFamily", "pyramid needs n >= 3");
    std::vector<std::vector<int>> rot(n + 1);
    for (int i = n; i >= 1; --i) rot[0].push_back(i);
    for (int i = 1; i <= n; ++i) {
        const int next = i % n + 1, prev = (i + n - 2) % n + 1;
        rot[i] = {0, next, prev};
    }
    return PlaneMap::from_rotation(rot);
}

PlaneMap prism(int n) {
    require(n >= 3, "UnknownFamily", "prism needs n >= 3");
    std::vector<std::vector<int>> rot(2 * n);
    for (int i = 0; i < n; ++i) {
        const int next = (i + 1) % n, prev = (i + n - 1) % n;
        rot[i] = {prev, next, i + n};
        rot[i + n] = {i, next + n, prev + n};
    }
    return PlaneMap::from_rotation(rot);
}

PlaneMap antiprism(int n) {
    if (n == 2) return pyramid(3); // degenerate antiprism is the tetrahedron
    require(n >= 3, "UnknownFamily", "antiprism needs n >= 2");
    std::vector<std::vector<int>> rot(2 * n);
    auto B = [&](int i) { return (i % n + n) % n + n; };
    for (int i = 0; i < n; ++i) {
        const int next = (i + 1) % n, prev = (i + n - 1) % n;
        rot[i] = {prev, next, B(i + 1), B(i)};
        rot[B(i)] = {prev, i, B(i + 1), B(i - 1)};
    }
    return PlaneMap::from_rotation(rot);
}

PlaneMap icosahedron() {
    const int n = 5, T = 10, U = 11;
    std::vector<std::vector<int>> rot(12);
    auto B = [&](int i) { return (i % n + n) % n + n; };
    for (int i = 0; i < n; ++i) {
        const int next = (i + 1) % n, prev = (i + n - 1) % n;
        rot[i] = {prev, T, next, B(i + 1), B(i)};
        rot[B(i)] = {prev, i, B(i + 1), U, B(i - 1)};
    }
    for (int i = n - 1; i >= 0; --i) rot[T].push_back(i);
    for (int i = 0; i < n; ++i) rot[U].push_back(B(i));
    return PlaneMap::from_rotation(rot);
}

} // namespace

PlaneMap family(const std::string& name, int n) {
    if (name == "pyramid") return pyramid(n);
    if (name == "prism") return prism(n);
    if (name == "antiprism") return antiprism(n);
    if (name == "platonic") {
        switch (n) {
            case 4: return pyramid(3);
            case 6: return antiprism(3);
            case 8: return prism(4);
            case 12: return icosahedron();
            case 20: return icosahedron().dual();
            default: fail("UnknownFamily", "platonic solids have 4, 6, 8, 12 or 20 vertices");
        }
    }
    fail("UnknownFamily", "no family named '" + name + "'");
}

namespace {

// Vertex splitting: replace v by the edge v-v', distributing the cyclic
// neighbourhood arc cyc[i..j] to v and the complementary arc to v'. The
// inverse of contracting an edge of a triangulation, hence the expansion
// reaches every triangulation on n+1 vertices from some one on n.
PlaneMap split_vertex(const PlaneMap& m, int v, int i, int j) {
    auto rot = m.rotations();
    const std::vector<int> cyc = rot[v];
    const int d = static_cast<int>(cyc.size());
    const int v2 = m.vertex_count();
    rot.emplace_back();

    std::vector<int> arc1, arc2;
    for (int k = i; ; k = (k + 1) % d) {
        arc1.push_back(cyc[k]);
        if (k == j) break;
    }
    for (int k = j; ; k = (k + 1) % d) {
        arc2.push_back(cyc[k]);
        if (k == i) break;
    }

    rot[v].assign({v2});
    rot[v].insert(rot[v].end(), arc1.begin(), arc1.end());
    rot[v2].assign({v});
    rot[v2].insert(rot[v2].end(), arc2.begin(), arc2.end());

    const int ui = cyc[i], uj = cyc[j];
    for (int k = 1; k + 1 < static_cast<int>(arc2.size()); ++k) {
        auto& r = rot[arc2[k]];
        std::replace(r.begin(), r.end(), v, v2);
    }
    {
        auto& r = rot[ui]; // v -> v, v2
        r.insert(std::find(r.begin(), r.end(), v) + 1, v2);
    }
    {
        auto& r = rot[uj]; // v -> v2, v
        r.insert(std::find(r.begin(), r.end(), v), v2);
    }
    return PlaneMap::from_rotation(rot);
}

std::mutex cache_mutex;

} // namespace

const std::vector<PlaneMap>& triangulations(int n) {
    require(n >= 4, "LimitTooLarge", "triangulations exist for n >= 4");
    static std::map<int, std::vector<PlaneMap>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (cache.empty()) cache[4] = {pyramid(3)};
    for (int k = static_cast<int>(cache.rbegin()->first) + 1; k <= n; ++k) {
        std::unordered_set<std::string> seen;
        std::vector<std::pair<std::string, PlaneMap>> level;
        for (const PlaneMap& t : cache[k - 1]) {
            for (int v = 0; v < t.vertex_count(); ++v) {
                const int d = t.degree(v);
                for (int i = 0; i < d; ++i) {
                    for (int j = i + 1; j < d; ++j) {
                        PlaneMap child = split_vertex(t, v, i, j);
                        std::string code = child.canonical_code();
                        if (seen.insert(code).second) {
                            level.emplace_back(std::move(code), std::move(child));
                        }
                    }
                }
            }
        }
        std::sort(level.begin(), level.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<PlaneMap> sorted;
        sorted.reserve(level.size());
        for (auto& [code, map] : level) sorted.push_back(std::move(map));
        cache[k] = std::move(sorted);
    }
    return cache[n];
}

const std::vector<PlaneMap>& polyhedra(int n) {
    require(n >= 4, "LimitTooLarge", "polyhedra exist for n >= 4");
    static std::map<int, std::vector<PlaneMap>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    const auto& tris = triangulations(n);
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, PlaneMap>> out;
    std::deque<PlaneMap> queue;
    for (const PlaneMap& t : tris) {
        std::string code = t.canonical_code();
        if (seen.insert(code).second) {
            queue.push_back(t);
            out.emplace_back(std::move(code), t);
        }
    }
    while (!queue.empty()) {
        PlaneMap m = std::move(queue.front());
        queue.pop_front();
        for (Dart e : m.edge_reps()) {
            PlaneMap child;
            try {
                child = m.delete_edges({e});
            } catch (const Error&) {
                continue; // deletion disconnects
            }
            const Graph g = underlying_graph(child);
            if (!is_k_connected(g, 3)) continue;
            std::string code = child.canonical_code();
            if (seen.insert(code).second) {
                out.emplace_back(std::move(code), child);
                queue.push_back(std::move(child));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<PlaneMap> sorted;
    sorted.reserve(out.size());
    for (auto& [code, map] : out) sorted.push_back(std::move(map));
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = cache.emplace(n, std::move(sorted));
    return it->second;
}

const char* transform_kind_name(TransformKind k) {
    switch (k) {
        case TransformKind::T1: return "T1";
        case TransformKind::T2: return "T2";
        case TransformKind::T3: return "T3";
    }
    return "?";
}

bool TransformState::is_red(const std::array<int, 3>& sorted_triple) const {
    return std::find(red_faces.begin(), red_faces.end(), sorted_triple) != red_faces.end();
}

std::string TransformState::state_code() const {
    std::vector<std::set<int>> marks;
    for (const auto& t : red_faces) marks.push_back({t[0], t[1], t[2]});
    return map.canonical_code_with_marks(marks);
}

TransformState seed_triangle() {
    TransformState s;
    s.map = PlaneMap::from_rotation({{1, 2}, {2, 0}, {0, 1}});
    return s;
}

namespace {

std::array<int, 3> sorted_triple(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

// The face whose walk matches the given cyclic vertex sequence (same cyclic
// order), or -1.
int find_face_by_walk(const PlaneMap& m, const std::array<int, 3>& walk) {
    for (int f = 0; f < m.face_count(); ++f) {
        if (m.face_length(f) != 3) continue;
        const auto w = m.face_walk(f);
        for (int r = 0; r < 3; ++r) {
            if (w[r] == walk[0] && w[(r + 1) % 3] == walk[1] && w[(r + 2) % 3] == walk[2]) {
                return f;
            }
        }
    }
    return -1;
}

int find_triangle_face(const PlaneMap& m, const std::array<int, 3>& triple) {
    for (int f = 0; f < m.face_count(); ++f) {
        if (m.face_length(f) != 3) continue;
        auto w = m.face_walk(f);
        if (sorted_triple(w[0], w[1], w[2]) == triple) return f;
    }
    return -1;
}

// The face on the other side of the walk edge from -> to of face f.
int other_side_face(const PlaneMap& m, int f, int from, int to) {
    for (Dart d : m.face_darts(f)) {
        if (m.vertex_of(d) == from && m.head_of(d) == to) return m.face_of(m.twin(d));
    }
    return -1;
}

void insert_after(std::vector<int>& rot, int anchor, const std::vector<int>& items) {
    auto it = std::find(rot.begin(), rot.end(), anchor);
    require(it != rot.end(), "InvalidPayload", "anchor vertex missing from rotation");
    rot.insert(it + 1, items.begin(), items.end());
}

// Arc of P's rotation at v strictly between neighbours `from` and `to`
// (exclusive), reading forward.
std::vector<int> rotation_arc(const std::vector<int>& rot, int from, int to) {
    const int d = static_cast<int>(rot.size());
    int i = static_cast<int>(std::find(rot.begin(), rot.end(), from) - rot.begin());
    std::vector<int> out;
    for (int k = (i + 1) % d; rot[k] != to; k = (k + 1) % d) out.push_back(rot[k]);
    return out;
}

} // namespace

TransformState apply_transform(const TransformState& s, const TransformStep& step,
                               T2Layout layout) {
    const PlaneMap& m = s.map;
    const int f = find_face_by_walk(m, step.face);
    if (f == -1) {
        const int any = find_triangle_face(m, sorted_triple(step.face[0], step.face[1], step.face[2]));
        require(any == -1, "NotTriangular", "face walk orientation does not match the map");
        fail("NotTriangular", "target is not a triangular face of the map");
    }
    require(!s.is_red(sorted_triple(step.face[0], step.face[1], step.face[2])), "RedTarget",
            "red faces are never transformed");

    auto rot = m.rotations();
    const int n = m.vertex_count();
    std::vector<std::array<int, 3>> red = s.red_faces;

    auto need_triangle_across = [&](int from, int to) {
        const int g = other_side_face(m, f, from, to);
        require(g != -1 && m.face_length(g) == 3, "PreconditionTriangleMissing",
                "edge " + std::to_string(from) + "-" + std::to_string(to) +
                    " lacks a triangular face on its other side");
    };

    int expect_dv = 0, expect_de = 0;
    if (step.kind == TransformKind::T1) {
        const auto [a, b, c] = std::array<int, 3>{step.face[0], step.face[1], step.face[2]};
        need_triangle_across(a, b);
        need_triangle_across(b, c);
        need_triangle_across(c, a);
        const int u = n, v = n + 1, w = n + 2;
        rot.resize(n + 3);
        insert_after(rot[a], c, {u}); // a: ..., c, u, b, ...
        insert_after(rot[b], a, {v});
        insert_after(rot[c], b, {w});
        rot[u] = {v, a, w};
        rot[v] = {b, u, w};
        rot[w] = {c, v, u};
        expect_dv = 3;
        expect_de = 6;
    } else if (step.kind == TransformKind::T2) {
        require(step.orientation >= 0 && step.orientation < 3, "InvalidPayload",
                "T2 orientation is 0, 1 or 2");
        const int a = step.face[step.orientation % 3];
        const int b = step.face[(step.orientation + 1) % 3];
        const int c = step.face[(step.orientation + 2) % 3];
        need_triangle_across(b, c);
        need_triangle_across(c, a);
        const int x = n, p = n + 1, q = n + 2, r = n + 3;
        rot.resize(n + 4);
        insert_after(rot[a], c, {q, r}); // a: ..., c, q, r, b, ...
        insert_after(rot[b], a, {r, p}); // b: ..., a, r, p, c, ...
        insert_after(rot[c], b, {x});    // c: ..., b, x, a, ...
        rot[x] = {c, p, q};
        rot[p] = {x, b, r};
        rot[q] = {x, r, a};
        rot[r] = {b, a, q, p};
        switch (layout) {
            case T2Layout::Standard: red.push_back(sorted_triple(a, b, r)); break;
            case T2Layout::RedMisplaced: red.push_back(sorted_triple(a, q, r)); break;
        }
        expect_dv = 4;
        expect_de = 9;
    } else {
        const PlaneMap P = step.payload_reflect ? step.payload.mirror() : step.payload;
        require(P.simple() && P.vertex_count() >= 4, "InvalidPayload",
                "payload must be a triangulation on at least 4 vertices");
        for (int pf = 0; pf < P.face_count(); ++pf) {
            require(P.face_length(pf) == 3, "InvalidPayload", "payload must be a triangulation");
        }
        require(step.payload_face >= 0 && step.payload_face < step.payload.face_count(),
                "InvalidPayload", "payload face id out of range");
        // Recover the marked face in the possibly mirrored copy by vertex set.
        auto marked_walk = step.payload.face_walk(step.payload_face);
        const int mf = find_triangle_face(
            P, sorted_triple(marked_walk[0], marked_walk[1], marked_walk[2]));
        require(mf != -1, "InvalidPayload", "marked face not found in payload");

        const int a = step.face[step.payload_rot % 3];
        const int b = step.face[(step.payload_rot + 1) % 3];
        const int c = step.face[(step.payload_rot + 2) % 3];
        const auto W = P.face_walk(mf); // (A, B, C); glue A->a, B->c, C->b
        const int A = W[0], B = W[1], C = W[2];
        const auto prot = P.rotations();

        std::vector<int> relabel(P.vertex_count(), -1);
        relabel[A] = a;
        relabel[B] = c;
        relabel[C] = b;
        int next = n;
        for (int pv = 0; pv < P.vertex_count(); ++pv) {
            if (relabel[pv] == -1) relabel[pv] = next++;
        }
        rot.resize(next);
        auto mapped = [&](const std::vector<int>& arc) {
            std::vector<int> out;
            for (int pv : arc) out.push_back(relabel[pv]);
            return out;
        };
        insert_after(rot[a], c, mapped(rotation_arc(prot[A], B, C)));
        insert_after(rot[b], a, mapped(rotation_arc(prot[C], A, B)));
        insert_after(rot[c], b, mapped(rotation_arc(prot[B], C, A)));
        for (int pv = 0; pv < P.vertex_count(); ++pv) {
            if (pv == A || pv == B || pv == C) continue;
            rot[relabel[pv]] = mapped(prot[pv]);
        }
        expect_dv = P.vertex_count() - 3;
        expect_de = 3 * expect_dv;
    }

    TransformState out;
    out.map = PlaneMap::from_rotation(rot);
    require(out.map.vertex_count() == m.vertex_count() + expect_dv &&
                out.map.edge_count() == m.edge_count() + expect_de,
            "InvalidPayload", "transform produced unexpected vertex or edge counts");
    require(out.map.simple(), "InvalidPayload", "transform produced a non-simple map");
    {
        const Graph g = underlying_graph(out.map);
        require(is_k_connected(g, 3), "InvalidPayload", "post-step map is not 3-connected");
    }
    out.red_faces = std::move(red);
    std::sort(out.red_faces.begin(), out.red_faces.end());
    for (const auto& t : out.red_faces) {
        require(find_triangle_face(out.map, t) != -1, "RedTarget",
                "a red face failed to persist as a face");
    }
    out.script = s.script;
    out.script.push_back(step);
    return out;
}

std::vector<Constructible> enumerate_constructible(int max_vertices, T2Layout layout) {
    require(max_vertices >= 4, "LimitTooLarge", "constructible maps need at least 4 vertices");
    std::unordered_set<std::string> visited_states, emitted;
    std::vector<std::pair<std::string, Constructible>> out;
    std::deque<TransformState> queue;

    TransformState seed = seed_triangle();
    visited_states.insert(seed.state_code());
    queue.push_back(std::move(seed));

    auto visit = [&](TransformState&& child) {
        if (visited_states.insert(child.state_code()).second) {
            std::string code = child.map.canonical_code();
            if (emitted.insert(code).second) {
                out.emplace_back(std::move(code),
                                 Constructible{child.map, child.red_faces, child.script});
            }
            queue.push_back(std::move(child));
        }
    };

    while (!queue.empty()) {
        TransformState s = std::move(queue.front());
        queue.pop_front();
        const int n = s.map.vertex_count();
        const bool at_seed = n == 3;
        for (int f = 0; f < s.map.face_count(); ++f) {
            if (s.map.face_length(f) != 3) continue;
            // the seed's two faces are mirror images of each other
            if (at_seed && f > 0) break;
            const auto w = s.map.face_walk(f);
            const std::array<int, 3> walk{w[0], w[1], w[2]};
            if (s.is_red(sorted_triple(w[0], w[1], w[2]))) continue;

            auto try_step = [&](const TransformStep& step) {
                try {
                    visit(apply_transform(s, step, layout));
                } catch (const Error& e) {
                    if (e.code() != "PreconditionTriangleMissing") throw;
                }
            };
            if (n + 3 <= max_vertices) {
                TransformStep step;
                step.kind = TransformKind::T1;
                step.face = walk;
                try_step(step);
            }
            if (n + 4 <= max_vertices) {
                for (int o = 0; o < 3; ++o) {
                    TransformStep step;
                    step.kind = TransformKind::T2;
                    step.face = walk;
                    step.orientation = o;
                    try_step(step);
                }
            }
            for (int t = 1; n + t <= max_vertices; ++t) {
                for (const PlaneMap& payload : triangulations(t + 3)) {
                    // gluing any payload into the bare seed reproduces the
                    // payload itself, so a single gluing suffices there
                    const int fcount = at_seed ? 1 : payload.face_count();
                    const int rots = at_seed ? 1 : 3;
                    const int refls = at_seed ? 1 : 2;
                    for (int pf = 0; pf < fcount; ++pf) {
                        for (int rotk = 0; rotk < rots; ++rotk) {
                            for (int refl = 0; refl < refls; ++refl) {
                                TransformStep step;
                                step.kind = TransformKind::T3;
                                step.face = walk;
                                step.payload = payload;
                                step.payload_face = pf;
                                step.payload_rot = rotk;
                                step.payload_reflect = refl != 0;
                                visit(apply_transform(s, step, layout));
                            }
                        }
                    }
                }
            }
        }
    }

    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Constructible> sorted;
    sorted.reserve(out.size());
    for (auto& [code, c] : out) sorted.push_back(std::move(c));
    return sorted;
}

std::string script_json(const std::vector<TransformStep>& script) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& st : script) {
        nlohmann::json j;
        j["kind"] = transform_kind_name(st.kind);
        j["face"] = {st.face[0], st.face[1], st.face[2]};
        if (st.kind == TransformKind::T2) j["orientation"] = st.orientation;
        if (st.kind == TransformKind::T3) {
            j["payload_planar_code_hex"] = to_hex(to_planar_code(st.payload));
            j["payload_face"] = st.payload_face;
            j["rotation"] = st.payload_rot;
            j["reflect"] = st.payload_reflect;
        }
        steps.push_back(std::move(j));
    }
    nlohmann::json root;
    root["seed"] = "K3";
    root["steps"] = std::move(steps);
    return root.dump();
}

} // namespace polycon
