#include "polycon/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <thread>

#include "json.hpp"
#include "polycon/graph.hpp"
#include "polycon/operators.hpp"
#include "polycon/planar_code.hpp"

namespace polycon {

namespace {

Counterexample cx(const PlaneMap& m, std::string detail) {
    return {to_hex(to_planar_code(m)), std::move(detail)};
}

bool is_cubic(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 3) return false;
    }
    return true;
}

std::vector<const PlaneMap*> polyhedra_upto(int nmax) {
    std::vector<const PlaneMap*> out;
    for (int n = 4; n <= nmax; ++n) {
        for (const auto& m : polyhedra(n)) out.push_back(&m);
    }
    return out;
}

std::vector<const PlaneMap*> triangulations_upto(int nmax) {
    std::vector<const PlaneMap*> out;
    for (int n = 4; n <= nmax; ++n) {
        for (const auto& m : triangulations(n)) out.push_back(&m);
    }
    return out;
}

// Cubic polyhedra with at most fmax faces: duals of the triangulations on at
// most fmax vertices.
std::vector<PlaneMap> cubic_upto(int fmax) {
    std::vector<PlaneMap> out;
    for (const PlaneMap* t : triangulations_upto(fmax)) out.push_back(t->dual());
    return out;
}

using PerInstance = std::function<void(const PlaneMap&, std::vector<Counterexample>&)>;

void scan(const std::vector<const PlaneMap*>& universe, int workers, const PerInstance& fn,
          VerificationReport& report) {
    report.checked += static_cast<long long>(universe.size());
    if (workers <= 1) {
        for (const PlaneMap* m : universe) fn(*m, report.counterexamples);
        return;
    }
    std::vector<std::vector<Counterexample>> found(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < universe.size(); i += workers) fn(*universe[i], found[w]);
        });
    }
    for (auto& t : pool) t.join();
    for (auto& part : found) {
        report.counterexamples.insert(report.counterexamples.end(), part.begin(), part.end());
    }
}

// ---- shared predicates -------------------------------------------------

bool faces_at_vertex_all_of_length(const PlaneMap& m, int v, int len) {
    const Dart d0 = m.first_dart(v);
    Dart d = d0;
    do {
        if (m.face_length(m.face_of(d)) != len) return false;
        d = m.rot(d);
    } while (d != d0);
    return true;
}

// deg_facecon(v) = deg(v) iff v sees only quadrangular faces, or only
// triangular ones (then every counted neighbour is shared by two triangles).
bool vertex_lower_degree_case(const PlaneMap& m, int v) {
    return faces_at_vertex_all_of_length(m, v, 4) || faces_at_vertex_all_of_length(m, v, 3);
}

bool vertex_upper_degree_case(const PlaneMap& m, int v) {
    // no quadrangular face at v and no two consecutive triangular faces
    std::vector<int> lens;
    const Dart d0 = m.first_dart(v);
    Dart d = d0;
    do {
        lens.push_back(m.face_length(m.face_of(d)));
        d = m.rot(d);
    } while (d != d0);
    for (size_t i = 0; i < lens.size(); ++i) {
        if (lens[i] == 4) return false;
        if (lens[i] == 3 && lens[(i + 1) % lens.size()] == 3) return false;
    }
    return true;
}

std::string check_le2sq(const PlaneMap& m) {
    const FaceProfile fp = face_profile(m);
    for (int f = 0; f < m.face_count(); ++f) {
        if (m.face_length(f) != 4) continue;
        int tri = 0, quad = 0;
        for (Dart d : m.face_darts(f)) {
            const int len = m.face_length(m.face_of(m.twin(d)));
            if (len == 3) ++tri;
            if (len == 4) ++quad;
        }
        if (tri != 2 || quad != 2) {
            return "quad face " + std::to_string(f) + " sees " + std::to_string(quad) +
                   " quads and " + std::to_string(tri) + " triangles";
        }
    }
    if (fp.f(4) != fp.q(4, 4)) return "f4 != q44";
    if (2 * fp.f(4) != fp.q(3, 4)) return "2 f4 != q34";
    if (3 * fp.f(3) != 2 * fp.q(3, 3) + fp.q(3, 4)) return "3 f3 != 2 q33 + q34";
    return {};
}

const Graph& t1_site_pattern() {
    static const Graph g = underlying_graph(family("prism", 3));
    return g;
}

const Graph& t2_site_pattern() {
    // centre x = 0, rim w1..w6 = 1..6, chords between even rim vertices
    static const Graph g = Graph::from_edges(
        7, {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1},
            {2, 4}, {4, 6}, {6, 2}});
    return g;
}

bool has_triangle_face(const PlaneMap& m, const std::set<int>& verts) {
    for (int f = 0; f < m.face_count(); ++f) {
        if (m.face_length(f) != 3) continue;
        const auto w = m.face_walk(f);
        if (std::set<int>(w.begin(), w.end()) == verts) return true;
    }
    return false;
}

std::string check_p3sq(const PlaneMap& m) {
    const Graph g = underlying_graph(m);
    std::vector<int> quads;
    for (int f = 0; f < m.face_count(); ++f) {
        if (m.face_length(f) == 4) quads.push_back(f);
    }
    if (quads.empty()) return {};
    std::vector<int> qindex(m.face_count(), -1);
    for (size_t i = 0; i < quads.size(); ++i) qindex[quads[i]] = static_cast<int>(i);
    Graph quad_dual(static_cast<int>(quads.size()));
    for (Dart d : m.edge_reps()) {
        const int f1 = m.face_of(d), f2 = m.face_of(m.twin(d));
        if (f1 != f2 && qindex[f1] != -1 && qindex[f2] != -1 &&
            !quad_dual.has_edge(qindex[f1], qindex[f2])) {
            quad_dual.add_edge(qindex[f1], qindex[f2]);
        }
    }
    for (const auto& comp : components(quad_dual)) {
        if (comp.size() != 3) {
            return "a quad block of " + std::to_string(comp.size()) + " faces";
        }
        std::set<int> verts;
        for (int qi : comp) {
            for (int v : m.face_walk(quads[qi])) verts.insert(v);
        }
        std::vector<int> keep(verts.begin(), verts.end());
        const Graph site = g.induced(keep);
        if (keep.size() == 6) {
            if (!isomorphic(site, t1_site_pattern())) return "6-vertex quad block is not a prism";
        } else if (keep.size() == 7) {
            if (!isomorphic(site, t2_site_pattern())) {
                return "7-vertex quad block does not match the centred pattern";
            }
            std::set<int> deg4;
            for (int i = 0; i < site.order(); ++i) {
                if (site.degree(i) == 4) deg4.insert(keep[i]);
            }
            if (deg4.size() != 3 || !has_triangle_face(m, deg4)) {
                return "centred quad block lacks its triangular face";
            }
        } else {
            return "quad block spans " + std::to_string(keep.size()) + " vertices";
        }
    }
    return {};
}

// ---- claim registry ------------------------------------------------------

const std::vector<long long> kTriCounts = {1, 1, 2, 5, 14, 50, 233, 1249, 7595};
const std::vector<long long> kPolyCounts = {1, 2, 7, 34, 257, 2606, 32300, 440564};

long long estimate_from(const std::vector<long long>& table, int nmax, long long growth) {
    long long total = 0, last = 1;
    for (int n = 4; n <= nmax; ++n) {
        const size_t i = static_cast<size_t>(n - 4);
        last = i < table.size() ? table[i] : last * growth;
        total += last;
    }
    return total;
}

struct ClaimSpec {
    std::string universe;
    std::function<long long(const ClaimLimits&)> estimate;
    std::function<void(const ClaimLimits&, VerificationReport&)> run;
};

std::map<std::string, ClaimSpec> make_registry();

const std::map<std::string, ClaimSpec>& registry() {
    static const std::map<std::string, ClaimSpec> reg = make_registry();
    return reg;
}

} // namespace

PlaneMap cube_plus_diagonal() {
    const PlaneMap cube = family("prism", 4);
    int quad = -1;
    for (int f = 0; f < cube.face_count(); ++f) {
        if (cube.face_length(f) == 4) {
            quad = f;
            break;
        }
    }
    const auto walk = cube.face_walk(quad);
    auto rot = cube.rotations();
    const int u = walk[0], w = walk[2];
    auto insert_after_anchor = [&](int at, int anchor, int value) {
        auto it = std::find(rot[at].begin(), rot[at].end(), anchor);
        rot[at].insert(it + 1, value);
    };
    insert_after_anchor(u, walk[3], w); // predecessor of u on the walk
    insert_after_anchor(w, walk[1], u); // predecessor of w on the walk
    return PlaneMap::from_rotation(rot);
}

namespace {

std::map<std::string, ClaimSpec> make_registry() {
    std::map<std::string, ClaimSpec> reg;

    auto poly_estimate = [](const ClaimLimits& lim) {
        return estimate_from(kPolyCounts, lim.max_vertices, 14);
    };
    auto cubic_estimate = [](const ClaimLimits& lim) {
        return estimate_from(kTriCounts, lim.max_faces, 7);
    };
    auto both_estimate = [=](const ClaimLimits& lim) {
        return poly_estimate(lim) + cubic_estimate(lim);
    };

    auto scan_poly = [](const ClaimLimits& lim, VerificationReport& rep, const PerInstance& fn) {
        scan(polyhedra_upto(lim.max_vertices), lim.workers, fn, rep);
    };
    auto scan_cubic = [](const ClaimLimits& lim, VerificationReport& rep, const PerInstance& fn) {
        const auto cubics = cubic_upto(lim.max_faces);
        std::vector<const PlaneMap*> ptrs;
        for (const auto& m : cubics) ptrs.push_back(&m);
        scan(ptrs, lim.workers, fn, rep);
    };
    auto scan_both = [=](const ClaimLimits& lim, VerificationReport& rep, const PerInstance& fn) {
        scan_poly(lim, rep, fn);
        scan_cubic(lim, rep, fn);
    };

    reg["THM0"] = {
        "all polyhedra on <= max_vertices vertices", poly_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_poly(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                const Graph g = underlying_graph(m);
                const Graph cg = con(g);
                const bool planar = is_planar(cg);
                if (planar != predict_con_planar(m)) {
                    out.push_back(cx(m, "predictor disagrees with is_planar(con)"));
                    return;
                }
                if (!planar) return;
                if (!is_cubic(g)) {
                    out.push_back(cx(m, "con planar but the polyhedron is not cubic"));
                    return;
                }
                if (is_bipartite(g)) {
                    const auto comps = components(cg);
                    if (comps.size() != 2) {
                        out.push_back(cx(m, "bipartite case: con has " +
                                                std::to_string(comps.size()) + " components"));
                        return;
                    }
                    for (const auto& comp : comps) {
                        const Graph sub = cg.induced(comp);
                        if (sub.order() < 3 || !is_k_connected(sub, 2)) {
                            out.push_back(cx(m, "bipartite case: a con component is not 2-connected"));
                            return;
                        }
                    }
                } else {
                    const auto tag = odd_dual(m).second.tag;
                    if (tag != OddDualTag::K2Bar && tag != OddDualTag::K4) {
                        out.push_back(cx(m, std::string("con planar but odd dual is ") +
                                                odd_dual_tag_name(tag)));
                    } else if (!is_polyhedral(cg)) {
                        out.push_back(cx(m, "odd dual admissible but con is not polyhedral"));
                    }
                }
            });
        }};

    reg["THM1"] = {
        "all cubic polyhedra with <= max_faces faces", cubic_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_cubic(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                const Graph cg = con(underlying_graph(m));
                const bool a = is_planar(cg) && is_connected(cg);
                const bool b = is_polyhedral(cg);
                const auto tag = odd_dual(m).second.tag;
                const bool c = tag == OddDualTag::K2Bar || tag == OddDualTag::K4;
                if (a != b || b != c) {
                    out.push_back(cx(m, std::string("A=") + (a ? "1" : "0") + " B=" +
                                            (b ? "1" : "0") + " C=" + (c ? "1" : "0")));
                }
            });
        }};

    reg["THM2"] = {
        "all polyhedra on <= max_vertices vertices with max degree >= 4", poly_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_poly(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                const Graph g = underlying_graph(m);
                if (g.max_degree() < 4) return;
                if (is_planar(con(g))) {
                    out.push_back(cx(m, "max degree >= 4 but con is planar"));
                }
            });
        }};

    reg["CUODD"] = {
        "all triangulations on <= max_faces vertices",
        [](const ClaimLimits& lim) { return estimate_from(kTriCounts, lim.max_faces, 7); },
        [](const ClaimLimits& lim, VerificationReport& rep) {
            scan(triangulations_upto(lim.max_faces), lim.workers,
                 [](const PlaneMap& m, std::vector<Counterexample>& out) {
                     const Graph g = underlying_graph(m);
                     std::vector<int> odd;
                     for (int v = 0; v < g.order(); ++v) {
                         if (g.degree(v) % 2 == 1) odd.push_back(v);
                     }
                     if (odd.size() == 2 && g.has_edge(odd[0], odd[1])) {
                         out.push_back(cx(m, "exactly two odd vertices and they are adjacent"));
                     }
                 },
                 rep);
        }};

    reg["LE5"] = {
        "all polyhedra on <= max_vertices vertices with max degree >= 5", poly_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_poly(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                const Graph g = underlying_graph(m);
                if (g.max_degree() < 5) return;
                const Graph cg = con(g);
                int hub = 0;
                for (int v = 0; v < g.order(); ++v) {
                    if (g.degree(v) >= 5) hub = v;
                }
                const auto& nb = g.neighbors(hub);
                for (size_t i = 0; i < nb.size(); ++i) {
                    for (size_t j = i + 1; j < nb.size(); ++j) {
                        if (!cg.has_edge(nb[i], nb[j])) {
                            out.push_back(cx(m, "neighbours of a degree-5 vertex miss a con edge"));
                            return;
                        }
                    }
                }
                if (is_planar(cg)) out.push_back(cx(m, "max degree >= 5 but con is planar"));
            });
        }};

    reg["LE_DEG"] = {
        "all polyhedra on <= max_vertices vertices and all cubic polyhedra with <= max_faces faces",
        both_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_both(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                const Graph g = underlying_graph(m);
                const Graph fc = facecon(m);
                for (int v = 0; v < g.order(); ++v) {
                    const int d = g.degree(v), dfc = fc.degree(v);
                    if (dfc < d || dfc > 2 * d) {
                        out.push_back(cx(m, "facecon degree bound fails at vertex " +
                                                std::to_string(v)));
                        return;
                    }
                    if ((dfc == d) != vertex_lower_degree_case(m, v)) {
                        out.push_back(cx(m, "lower equality case fails at vertex " +
                                                std::to_string(v)));
                        return;
                    }
                    if ((dfc == 2 * d) != vertex_upper_degree_case(m, v)) {
                        out.push_back(cx(m, "upper equality case fails at vertex " +
                                                std::to_string(v)));
                        return;
                    }
                }
            });
        }};

    reg["COR_BDS"] = {
        "all polyhedra on <= max_vertices vertices and all cubic polyhedra with <= max_faces faces",
        both_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_both(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                const FaceProfile fp = face_profile(m);
                const int q = m.edge_count();
                const int efc = facecon(m).size();
                bool lower_case = true;
                for (int v = 0; v < m.vertex_count(); ++v) {
                    lower_case = lower_case && vertex_lower_degree_case(m, v);
                }
                bool upper_case = fp.f(4) == 0 && fp.q(3, 3) == 0;
                if (efc < q || efc > 2 * q) {
                    out.push_back(cx(m, "facecon edge bounds fail"));
                } else if ((efc == q) != lower_case) {
                    out.push_back(cx(m, "lower equality case fails"));
                } else if ((efc == 2 * q) != upper_case) {
                    out.push_back(cx(m, "upper equality case fails"));
                }
            });
        }};

    reg["EFCG"] = {
        "all polyhedra on <= max_vertices vertices and all cubic polyhedra with <= max_faces faces",
        both_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_both(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                const FaceProfile fp = face_profile(m);
                const int expected = 2 * m.edge_count() - 2 * fp.f(4) - fp.q(3, 3);
                if (facecon(m).size() != expected) {
                    out.push_back(cx(m, "edge formula 2q - 2 f4 - q33 fails"));
                }
            });
        }};

    reg["ECG_CUBIC"] = {
        "all cubic polyhedra with <= max_faces faces", cubic_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_cubic(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                const Graph g = underlying_graph(m);
                const int ec = con(g).size();
                const FaceProfile fp = face_profile(m);
                if (g.order() == 4) {
                    if (ec != 6) out.push_back(cx(m, "con of the tetrahedron has 6 edges"));
                    return;
                }
                if (fp.q(3, 3) != 0) {
                    out.push_back(cx(m, "cubic polyhedron with adjacent triangular faces"));
                } else if (ec != 3 * g.order() - 2 * fp.f(4)) {
                    out.push_back(cx(m, "con edge formula 3p - 2 f4 fails"));
                }
            });
        }};

    reg["P_BD"] = {
        "bipartite cubic polyhedra with <= max_faces faces, other than the cube", cubic_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_cubic(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                const Graph g = underlying_graph(m);
                if (!is_bipartite(g)) return;
                const int p = g.order();
                const bool is_cube = p == 8 && isomorphic(g, underlying_graph(family("prism", 4)));
                if (is_cube) return;
                const FaceProfile fp = face_profile(m);
                const int ec = con(g).size();
                long long rhs = 6;
                for (const auto& [len, count] : fp.f_by_length) {
                    if (len >= 8) rhs += (len / 2 - 3) * static_cast<long long>(count);
                }
                if (fp.f(4) != rhs) {
                    out.push_back(cx(m, "f4 identity fails"));
                    return;
                }
                if (ec < 2 * p || ec > 3 * p - 12) {
                    out.push_back(cx(m, "con edge bounds fail"));
                    return;
                }
                const bool is_prism =
                    p % 4 == 0 && isomorphic(g, underlying_graph(family("prism", p / 2)));
                if ((ec == 2 * p) != is_prism) {
                    out.push_back(cx(m, "lower bound equality iff prism with p = 0 mod 4 fails"));
                    return;
                }
                if (is_prism) {
                    const Graph anti = underlying_graph(family("antiprism", p / 4));
                    if (!isomorphic(con(g), Graph::disjoint_union(anti, anti))) {
                        out.push_back(cx(m, "prism con is not two antiprisms"));
                        return;
                    }
                }
                bool upper_case = fp.f(4) == 6;
                for (const auto& [len, count] : fp.f_by_length) {
                    if (len != 4 && len != 6 && count > 0) upper_case = false;
                }
                if ((ec == 3 * p - 12) != upper_case) {
                    out.push_back(cx(m, "upper bound equality case fails"));
                }
            });
        }};

    reg["P_BD2"] = {
        "cubic polyhedra with <= max_faces faces whose con is a polyhedron", cubic_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_cubic(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                const Graph g = underlying_graph(m);
                const FaceProfile fp = face_profile(m);
                {
                    long long lhs = 3LL * fp.f(3) + 2LL * fp.f(4) + fp.f(5);
                    long long rhs = 12;
                    for (const auto& [len, count] : fp.f_by_length) {
                        if (len >= 7) rhs += (len - 6) * static_cast<long long>(count);
                    }
                    if (lhs != rhs) {
                        out.push_back(cx(m, "face-length identity fails"));
                        return;
                    }
                }
                const Graph cg = con(g);
                if (!is_polyhedral(cg)) return;
                const bool tetra = g.order() == 4;
                // con(K4) has 6 < 2p edges; the bounds presuppose the edge
                // formula, which needs a cubic polyhedron other than K4
                const int p = g.order(), ec = cg.size();
                if (!tetra && (ec < 2 * p || ec > 3 * p - 6)) {
                    out.push_back(cx(m, "con edge bounds fail"));
                    return;
                }
                if (!tetra && (ec == 3 * p - 6) != (fp.f(4) == 3)) {
                    out.push_back(cx(m, "upper bound equality iff three quad faces fails"));
                    return;
                }
                if (!tetra && fp.f(4) == 3) {
                    const auto tag = odd_dual(m).second.tag;
                    std::multiset<int> odd_lens;
                    for (int f = 0; f < m.face_count(); ++f) {
                        if (m.face_length(f) % 2 == 1) odd_lens.insert(m.face_length(f));
                    }
                    const bool split_a = tag == OddDualTag::K2Bar && fp.f(3) == 2 &&
                                         odd_lens == std::multiset<int>{3, 3};
                    const bool split_b = tag == OddDualTag::K4 && fp.f(3) == 1 && fp.f(5) == 3 &&
                                         odd_lens == std::multiset<int>{3, 5, 5, 5};
                    if (!split_a && !split_b) {
                        out.push_back(cx(m, "extremal odd-face split fails"));
                        return;
                    }
                }
                const bool odd_prism = p % 4 == 2 &&
                                       isomorphic(g, underlying_graph(family("prism", p / 2)));
                if ((ec == 2 * p) != odd_prism) {
                    out.push_back(cx(m, "lower bound equality iff odd prism fails"));
                    return;
                }
                if (odd_prism &&
                    !isomorphic(cg, underlying_graph(family("antiprism", p / 2)))) {
                    out.push_back(cx(m, "odd prism con is not the antiprism"));
                }
            });
        }};

    reg["P_MIN"] = {
        "all polyhedra on <= max_vertices vertices with planar facecon", poly_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_poly(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                const Graph fc = facecon(m);
                if (!is_planar(fc)) return;
                const int p = m.vertex_count();
                const bool quadrangulation = face_profile(m).f(4) == m.face_count();
                if (fc.size() < 2 * p - 4) {
                    out.push_back(cx(m, "facecon has fewer than 2p - 4 edges"));
                } else if ((fc.size() == 2 * p - 4) != quadrangulation) {
                    out.push_back(cx(m, "minimum attained iff quadrangulation fails"));
                }
            });
        }};

    reg["P_3456"] = {
        "all polyhedra on <= max_vertices vertices", poly_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_poly(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                if (!is_maximal_planar(facecon(m))) return;
                for (int f = 0; f < m.face_count(); ++f) {
                    if (m.face_length(f) > 6) {
                        out.push_back(cx(m, "facecon maximal planar but a face has length " +
                                                std::to_string(m.face_length(f))));
                        return;
                    }
                }
            });
        }};

    reg["LE_QIJ"] = {
        "polyhedra and cubic polyhedra whose facecon is maximal planar", both_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_both(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                if (!is_maximal_planar(facecon(m))) return;
                const FaceProfile fp = face_profile(m);
                if (3 * m.face_count() != m.edge_count() + fp.q(3, 3) + 2 * fp.f(4)) {
                    out.push_back(cx(m, "3f = q + q33 + 2 f4 fails"));
                }
            });
        }};

    reg["LE_2SQ"] = {
        "max-face-4 polyhedra with maximal planar facecon", both_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_both(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                int maxface = 0;
                for (int f = 0; f < m.face_count(); ++f) maxface = std::max(maxface, m.face_length(f));
                if (maxface > 4 || !is_maximal_planar(facecon(m))) return;
                const std::string why = check_le2sq(m);
                if (!why.empty()) out.push_back(cx(m, why));
            });
        }};

    reg["P_3SQ"] = {
        "max-face-4 polyhedra with maximal planar facecon", both_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_both(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                int maxface = 0;
                for (int f = 0; f < m.face_count(); ++f) maxface = std::max(maxface, m.face_length(f));
                if (maxface > 4 || !is_maximal_planar(facecon(m))) return;
                const std::string why = check_p3sq(m);
                if (!why.empty()) out.push_back(cx(m, why));
            });
        }};

    reg["THM_MAXPL"] = {
        "constructible maps vs filtered polyhedra, per vertex count",
        [](const ClaimLimits& lim) {
            return 2 * estimate_from(kTriCounts, lim.max_constructible, 7) +
                   estimate_from(kPolyCounts, std::min(lim.max_vertices, lim.max_constructible), 14);
        },
        [](const ClaimLimits& lim, VerificationReport& rep) {
            const auto constructible = enumerate_constructible(lim.max_constructible, lim.t2_layout);
            rep.checked += static_cast<long long>(constructible.size());

            auto predicate = [](const PlaneMap& m) {
                for (int f = 0; f < m.face_count(); ++f) {
                    if (m.face_length(f) > 4) return false;
                }
                return is_maximal_planar(facecon(m));
            };

            std::map<int, std::set<std::string>> built;
            for (const auto& c : constructible) {
                built[c.map.vertex_count()].insert(c.map.canonical_code());
            }
            for (int n = 4; n <= lim.max_constructible; ++n) {
                std::set<std::string> expected;
                std::map<std::string, const PlaneMap*> by_code;
                if (n <= lim.max_vertices) {
                    for (const auto& m : polyhedra(n)) {
                        if (predicate(m)) {
                            std::string code = m.canonical_code();
                            by_code[code] = &m;
                            expected.insert(std::move(code));
                        }
                    }
                    rep.checked += static_cast<long long>(polyhedra(n).size());
                } else {
                    // beyond the enumeration horizon the stream checks its own closure
                    for (const auto& c : constructible) {
                        if (c.map.vertex_count() == n && predicate(c.map)) {
                            expected.insert(c.map.canonical_code());
                        }
                    }
                }
                const auto& got = built.count(n) ? built[n] : std::set<std::string>{};
                for (const auto& code : expected) {
                    if (!got.count(code)) {
                        if (by_code.count(code)) {
                            rep.counterexamples.push_back(
                                cx(*by_code[code], "satisfies the filter but was not constructed"));
                        } else {
                            rep.counterexamples.push_back(
                                {"", "filtered map missing from construction at n = " +
                                         std::to_string(n)});
                        }
                    }
                }
                for (const auto& code : got) {
                    if (!expected.count(code)) {
                        for (const auto& c : constructible) {
                            if (c.map.vertex_count() == n && c.map.canonical_code() == code) {
                                rep.counterexamples.push_back(
                                    cx(c.map, "constructed but fails the filter"));
                                break;
                            }
                        }
                    }
                }
            }
            for (const auto& c : constructible) {
                if (c.map.edge_count() % 3 != 0) {
                    rep.counterexamples.push_back(cx(c.map, "edge count not a multiple of 3"));
                }
                const FaceProfile fp = face_profile(c.map);
                if (3 * c.map.face_count() !=
                    c.map.edge_count() + fp.q(3, 3) + 2 * fp.f(4)) {
                    rep.counterexamples.push_back(cx(c.map, "3f = q + q33 + 2 f4 fails"));
                }
                std::string why = check_le2sq(c.map);
                if (why.empty()) why = check_p3sq(c.map);
                if (!why.empty()) rep.counterexamples.push_back(cx(c.map, why));
            }
        }};

    reg["P_2CONN"] = {
        "2-connected non-bipartite generated instances", both_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_both(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                const Graph g = underlying_graph(m);
                if (is_bipartite(g)) return;
                if (!is_k_connected(con(g), 2)) {
                    out.push_back(cx(m, "con of a 2-connected non-bipartite graph is not 2-connected"));
                }
            });
        }};

    reg["P_K24"] = {
        "polyhedra with odd dual K2, plus the cube-plus-diagonal fixture",
        [=](const ClaimLimits& lim) { return poly_estimate(lim) + 1; },
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            const PlaneMap fixture = cube_plus_diagonal();
            const PerInstance fn = [](const PlaneMap& m, std::vector<Counterexample>& out) {
                if (odd_dual(m).second.tag != OddDualTag::K2) return;
                if (is_k_connected(facecon(m), 3)) {
                    out.push_back(cx(m, "odd dual K2 but facecon is 3-connected"));
                }
            };
            scan_poly(lim, rep, fn);
            std::vector<const PlaneMap*> extra{&fixture};
            scan(extra, 1, fn, rep);
            require(odd_dual(fixture).second.tag == OddDualTag::K2, "NotPolyhedral",
                    "fixture lost its K2 odd dual");
        }};

    reg["RADIAL_ROUNDTRIP"] = {
        "all polyhedra on <= max_radial_vertices vertices",
        [](const ClaimLimits& lim) { return estimate_from(kPolyCounts, lim.max_radial_vertices, 14); },
        [](const ClaimLimits& lim, VerificationReport& rep) {
            scan(polyhedra_upto(lim.max_radial_vertices), lim.workers,
                 [](const PlaneMap& m, std::vector<Counterexample>& out) {
                     const PlaneMap r = radial(m);
                     if (medial(m).dual().canonical_code() != r.canonical_code()) {
                         out.push_back(cx(m, "dual(medial) differs from radial"));
                         return;
                     }
                     const Graph fc = facecon(r);
                     const auto comps = components(fc);
                     if (comps.size() != 2) {
                         out.push_back(cx(m, "facecon(radial) has " +
                                                 std::to_string(comps.size()) + " components"));
                         return;
                     }
                     const Graph c0 = fc.induced(comps[0]), c1 = fc.induced(comps[1]);
                     const Graph g = underlying_graph(m), gd = underlying_graph(m.dual());
                     const bool ok = (isomorphic(c0, g) && isomorphic(c1, gd)) ||
                                     (isomorphic(c0, gd) && isomorphic(c1, g));
                     if (!ok) {
                         out.push_back(cx(m, "facecon(radial) is not G together with its dual"));
                     }
                 },
                 rep);
        }};

    reg["EVENISE_POST"] = {
        "non-bipartite cubic polyhedra with <= max_faces faces", cubic_estimate,
        [=](const ClaimLimits& lim, VerificationReport& rep) {
            scan_cubic(lim, rep, [](const PlaneMap& m, std::vector<Counterexample>& out) {
                const Graph g = underlying_graph(m);
                if (is_bipartite(g)) return;
                try {
                    const PlaneMap even = evenise(m);
                    const Graph eg = underlying_graph(even);
                    if (eg.order() != g.order()) {
                        out.push_back(cx(m, "evenisation is not spanning"));
                    } else if (!is_bipartite(eg)) {
                        out.push_back(cx(m, "evenisation is not bipartite"));
                    } else if (!is_k_connected(eg, 2)) {
                        out.push_back(cx(m, "evenisation is not 2-connected"));
                    }
                } catch (const Error& e) {
                    out.push_back(cx(m, std::string("evenise failed: ") + e.what()));
                }
            });
        }};

    reg["NEG_CONTROL"] = {
        "planted-fault fixtures", [](const ClaimLimits&) { return 4; },
        [](const ClaimLimits&, VerificationReport& rep) {
            // Deliberately false claim: no polyhedron has odd dual K2. The
            // planted cube-plus-diagonal must be flagged, and nothing else.
            const PlaneMap fixture = cube_plus_diagonal();
            std::vector<PlaneMap> fixtures = {family("pyramid", 3), family("prism", 4),
                                              family("prism", 5), fixture};
            rep.expected_counterexamples.push_back(
                cx(fixture, "odd dual is K2, refuting the planted claim"));
            for (const auto& m : fixtures) {
                ++rep.checked;
                if (odd_dual(m).second.tag == OddDualTag::K2) {
                    rep.counterexamples.push_back(
                        cx(m, "odd dual is K2, refuting the planted claim"));
                }
            }
        }};

    return reg;
}

} // namespace

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, spec] : registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

VerificationReport run_claim(const std::string& id, const ClaimLimits& limits) {
    const auto it = registry().find(id);
    require(it != registry().end(), "MalformedInput", "unknown claim id '" + id + "'");
    const long long estimated = it->second.estimate(limits);
    require(estimated <= limits.budget, "LimitTooLarge",
            "estimated " + std::to_string(estimated) + " instances exceeds budget " +
                std::to_string(limits.budget));

    VerificationReport rep;
    rep.claim = id;
    rep.universe = it->second.universe;
    rep.limits = {{"max_vertices", limits.max_vertices},
                  {"max_faces", limits.max_faces},
                  {"max_constructible", limits.max_constructible},
                  {"max_radial_vertices", limits.max_radial_vertices},
                  {"workers", limits.workers}};
    const auto t0 = std::chrono::steady_clock::now();
    it->second.run(limits, rep);
    std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
    rep.counterexamples.erase(
        std::unique(rep.counterexamples.begin(), rep.counterexamples.end()),
        rep.counterexamples.end());
    rep.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<VerificationReport> run_suite(const ClaimLimits& limits) {
    std::vector<VerificationReport> out;
    for (const auto& id : claim_ids()) out.push_back(run_claim(id, limits));
    return out;
}

std::string VerificationReport::to_json(bool include_elapsed) const {
    nlohmann::json j;
    j["claim"] = claim;
    j["universe"] = universe;
    nlohmann::json jl;
    for (const auto& [k, v] : limits) jl[k] = v;
    j["limits"] = std::move(jl);
    j["checked"] = checked;
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& c : counterexamples) {
        jc.push_back({{"planar_code_hex", c.planar_code_hex}, {"detail", c.detail}});
    }
    j["counterexamples"] = std::move(jc);
    if (!expected_counterexamples.empty()) {
        nlohmann::json je = nlohmann::json::array();
        for (const auto& c : expected_counterexamples) {
            je.push_back({{"planar_code_hex", c.planar_code_hex}, {"detail", c.detail}});
        }
        j["expected_counterexamples"] = std::move(je);
    }
    j["elapsed_s"] = include_elapsed ? elapsed_s : 0.0;
    j["pass"] = pass();
    return j.dump(2);
}

} // namespace polycon
