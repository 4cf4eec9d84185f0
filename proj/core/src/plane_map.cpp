#include "polycon/plane_map.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace polycon {

PlaneMap PlaneMap::from_rotation(const std::vector<std::vector<int>>& nbrs) {
    const int n = static_cast<int>(nbrs.size());
    require(n >= 1, "NotSpherical", "empty vertex set");

    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + static_cast<int>(nbrs[v].size());
    const int darts = offset[n];
    require(darts % 2 == 0, "NonSymmetricAdjacency", "odd number of darts");

    std::vector<Dart> rot(darts), twin(darts, -1);
    std::vector<int> vertex_of(darts);
    for (int v = 0; v < n; ++v) {
        const int deg = static_cast<int>(nbrs[v].size());
        std::set<int> seen;
        for (int i = 0; i < deg; ++i) {
            const int u = nbrs[v][i];
            require(u >= 0 && u < n, "NonSymmetricAdjacency",
                    "neighbor id out of range at vertex " + std::to_string(v));
            require(u != v, "DuplicateNeighbor", "loop at vertex " + std::to_string(v));
            require(seen.insert(u).second, "DuplicateNeighbor",
                    "vertex " + std::to_string(v) + " lists " + std::to_string(u) + " twice");
            const Dart d = offset[v] + i;
            vertex_of[d] = v;
            rot[d] = offset[v] + (i + 1) % deg;
        }
    }
    // Pair darts: (v -> u) with the unique (u -> v).
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < static_cast<int>(nbrs[v].size()); ++i) {
            const Dart d = offset[v] + i;
            if (twin[d] != -1) continue;
            const int u = nbrs[v][i];
            Dart mate = -1;
            for (int j = 0; j < static_cast<int>(nbrs[u].size()); ++j) {
                if (nbrs[u][j] == v && twin[offset[u] + j] == -1) {
                    mate = offset[u] + j;
                    break;
                }
            }
            require(mate != -1, "NonSymmetricAdjacency",
                    "vertex " + std::to_string(v) + " lists " + std::to_string(u) +
                        " but not vice versa");
            twin[d] = mate;
            twin[mate] = d;
        }
    }
    return from_darts(std::move(twin), std::move(rot), std::move(vertex_of), n);
}

PlaneMap PlaneMap::from_darts(std::vector<Dart> twin, std::vector<Dart> rot,
                              std::vector<int> vertex_of, int n) {
    PlaneMap m;
    m.n_ = n;
    m.twin_ = std::move(twin);
    m.rot_ = std::move(rot);
    m.vertex_of_ = std::move(vertex_of);
    m.index();
    return m;
}

void PlaneMap::index() {
    const int darts = dart_count();
    require(n_ >= 1, "NotSpherical", "empty vertex set");
    for (Dart d = 0; d < darts; ++d) {
        require(twin_[d] != d && twin_[twin_[d]] == d, "NotSpherical",
                "twin is not a fixed-point-free involution");
    }
    rot_prev_.assign(darts, -1);
    for (Dart d = 0; d < darts; ++d) {
        require(rot_[d] >= 0 && rot_[d] < darts, "NotSpherical", "rotation out of range");
        require(vertex_of_[rot_[d]] == vertex_of_[d], "NotSpherical",
                "rotation leaves its vertex orbit");
        require(rot_prev_[rot_[d]] == -1, "NotSpherical", "rotation is not a permutation");
        rot_prev_[rot_[d]] = d;
    }

    vertex_first_.assign(n_, -1);
    degree_.assign(n_, 0);
    for (Dart d = 0; d < darts; ++d) {
        const int v = vertex_of_[d];
        if (vertex_first_[v] == -1) vertex_first_[v] = d;
        ++degree_[v];
    }
    for (int v = 0; v < n_; ++v) {
        require(darts == 0 ? n_ == 1 : vertex_first_[v] != -1, "NotSpherical",
                "isolated vertex " + std::to_string(v));
    }

    // Trace faces: orbits of d -> rot(twin(d)), ids in order of smallest dart.
    face_of_.assign(darts, -1);
    face_first_.clear();
    face_len_.clear();
    for (Dart d0 = 0; d0 < darts; ++d0) {
        if (face_of_[d0] != -1) continue;
        const int id = static_cast<int>(face_first_.size());
        face_first_.push_back(d0);
        int len = 0;
        Dart d = d0;
        do {
            face_of_[d] = id;
            d = rot_[twin_[d]];
            ++len;
        } while (d != d0);
        face_len_.push_back(len);
    }
    f_ = static_cast<int>(face_first_.size());
    if (darts == 0) f_ = 1; // the single face of K1

    // Connectivity over darts (vertex + twin moves).
    if (darts > 0) {
        std::vector<char> seen(darts, 0);
        std::vector<Dart> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            const Dart d = stack.back();
            stack.pop_back();
            for (Dart e : {rot_[d], twin_[d]}) {
                if (!seen[e]) {
                    seen[e] = 1;
                    ++cnt;
                    stack.push_back(e);
                }
            }
        }
        require(cnt == darts, "NotSpherical", "map is not connected");
    } else {
        require(n_ == 1, "NotSpherical", "edgeless map with several vertices");
    }

    const long long euler = static_cast<long long>(n_) - edge_count() + f_;
    require(euler == 2, "NotSpherical",
            "V - E + F = " + std::to_string(euler) + ", expected 2");

    simple_ = true;
    for (Dart d = 0; d < darts && simple_; ++d) {
        if (vertex_of_[d] == head_of(d)) simple_ = false;
    }
    if (simple_) {
        std::set<std::pair<int, int>> pairs;
        for (Dart d = 0; d < darts && simple_; ++d) {
            if (d < twin_[d]) {
                int a = vertex_of_[d], b = head_of(d);
                if (a > b) std::swap(a, b);
                if (!pairs.insert({a, b}).second) simple_ = false;
            }
        }
    }
}

std::vector<int> PlaneMap::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degree_[v]);
    const Dart d0 = vertex_first_[v];
    if (d0 == -1) return out;
    Dart d = d0;
    do {
        out.push_back(head_of(d));
        d = rot_[d];
    } while (d != d0);
    return out;
}

std::vector<std::vector<int>> PlaneMap::rotations() const {
    std::vector<std::vector<int>> out(n_);
    for (int v = 0; v < n_; ++v) out[v] = neighbors(v);
    return out;
}

std::vector<int> PlaneMap::face_walk(int f) const {
    std::vector<int> out;
    out.reserve(face_len_[f]);
    const Dart d0 = face_first_[f];
    Dart d = d0;
    do {
        out.push_back(vertex_of_[d]);
        d = face_next(d);
    } while (d != d0);
    return out;
}

std::vector<Dart> PlaneMap::face_darts(int f) const {
    std::vector<Dart> out;
    out.reserve(face_len_[f]);
    const Dart d0 = face_first_[f];
    Dart d = d0;
    do {
        out.push_back(d);
        d = face_next(d);
    } while (d != d0);
    return out;
}

std::vector<std::vector<int>> PlaneMap::faces() const {
    std::vector<std::vector<int>> out(f_);
    if (dart_count() == 0) return out;
    for (int f = 0; f < f_; ++f) out[f] = face_walk(f);
    return out;
}

std::vector<Dart> PlaneMap::edge_reps() const {
    std::vector<Dart> out;
    out.reserve(edge_count());
    for (Dart d = 0; d < dart_count(); ++d) {
        if (d < twin_[d]) out.push_back(d);
    }
    return out;
}

bool PlaneMap::has_edge(int u, int v) const { return find_edge(u, v) != -1; }

Dart PlaneMap::find_edge(int u, int v) const {
    const Dart d0 = vertex_first_[u];
    if (d0 == -1) return -1;
    Dart d = d0;
    do {
        if (head_of(d) == v) return edge_id(d);
        d = rot_[d];
    } while (d != d0);
    return -1;
}

PlaneMap PlaneMap::dual() const {
    require(dart_count() > 0, "NotSpherical", "dual of an edgeless map");
    std::vector<Dart> rot(dart_count());
    for (Dart d = 0; d < dart_count(); ++d) rot[d] = face_next(d);
    return from_darts(twin_, std::move(rot), face_of_, f_);
}

PlaneMap PlaneMap::mirror() const {
    return from_darts(twin_, rot_prev_, vertex_of_, n_);
}

PlaneMap PlaneMap::delete_edges(const std::set<Dart>& edges, int* merged_regions) const {
    std::vector<char> drop(dart_count(), 0);
    for (Dart e : edges) {
        require(e >= 0 && e < dart_count(), "Disconnects", "unknown edge id");
        drop[e] = drop[twin_[e]] = 1;
    }
    std::vector<Dart> remap(dart_count(), -1);
    int next = 0;
    for (Dart d = 0; d < dart_count(); ++d) {
        if (!drop[d]) remap[d] = next++;
    }
    require(next > 0, "Disconnects", "deletion removes every edge");
    std::vector<Dart> twin(next), rot(next);
    std::vector<int> vertex_of(next);
    for (Dart d = 0; d < dart_count(); ++d) {
        if (drop[d]) continue;
        twin[remap[d]] = remap[twin_[d]];
        Dart s = rot_[d];
        while (drop[s]) s = rot_[s];
        rot[remap[d]] = remap[s];
        vertex_of[remap[d]] = vertex_of_[d];
    }
    for (int v = 0; v < n_; ++v) {
        bool alive = false;
        Dart d = vertex_first_[v];
        if (d != -1) {
            Dart it = d;
            do {
                if (!drop[it]) alive = true;
                it = rot_[it];
            } while (it != d && !alive);
        }
        require(alive, "Disconnects", "vertex " + std::to_string(v) + " loses all edges");
    }
    PlaneMap m;
    m.n_ = n_;
    m.twin_ = std::move(twin);
    m.rot_ = std::move(rot);
    m.vertex_of_ = std::move(vertex_of);
    try {
        m.index();
    } catch (const Error& e) {
        fail("Disconnects", std::string("deletion does not leave a sphere map: ") + e.what());
    }
    if (merged_regions) *merged_regions = f_ - m.f_;
    return m;
}

// Breadth-first dart code rooted at `start`: vertices are labelled in
// discovery order; each vertex emits its neighbour labels in rotation order
// starting from the dart that discovered it, terminated by 0. Aborts early
// once lexicographically worse than `best`.
std::string PlaneMap::code_from(Dart start, bool reversed, const std::string* best) const {
    const int darts = dart_count();
    std::vector<int> label(n_, -1);
    std::vector<Dart> entry; // per discovered vertex, the dart at it pointing to its discoverer side
    entry.reserve(n_);
    std::string code;
    code.reserve(2 + darts + n_);
    const bool big = n_ > 255;
    auto emit = [&](int value) {
        if (big) code.push_back(static_cast<char>((value >> 8) & 0xff));
        code.push_back(static_cast<char>(value & 0xff));
    };

    label[vertex_of_[start]] = 0;
    entry.push_back(start);
    int assigned = 1;
    size_t head = 0;
    int prefix_checked = 0;
    while (head < entry.size()) {
        const Dart d0 = entry[head++];
        Dart d = d0;
        do {
            const int u = head_of(d);
            if (label[u] == -1) {
                label[u] = assigned++;
                entry.push_back(twin_[d]);
            }
            emit(label[u] + 1);
            d = reversed ? rot_prev_[d] : rot_[d];
        } while (d != d0);
        emit(0);
        if (best) {
            const int upto = static_cast<int>(std::min(code.size(), best->size()));
            while (prefix_checked < upto) {
                const unsigned char a = code[prefix_checked];
                const unsigned char b = (*best)[prefix_checked];
                if (a != b) return a < b ? code_from(start, reversed, nullptr) : std::string();
                ++prefix_checked;
            }
        }
    }
    return code;
}

namespace {

std::string with_order_prefix(int n, std::string code) {
    std::string out;
    out.push_back(static_cast<char>(n > 255 ? 0 : n));
    out += code;
    return out;
}

} // namespace

std::string PlaneMap::canonical_code() const {
    require(simple_, "NotSpherical", "canonical code requires a simple map");
    const int darts = dart_count();
    if (darts == 0) return std::string(1, static_cast<char>(1));
    std::string best;
    for (int rev = 0; rev < 2; ++rev) {
        for (Dart s = 0; s < darts; ++s) {
            std::string code = code_from(s, rev != 0, best.empty() ? nullptr : &best);
            if (code.empty()) continue;
            if (best.empty() || code < best) best = std::move(code);
        }
    }
    return with_order_prefix(n_, best);
}

std::string PlaneMap::canonical_code_oriented() const {
    require(simple_, "NotSpherical", "canonical code requires a simple map");
    const int darts = dart_count();
    if (darts == 0) return std::string(1, static_cast<char>(1));
    std::string best;
    for (Dart s = 0; s < darts; ++s) {
        std::string code = code_from(s, false, best.empty() ? nullptr : &best);
        if (code.empty()) continue;
        if (best.empty() || code < best) best = std::move(code);
    }
    return with_order_prefix(n_, best);
}

std::string PlaneMap::canonical_code_with_marks(const std::vector<std::set<int>>& marks) const {
    require(simple_, "NotSpherical", "canonical code requires a simple map");
    const int darts = dart_count();
    std::string best_code, best_suffix;
    auto suffix_for = [&](Dart s, bool rev) {
        // Recompute the labelling of the winning code and append the marked
        // triples under it, sorted.
        std::vector<int> label(n_, -1);
        std::vector<Dart> entry{s};
        label[vertex_of_[s]] = 0;
        int assigned = 1;
        size_t head = 0;
        while (head < entry.size()) {
            const Dart d0 = entry[head++];
            Dart d = d0;
            do {
                const int u = head_of(d);
                if (label[u] == -1) {
                    label[u] = assigned++;
                    entry.push_back(twin_[d]);
                }
                d = rev ? rot_prev_[d] : rot_[d];
            } while (d != d0);
        }
        std::vector<std::vector<int>> relabeled;
        for (const auto& tri : marks) {
            std::vector<int> t;
            for (int v : tri) t.push_back(label[v]);
            std::sort(t.begin(), t.end());
            relabeled.push_back(std::move(t));
        }
        std::sort(relabeled.begin(), relabeled.end());
        std::string sfx;
        for (const auto& t : relabeled) {
            for (int x : t) sfx.push_back(static_cast<char>(x + 1));
            sfx.push_back(0);
        }
        return sfx;
    };
    for (int rev = 0; rev < 2; ++rev) {
        for (Dart s = 0; s < darts; ++s) {
            std::string code = code_from(s, rev != 0, best_code.empty() ? nullptr : &best_code);
            if (code.empty()) continue;
            if (best_code.empty() || code < best_code) {
                best_code = std::move(code);
                best_suffix = suffix_for(s, rev != 0);
            } else if (code == best_code) {
                std::string sfx = suffix_for(s, rev != 0);
                if (sfx < best_suffix) best_suffix = std::move(sfx);
            }
        }
    }
    std::string out;
    out.push_back(static_cast<char>(n_ > 255 ? 0 : n_));
    out += best_code;
    out.push_back(static_cast<char>(0xff));
    out += best_suffix;
    return out;
}

FaceProfile face_profile(const PlaneMap& m) {
    FaceProfile fp;
    fp.edge_count = m.edge_count();
    fp.vertex_count = m.vertex_count();
    for (int f = 0; f < m.face_count(); ++f) {
        const int len = m.face_length(f);
        ++fp.f_by_length[len];
        if (len % 2 == 1) fp.odd_faces.insert(f);
    }
    for (Dart d : m.edge_reps()) {
        int i = m.face_length(m.face_of(d));
        int j = m.face_length(m.face_of(m.twin(d)));
        if (i > j) std::swap(i, j);
        ++fp.q_by_pair[{i, j}];
    }
    return fp;
}

} // namespace polycon
