#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polycon/errors.hpp"

namespace polycon {

using Dart = int32_t;

/// A connected graph embedded on the sphere, stored as a rotation system over
/// darts (half-edges). `rot` is the successor in counterclockwise order around
/// the dart's source vertex, `twin` pairs the two darts of each edge, and the
/// face containing a dart is traced by d -> rot(twin(d)). Values are immutable
/// after construction; every operation returns a fresh map.
class PlaneMap {
public:
    PlaneMap() = default;

    /// Build from per-vertex neighbour lists in rotation order. The input must
    /// describe a simple spherical embedding: adjacency symmetric, no loops or
    /// duplicate neighbours, and V - E + F = 2 once faces are traced.
    static PlaneMap from_rotation(const std::vector<std::vector<int>>& nbrs);

    /// Raw dart-level constructor (twin involution, rotation permutation,
    /// dart -> source vertex). Loops and parallel edges are permitted here;
    /// sphericity and connectivity are still enforced.
    static PlaneMap from_darts(std::vector<Dart> twin, std::vector<Dart> rot,
                               std::vector<int> vertex_of, int n);

    int vertex_count() const { return n_; }
    int dart_count() const { return static_cast<int>(twin_.size()); }
    int edge_count() const { return dart_count() / 2; }
    int face_count() const { return f_; }
    bool simple() const { return simple_; }

    Dart twin(Dart d) const { return twin_[d]; }
    Dart rot(Dart d) const { return rot_[d]; }
    Dart rot_prev(Dart d) const { return rot_prev_[d]; }
    Dart face_next(Dart d) const { return rot_[twin_[d]]; }
    int vertex_of(Dart d) const { return vertex_of_[d]; }
    int head_of(Dart d) const { return vertex_of_[twin_[d]]; }
    int face_of(Dart d) const { return face_of_[d]; }
    Dart edge_id(Dart d) const { return d < twin_[d] ? d : twin_[d]; }

    int degree(int v) const { return degree_[v]; }
    Dart first_dart(int v) const { return vertex_first_[v]; }
    Dart face_first(int f) const { return face_first_[f]; }
    int face_length(int f) const { return face_len_[f]; }

    /// Neighbours of v in rotation order, starting from first_dart(v).
    std::vector<int> neighbors(int v) const;
    std::vector<std::vector<int>> rotations() const;

    /// Facial walks as vertex cycles, one per face in face-id order.
    std::vector<std::vector<int>> faces() const;
    std::vector<int> face_walk(int f) const;
    std::vector<Dart> face_darts(int f) const;

    /// One representative dart per edge (the smaller of the pair), ascending.
    std::vector<Dart> edge_reps() const;

    bool has_edge(int u, int v) const;
    /// Representative dart of edge uv, or -1.
    Dart find_edge(int u, int v) const;

    /// Combinatorial dual: same darts, rotation replaced by the face
    /// successor, vertices of the result are the faces of the input.
    /// Applying dual twice reproduces the map dart-for-dart.
    PlaneMap dual() const;

    /// Mirror image: all rotations reversed.
    PlaneMap mirror() const;

    /// Delete the given edges (by representative dart id). Rotations of the
    /// remaining darts are preserved. Throws Disconnects if the result is not
    /// connected. When merged_regions is non-null it receives the decrease in
    /// face count.
    PlaneMap delete_edges(const std::set<Dart>& edges, int* merged_regions = nullptr) const;

    /// Relabeling-, rotation-, and reflection-invariant byte code. Two simple
    /// connected maps get equal codes iff they are isomorphic as maps up to
    /// mirror symmetry. Computed as the lexicographic minimum over all start
    /// darts and both orientations of a breadth-first dart code.
    std::string canonical_code() const;

    /// Orientation-preserving variant (no mirror): equal codes iff the maps
    /// are isomorphic as oriented maps. A map is chiral iff this differs
    /// between the map and its mirror.
    std::string canonical_code_oriented() const;

    /// Same minimisation, with a suffix encoding the marked faces (given as
    /// vertex triples) so that marked states dedup correctly.
    std::string canonical_code_with_marks(const std::vector<std::set<int>>& marks) const;

private:
    int n_ = 0;
    int f_ = 0;
    bool simple_ = true;
    std::vector<Dart> twin_, rot_, rot_prev_;
    std::vector<int> vertex_of_, face_of_, face_len_, degree_;
    std::vector<Dart> vertex_first_, face_first_;

    void index();
    std::string code_from(Dart start, bool reversed, const std::string* best) const;
};

/// Face census of a map: face counts by length, shared-edge counts q_{i,j}
/// between an i-face and a j-face, and the set of odd faces.
struct FaceProfile {
    std::map<int, int> f_by_length;
    std::map<std::pair<int, int>, int> q_by_pair;
    std::set<int> odd_faces;
    int edge_count = 0;
    int vertex_count = 0;

    int f(int len) const {
        auto it = f_by_length.find(len);
        return it == f_by_length.end() ? 0 : it->second;
    }
    int q(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = q_by_pair.find({i, j});
        return it == q_by_pair.end() ? 0 : it->second;
    }
};

FaceProfile face_profile(const PlaneMap& m);

} // namespace polycon
