#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polycon/plane_map.hpp"

namespace polycon {

/// Standard families: pyramid (wheel), prism, antiprism, platonic (selected
/// by vertex count: 4, 6, 8, 12, 20). Throws UnknownFamily.
PlaneMap family(const std::string& name, int n);

/// All triangulations of the sphere on n vertices (4 <= n), one map per
/// isomorphism class, sorted by canonical code. Generated by vertex
/// splitting from K4 with canonical-code dedup; results are cached.
const std::vector<PlaneMap>& triangulations(int n);

/// All polyhedra (3-connected planar simple graphs) on n vertices as maps,
/// one per isomorphism class, sorted by canonical code. Edge-deletion
/// closure from the triangulations on n vertices; cached.
const std::vector<PlaneMap>& polyhedra(int n);

enum class TransformKind { T1, T2, T3 };

const char* transform_kind_name(TransformKind k);

/// One face-replacement step. The target face is named by its vertex walk at
/// application time. For T2 the roles are asymmetric: `orientation` rotates
/// the walk to pick which vertex plays role a. For T3 the payload is a
/// triangulation with a marked face glued into the target; `payload_rot`
/// rotates the boundary identification and `payload_reflect` mirrors the
/// payload first.
struct TransformStep {
    TransformKind kind = TransformKind::T1;
    std::array<int, 3> face{0, 0, 0};
    int orientation = 0;
    PlaneMap payload;
    int payload_face = 0;
    int payload_rot = 0;
    bool payload_reflect = false;
};

/// A map together with its red faces (as sorted vertex triples) and the
/// script that produced it. Red faces are created by T2, persist as faces,
/// and are never transformable.
struct TransformState {
    PlaneMap map;
    std::vector<std::array<int, 3>> red_faces;
    std::vector<TransformStep> script;

    bool is_red(const std::array<int, 3>& sorted_triple) const;
    std::string state_code() const;
};

/// The K3 seed: a triangle on the sphere with two triangular faces.
TransformState seed_triangle();

/// Alternative T2 patch wirings. Standard is the production layout; the
/// variants keep the same patch but mark a different face red, and exist so
/// the construction-vs-filter equivalence check can discriminate between
/// candidate readings of the transformation.
enum class T2Layout { Standard, RedMisplaced };

TransformState apply_transform(const TransformState& s, const TransformStep& step,
                               T2Layout layout = T2Layout::Standard);

struct Constructible {
    PlaneMap map;
    std::vector<std::array<int, 3>> red_faces;
    std::vector<TransformStep> script;
};

/// Breadth-first closure over scripts from the K3 seed using every legal
/// T1/T2/T3 step, T3 payloads drawn from triangulations(). One entry per
/// isomorphism class of reached maps, sorted by canonical code, each with a
/// witnessing script.
std::vector<Constructible> enumerate_constructible(int max_vertices,
                                                   T2Layout layout = T2Layout::Standard);

std::string script_json(const std::vector<TransformStep>& script);

} // namespace polycon
