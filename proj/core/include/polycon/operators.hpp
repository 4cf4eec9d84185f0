#pragma once

#include <utility>
#include <vector>

#include "polycon/graph.hpp"
#include "polycon/plane_map.hpp"

namespace polycon {

/// Common neighbourhood graph: same vertex set, uv an edge iff u and v have
/// at least one common neighbour in g.
Graph con(const Graph& g);

/// Facial common neighbourhood graph of a simple 2-connected map: uv an edge
/// iff some facial walk contains u and v with exactly one vertex between
/// them. Parallel contributions collapse and loops cannot arise, so the
/// result is a simple graph on the same vertex set.
Graph facecon(const PlaneMap& m);

enum class OddDualTag { Empty, K2Bar, K2, K4, Other };

struct OddDualClass {
    OddDualTag tag = OddDualTag::Empty;
    std::vector<int> odd_face_ids;
};

/// Subgraph of the dual induced by the odd-length faces, with its
/// classification: Empty, K2Bar (two non-adjacent), K2 (two adjacent),
/// K4 (four pairwise adjacent), Other.
std::pair<Graph, OddDualClass> odd_dual(const PlaneMap& m);

const char* odd_dual_tag_name(OddDualTag t);

/// Characterisation-based planarity predictor for con of a polyhedron:
/// true iff the map is 3-regular and either bipartite or its odd dual is
/// K2Bar or K4. Throws NotPolyhedral otherwise applicable.
bool predict_con_planar(const PlaneMap& m);

/// Evenisation of a 3-regular polyhedron: pair the odd faces at minimal
/// total dual distance, take shortest dual paths per pair, and delete the
/// shared edge of each consecutive face pair along every path. Bipartite
/// input is returned unchanged. The output is asserted spanning, bipartite
/// and 2-connected.
PlaneMap evenise(const PlaneMap& m);

/// Radial (vertex-face incidence) map: vertices V(m) union F(m), edges the
/// incidences, embedding induced by m. Always a quadrangulation.
PlaneMap radial(const PlaneMap& m);

/// Which result vertices of radial(m) are face vertices: ids n..n+F-1.
inline int radial_face_vertex(const PlaneMap& m, int face) { return m.vertex_count() + face; }

/// Medial map: one vertex per edge of m, two adjacent iff consecutive along
/// a face; 4-regular, and dual(medial(m)) is isomorphic to radial(m).
PlaneMap medial(const PlaneMap& m);

} // namespace polycon
