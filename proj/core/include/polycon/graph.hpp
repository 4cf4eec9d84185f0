#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polycon/plane_map.hpp"

namespace polycon {

/// A finite simple undirected graph: sorted neighbour lists plus bitset rows
/// for fast intersection. Vertices are 0-based.
class Graph {
public:
    Graph() = default;
    explicit Graph(int p);
    static Graph from_edges(int p, const std::vector<std::pair<int, int>>& edges);

    void add_edge(int u, int v);

    int order() const { return p_; }
    int size() const { return m_; }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    std::vector<std::pair<int, int>> edges() const;
    bool common_neighbor(int u, int v) const;

    const std::vector<uint64_t>& row(int v) const { return bits_[v]; }
    int words() const { return words_; }

    /// Induced subgraph; keep[i] is the original id of new vertex i.
    Graph induced(const std::vector<int>& keep) const;
    Graph relabeled(const std::vector<int>& perm) const; // new id = perm[old id]
    static Graph disjoint_union(const Graph& a, const Graph& b);

private:
    int p_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<uint64_t>> bits_;
};

struct GraphClass {
    int connected_components = 0;
    bool bipartite = false;
    bool planar = false;
    bool maximal_planar = false;
    bool polyhedral = false;
    int max_degree = 0;
};

Graph underlying_graph(const PlaneMap& m);

int component_count(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Exact k-connectivity for k in 1..3 by exhaustive removal of all vertex
/// subsets of size < k. Requires p > k; throws KTooLarge for k > 3.
bool is_k_connected(const Graph& g, int k);

/// Exact planarity. The witness, when requested and the graph is connected,
/// is a rotation system accepted by PlaneMap::from_rotation.
bool is_planar(const Graph& g);
bool is_planar(const Graph& g, std::vector<std::vector<int>>* witness);

/// Independent slow check: searches directly for a subdivision of K5 or
/// K(3,3). Intended for cross-validation on graphs with at most ~12 vertices.
bool kuratowski_free(const Graph& g);

GraphClass classify(const Graph& g);

bool is_polyhedral(const Graph& g);
bool is_maximal_planar(const Graph& g);

/// Exact isomorphism at desk scale via degree/neighbourhood refinement plus
/// backtracking.
bool isomorphic(const Graph& a, const Graph& b);

std::string to_edge_json(const Graph& g);
Graph from_edge_json(const std::string& json);

} // namespace polycon
