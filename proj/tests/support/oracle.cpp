#include "support/oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace polycon::testsupport {

namespace {

bool connected_mask(const std::vector<uint32_t>& adj, uint32_t alive) {
    if (alive == 0) return true;
    const uint32_t start = alive & ~(alive - 1);
    uint32_t seen = start;
    while (true) {
        uint32_t frontier = 0;
        uint32_t scan = seen;
        while (scan) {
            const int v = __builtin_ctz(scan);
            scan &= scan - 1;
            frontier |= adj[v];
        }
        frontier &= alive;
        frontier |= seen;
        if (frontier == seen) break;
        seen = frontier;
    }
    return seen == alive;
}

} // namespace

BruteCounts brute_force_counts(int n) {
    const int npairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    }
    const uint64_t total = 1ull << npairs;
    const uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);

    std::unordered_set<std::string> poly_codes, tri_codes;
    std::vector<uint32_t> adj(n);

    for (uint64_t mask = 0; mask < total; ++mask) {
        const int e = __builtin_popcountll(mask);
        if (e < (3 * n + 1) / 2 || e > 3 * n - 6) continue;

        std::fill(adj.begin(), adj.end(), 0u);
        for (int b = 0; b < npairs; ++b) {
            if ((mask >> b) & 1) {
                adj[pairs[b].first] |= 1u << pairs[b].second;
                adj[pairs[b].second] |= 1u << pairs[b].first;
            }
        }
        // one representative labeling per class: degrees non-increasing
        bool sorted = true;
        int prev = 32;
        for (int v = 0; v < n && sorted; ++v) {
            const int d = __builtin_popcount(adj[v]);
            if (d < 3 || d > prev) sorted = false;
            prev = d;
        }
        if (!sorted) continue;
        if (!connected_mask(adj, full)) continue;

        bool three_connected = true;
        for (int u = 0; u < n && three_connected; ++u) {
            for (int v = u + 1; v < n && three_connected; ++v) {
                const uint32_t alive = full & ~(1u << u) & ~(1u << v);
                if (!connected_mask(adj, alive)) three_connected = false;
            }
        }
        if (!three_connected) continue;

        Graph g(n);
        for (int b = 0; b < npairs; ++b) {
            if ((mask >> b) & 1) g.add_edge(pairs[b].first, pairs[b].second);
        }
        std::vector<std::vector<int>> witness;
        if (!is_planar(g, &witness)) continue;
        const std::string code = PlaneMap::from_rotation(witness).canonical_code();
        poly_codes.insert(code);
        if (e == 3 * n - 6) tri_codes.insert(code);
    }
    return {static_cast<long long>(poly_codes.size()), static_cast<long long>(tri_codes.size())};
}

Graph random_graph(std::mt19937& rng, int n, double edge_prob) {
    std::bernoulli_distribution coin(edge_prob);
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) g.add_edge(i, j);
        }
    }
    return g;
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

PlaneMap relabel_map(const PlaneMap& m, const std::vector<int>& perm) {
    std::vector<std::vector<int>> rot(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v) {
        for (int u : m.neighbors(v)) rot[perm[v]].push_back(perm[u]);
    }
    return PlaneMap::from_rotation(rot);
}

Graph relabel_graph(const Graph& g, const std::vector<int>& perm) {
    return g.relabeled(perm);
}

} // namespace polycon::testsupport
