#include <random>

#include "doctest.h"
#include "polycon/generators.hpp"
#include "polycon/graph.hpp"
#include "polycon/operators.hpp"
#include "support/oracle.hpp"

using namespace polycon;
using namespace polycon::testsupport;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    }
    return g;
}

} // namespace

TEST_CASE("underlying_graph") {
    const Graph c = underlying_graph(family("prism", 4));
    CHECK(c.order() == 8);
    for (int v = 0; v < 8; ++v) CHECK(c.degree(v) == 3);
    CHECK(isomorphic(underlying_graph(family("pyramid", 3)), complete(4)));
    const Graph tri = underlying_graph(PlaneMap::from_rotation({{1, 2}, {2, 0}, {0, 1}}));
    CHECK(isomorphic(tri, complete(3)));
}

TEST_CASE("is_planar fixtures") {
    CHECK_FALSE(is_planar(complete(5)));
    CHECK(is_planar(complete(4)));
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
    CHECK(is_planar(con(underlying_graph(family("prism", 4))))); // con(cube) = K4 + K4
}

TEST_CASE("planarity witness rebuilds through from_rotation") {
    std::vector<std::vector<int>> witness;
    const Graph cubeg = underlying_graph(family("prism", 4));
    REQUIRE(is_planar(cubeg, &witness));
    const PlaneMap rebuilt = PlaneMap::from_rotation(witness);
    CHECK(rebuilt.vertex_count() == 8);
    CHECK(rebuilt.edge_count() == 12);
    CHECK(isomorphic(underlying_graph(rebuilt), cubeg));
}

TEST_CASE("planarity fast path on dense graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(rng, 10, 0.8);
        if (g.size() > 3 * g.order() - 6) CHECK_FALSE(is_planar(g));
    }
}

TEST_CASE("is_planar agrees with the Kuratowski subdivision search") {
    std::mt19937 rng(20240818);
    int planar_seen = 0, nonplanar_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 6); // 5..10
        const double p = 0.25 + 0.08 * static_cast<double>(rng() % 6);
        const Graph g = random_graph(rng, n, p);
        const bool fast = is_planar(g);
        CHECK(fast == kuratowski_free(g));
        (fast ? planar_seen : nonplanar_seen)++;
    }
    CHECK(planar_seen > 20);
    CHECK(nonplanar_seen > 20);

    for (int n = 4; n <= 7; ++n) {
        for (const auto& m : polyhedra(n)) {
            CHECK(is_planar(underlying_graph(m)));
            CHECK(kuratowski_free(underlying_graph(m)));
            const Graph cg = con(underlying_graph(m));
            if (cg.order() <= 12) CHECK(is_planar(cg) == kuratowski_free(cg));
        }
    }
}

TEST_CASE("is_k_connected") {
    CHECK(is_k_connected(underlying_graph(family("prism", 4)), 3));
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_FALSE(is_k_connected(path, 2));
    CHECK(is_k_connected(underlying_graph(family("prism", 3)), 3));
    CHECK_THROWS_WITH_AS(is_k_connected(complete(6), 4), doctest::Contains("KTooLarge"), Error);
    CHECK_THROWS_AS(is_k_connected(complete(3), 3), Error); // needs p > k
}

TEST_CASE("classify fixtures") {
    const GraphClass cube = classify(underlying_graph(family("prism", 4)));
    CHECK(cube.bipartite);
    CHECK(cube.planar);
    CHECK(cube.polyhedral);
    CHECK_FALSE(cube.maximal_planar);

    const GraphClass octa = classify(underlying_graph(family("antiprism", 3)));
    CHECK(octa.maximal_planar);
    CHECK(octa.polyhedral);
    CHECK_FALSE(octa.bipartite);

    const GraphClass k33 = classify(complete_bipartite(3, 3));
    CHECK(k33.bipartite);
    CHECK_FALSE(k33.planar);
    CHECK(k33.max_degree == 3);
}

TEST_CASE("polyhedral means planar and 3-connected") {
    for (int n = 4; n <= 7; ++n) {
        for (const auto& m : polyhedra(n)) {
            const Graph g = underlying_graph(m);
            const GraphClass c = classify(g);
            CHECK(c.polyhedral == (is_planar(g) && is_k_connected(g, 3) && g.order() >= 4));
            CHECK(c.polyhedral);
        }
    }
}

TEST_CASE("isomorphic fixtures and properties") {
    std::mt19937 rng(99);
    const Graph cube = underlying_graph(family("prism", 4));
    CHECK(isomorphic(cube, relabel_graph(cube, random_permutation(rng, 8))));
    CHECK_FALSE(isomorphic(underlying_graph(family("prism", 3)), complete_bipartite(3, 3)));

    const Graph k4 = complete(4);
    Graph two_a = Graph::disjoint_union(k4, underlying_graph(family("prism", 3)));
    Graph two_b = Graph::disjoint_union(underlying_graph(family("prism", 3)), k4);
    CHECK(isomorphic(two_a, two_b));

    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(rng, 9, 0.4);
        CHECK(isomorphic(g, g));
        CHECK(isomorphic(g, relabel_graph(g, random_permutation(rng, 9))));
    }
    // non-isomorphic pair with equal degree sequence: C6 vs two triangles
    Graph c6(6), tri2(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    for (int i : {0, 3}) {
        tri2.add_edge(i, i + 1);
        tri2.add_edge(i + 1, i + 2);
        tri2.add_edge(i, i + 2);
    }
    CHECK_FALSE(isomorphic(c6, tri2));
}

TEST_CASE("unique embedding of maximal planar graphs") {
    std::mt19937 rng(4242);
    for (int n = 4; n <= 8; ++n) {
        for (const auto& m : triangulations(n)) {
            const Graph g = underlying_graph(m);
            std::vector<std::vector<int>> witness;
            REQUIRE(is_planar(g, &witness));
            CHECK(PlaneMap::from_rotation(witness).canonical_code() == m.canonical_code());

            const auto perm = random_permutation(rng, n);
            std::vector<std::vector<int>> witness2;
            REQUIRE(is_planar(relabel_graph(g, perm), &witness2));
            CHECK(PlaneMap::from_rotation(witness2).canonical_code() == m.canonical_code());
        }
    }
}

TEST_CASE("edge-list JSON round trip") {
    const Graph g = underlying_graph(family("prism", 5));
    const Graph back = from_edge_json(to_edge_json(g));
    CHECK(back.order() == g.order());
    CHECK(back.edges() == g.edges());
    CHECK_THROWS_WITH_AS(from_edge_json("{\"p\": 3}"), doctest::Contains("MalformedInput"), Error);
}
