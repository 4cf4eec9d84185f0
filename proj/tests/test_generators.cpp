#include "doctest.h"
#include "polycon/generators.hpp"
#include "polycon/graph.hpp"
#include "polycon/operators.hpp"
#include "support/oracle.hpp"

using namespace polycon;
using namespace polycon::testsupport;

TEST_CASE("family fixtures") {
    const PlaneMap p3 = family("prism", 3);
    CHECK(p3.vertex_count() == 6);
    CHECK(p3.edge_count() == 9);
    const FaceProfile fp = face_profile(p3);
    CHECK(fp.f(3) == 2);
    CHECK(fp.f(4) == 3);

    const PlaneMap pyr4 = family("pyramid", 4);
    CHECK(pyr4.vertex_count() == 5);
    CHECK(pyr4.edge_count() == 8);

    const PlaneMap anti4 = family("antiprism", 4);
    CHECK(anti4.vertex_count() == 8);
    CHECK(anti4.edge_count() == 16);
    const FaceProfile fa = face_profile(anti4);
    CHECK(fa.f(3) == 8);
    CHECK(fa.f(4) == 2);

    const PlaneMap icosa = family("platonic", 12);
    CHECK(icosa.edge_count() == 30);
    CHECK(face_profile(icosa).f(3) == 20);
    const PlaneMap dodeca = family("platonic", 20);
    CHECK(dodeca.edge_count() == 30);
    CHECK(face_profile(dodeca).f(5) == 12);

    CHECK_THROWS_WITH_AS(family("torus", 5), doctest::Contains("UnknownFamily"), Error);
}

TEST_CASE("triangulation counts") {
    CHECK(triangulations(4).size() == 1);
    CHECK(triangulations(5).size() == 1);
    CHECK(triangulations(6).size() == 2);
    CHECK(triangulations(7).size() == 5);
    CHECK(triangulations(8).size() == 14);
    for (int n = 4; n <= 8; ++n) {
        for (const auto& t : triangulations(n)) {
            CHECK(t.edge_count() == 3 * n - 6);
            for (int f = 0; f < t.face_count(); ++f) CHECK(t.face_length(f) == 3);
        }
    }
}

TEST_CASE("polyhedron counts") {
    CHECK(polyhedra(4).size() == 1);
    CHECK(polyhedra(5).size() == 2);
    CHECK(polyhedra(6).size() == 7);
    CHECK(polyhedra(7).size() == 34);
    for (int n = 4; n <= 7; ++n) {
        for (const auto& m : polyhedra(n)) {
            CHECK(is_k_connected(underlying_graph(m), 3));
        }
    }
}

TEST_CASE("enumeration counts match the brute-force filter oracle") {
    for (int n = 4; n <= 7; ++n) {
        const BruteCounts counts = brute_force_counts(n);
        CHECK(counts.triangulations == static_cast<long long>(triangulations(n).size()));
        CHECK(counts.polyhedra == static_cast<long long>(polyhedra(n).size()));
    }
}

TEST_CASE("enumeration is deterministic") {
    auto codes = [](const std::vector<PlaneMap>& maps) {
        std::vector<std::string> out;
        for (const auto& m : maps) out.push_back(m.canonical_code());
        return out;
    };
    const auto first = codes(polyhedra(6));
    const auto second = codes(polyhedra(6));
    CHECK(first == second);
    CHECK(std::is_sorted(first.begin(), first.end()));
}

TEST_CASE("T1 from the triangle seed builds the prism") {
    TransformState s = seed_triangle();
    TransformStep step;
    step.kind = TransformKind::T1;
    step.face = {0, 1, 2};
    const TransformState prism = apply_transform(s, step);
    CHECK(prism.map.vertex_count() == 6);
    CHECK(prism.map.edge_count() == 9);
    CHECK(prism.map.canonical_code() == family("prism", 3).canonical_code());
    CHECK(isomorphic(facecon(prism.map), underlying_graph(family("antiprism", 3))));
    CHECK(prism.red_faces.empty());
}

TEST_CASE("T3 with a tetrahedral payload turns the seed into K4") {
    TransformState s = seed_triangle();
    TransformStep step;
    step.kind = TransformKind::T3;
    step.face = {0, 1, 2};
    step.payload = family("pyramid", 3);
    step.payload_face = 0;
    const TransformState k4 = apply_transform(s, step);
    CHECK(k4.map.vertex_count() == 4);
    CHECK(k4.map.canonical_code() == family("pyramid", 3).canonical_code());
}

TEST_CASE("T2 from the seed gives the 7-vertex three-quad polyhedron") {
    TransformState s = seed_triangle();
    TransformStep step;
    step.kind = TransformKind::T2;
    step.face = {0, 1, 2};
    const TransformState t = apply_transform(s, step);
    CHECK(t.map.vertex_count() == 7);
    CHECK(t.map.edge_count() == 12);
    const FaceProfile fp = face_profile(t.map);
    CHECK(fp.f(4) == 3);
    CHECK(t.red_faces.size() == 1);
    const Graph fc = facecon(t.map);
    CHECK(fc.size() == 15);
    CHECK(is_maximal_planar(fc));
}

TEST_CASE("transform errors") {
    TransformState s = seed_triangle();
    TransformStep t1;
    t1.kind = TransformKind::T1;
    t1.face = {0, 2, 1};
    const TransformState prism = [&] {
        TransformStep ok;
        ok.kind = TransformKind::T1;
        ok.face = {0, 1, 2};
        return apply_transform(s, ok);
    }();

    // a quad face of the prism is not a triangle
    int quad = -1;
    for (int f = 0; f < prism.map.face_count(); ++f) {
        if (prism.map.face_length(f) == 4) quad = f;
    }
    const auto qwalk = prism.map.face_walk(quad);
    TransformStep bad;
    bad.kind = TransformKind::T1;
    bad.face = {qwalk[0], qwalk[1], qwalk[2]};
    CHECK_THROWS_WITH_AS(apply_transform(prism, bad), doctest::Contains("NotTriangular"), Error);

    // inner triangle of a fresh T1 site has quads across each edge
    for (int f = 0; f < prism.map.face_count(); ++f) {
        if (prism.map.face_length(f) != 3) continue;
        const auto w = prism.map.face_walk(f);
        TransformStep again;
        again.kind = TransformKind::T1;
        again.face = {w[0], w[1], w[2]};
        CHECK_THROWS_WITH_AS(apply_transform(prism, again),
                             doctest::Contains("PreconditionTriangleMissing"), Error);
    }

    // red faces may never be targeted
    TransformStep t2;
    t2.kind = TransformKind::T2;
    t2.face = {0, 1, 2};
    const TransformState marked = apply_transform(s, t2);
    REQUIRE(marked.red_faces.size() == 1);
    const auto red = marked.red_faces.front();
    const int red_face = [&] {
        for (int f = 0; f < marked.map.face_count(); ++f) {
            if (marked.map.face_length(f) != 3) continue;
            auto w = marked.map.face_walk(f);
            std::sort(w.begin(), w.end());
            if (std::array<int, 3>{w[0], w[1], w[2]} == red) return f;
        }
        return -1;
    }();
    REQUIRE(red_face != -1);
    const auto rwalk = marked.map.face_walk(red_face);
    TransformStep into_red;
    into_red.kind = TransformKind::T3;
    into_red.face = {rwalk[0], rwalk[1], rwalk[2]};
    into_red.payload = family("pyramid", 3);
    CHECK_THROWS_WITH_AS(apply_transform(marked, into_red), doctest::Contains("RedTarget"), Error);

    TransformStep junk;
    junk.kind = TransformKind::T3;
    junk.face = {0, 1, 2};
    junk.payload = family("prism", 3); // not a triangulation
    CHECK_THROWS_WITH_AS(apply_transform(s, junk), doctest::Contains("InvalidPayload"), Error);
}

TEST_CASE("constructible stream basics") {
    const auto stream = enumerate_constructible(7);
    CHECK(!stream.empty());
    int smallest_nontri_edges = 1 << 20;
    for (const auto& c : stream) {
        CHECK(c.map.edge_count() % 3 == 0);
        int maxlen = 0;
        for (int f = 0; f < c.map.face_count(); ++f) {
            maxlen = std::max(maxlen, c.map.face_length(f));
        }
        CHECK(maxlen <= 4);
        CHECK(is_maximal_planar(facecon(c.map)));
        if (c.map.edge_count() != 3 * c.map.vertex_count() - 6) {
            smallest_nontri_edges = std::min(smallest_nontri_edges, c.map.edge_count());
        }
        // every emitted map carries a script that reproduces it
        TransformState replay = seed_triangle();
        for (const auto& step : c.script) replay = apply_transform(replay, step);
        CHECK(replay.map.canonical_code() == c.map.canonical_code());
    }
    CHECK(smallest_nontri_edges == 9);

    // triangulations are all constructible
    for (int n = 4; n <= 7; ++n) {
        for (const auto& t : triangulations(n)) {
            const std::string code = t.canonical_code();
            bool found = false;
            for (const auto& c : stream) found = found || c.map.canonical_code() == code;
            CHECK(found);
        }
    }
}

TEST_CASE("script JSON serialization") {
    const auto stream = enumerate_constructible(6);
    REQUIRE(!stream.empty());
    for (const auto& c : stream) {
        const std::string j = script_json(c.script);
        CHECK(j.find("\"seed\":\"K3\"") != std::string::npos);
        CHECK(j.find("\"steps\"") != std::string::npos);
    }
}
