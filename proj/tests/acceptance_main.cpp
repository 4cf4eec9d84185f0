// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Bounds are fixed here; runtimes are informational.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "polycon/generators.hpp"
#include "polycon/graph.hpp"
#include "polycon/operators.hpp"
#include "polycon/planar_code.hpp"
#include "polycon/verifier.hpp"
#include "support/oracle.hpp"

using namespace polycon;
using namespace polycon::testsupport;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, double seconds,
            const std::string& detail = "") {
    std::printf("criterion %2d %s  %-58s (%.1f s)%s\n", criterion, ok ? "PASS" : "FAIL",
                what.c_str(), seconds, detail.empty() ? "" : ("  " + detail).c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

void run(int criterion, const std::string& what, const std::function<bool(std::string&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(criterion, what, ok, secs, detail);
}

bool claim_passes(const std::string& id, const ClaimLimits& lim, std::string& detail) {
    const VerificationReport rep = run_claim(id, lim);
    if (!rep.pass()) {
        detail = id + ": " + std::to_string(rep.counterexamples.size()) + " counterexamples";
        if (!rep.counterexamples.empty()) {
            detail += ", first: " + rep.counterexamples.front().detail;
        }
        return false;
    }
    detail += id + "=" + std::to_string(rep.checked) + " ";
    return true;
}

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

int main() {
    ClaimLimits lim; // defaults pin the acceptance bounds: 9 / 12 / 12 / 8

    run(1, "operator fixtures", [](std::string&) {
        bool ok = isomorphic(con(complete(4)), complete(4));
        ok = ok && isomorphic(con(complete_bipartite(3, 3)),
                              Graph::disjoint_union(complete(3), complete(3)));
        ok = ok && isomorphic(facecon(family("prism", 3)),
                              underlying_graph(family("antiprism", 3)));
        ok = ok && isomorphic(facecon(family("prism", 4)),
                              Graph::disjoint_union(complete(4), complete(4)));
        for (int n = 4; n <= 10 && ok; ++n) {
            for (const auto& t : triangulations(n)) {
                ok = ok && facecon(t).edges() == underlying_graph(t).edges();
            }
        }
        return ok;
    });

    run(2, "con-planarity equivalences, cubic polyhedra <= 12 faces",
        [&](std::string& d) { return claim_passes("THM1", lim, d); });

    run(3, "odd-vertex lemma, triangulations <= 12 vertices",
        [&](std::string& d) { return claim_passes("CUODD", lim, d); });

    run(4, "con-planarity classification, polyhedra <= 9 vertices", [&](std::string& d) {
        return claim_passes("THM0", lim, d) && claim_passes("THM2", lim, d);
    });

    run(5, "edge formulas and degree bounds", [&](std::string& d) {
        bool ok = claim_passes("EFCG", lim, d);
        ok = claim_passes("ECG_CUBIC", lim, d) && ok;
        ok = claim_passes("LE_QIJ", lim, d) && ok;
        ok = claim_passes("LE_2SQ", lim, d) && ok;
        ok = claim_passes("LE_DEG", lim, d) && ok;
        ok = claim_passes("COR_BDS", lim, d) && ok;
        return ok;
    });

    run(6, "extremal characterisations", [&](std::string& d) {
        bool ok = claim_passes("P_BD", lim, d);
        ok = claim_passes("P_BD2", lim, d) && ok;
        ok = claim_passes("P_MIN", lim, d) && ok;
        ok = claim_passes("P_3456", lim, d) && ok;
        return ok;
    });

    run(7, "construction equivalence (T1/T2 reconstruction), n <= 12",
        [&](std::string& d) { return claim_passes("THM_MAXPL", lim, d); });

    run(8, "evenisation postconditions, cubic <= 12 faces", [&](std::string& d) {
        const PlaneMap even_tet = evenise(family("pyramid", 3));
        if (even_tet.vertex_count() != 4 || even_tet.edge_count() != 4 ||
            even_tet.face_count() != 2) {
            d = "tetrahedron did not evenise to the 4-cycle";
            return false;
        }
        return claim_passes("EVENISE_POST", lim, d);
    });

    run(9, "radial/medial identities, polyhedra <= 8 vertices", [&](std::string& d) {
        if (radial(family("pyramid", 3)).canonical_code() !=
            family("prism", 4).canonical_code()) {
            d = "radial(tetrahedron) is not the cube";
            return false;
        }
        return claim_passes("RADIAL_ROUNDTRIP", lim, d);
    });

    run(10, "enumeration vs brute-force filter oracle, n <= 8", [](std::string& d) {
        for (int n = 4; n <= 8; ++n) {
            const BruteCounts counts = brute_force_counts(n);
            if (counts.triangulations != static_cast<long long>(triangulations(n).size()) ||
                counts.polyhedra != static_cast<long long>(polyhedra(n).size())) {
                d = "count mismatch at n = " + std::to_string(n);
                return false;
            }
            d += std::to_string(counts.polyhedra) + "/" + std::to_string(counts.triangulations) +
                 " ";
        }
        const std::string once = to_planar_code_stream(polyhedra(8));
        const std::string twice = to_planar_code_stream(polyhedra(8));
        if (once != twice) {
            d = "polyhedra(8) stream is not byte-identical across runs";
            return false;
        }
        return true;
    });

    run(11, "connectivity consequences", [&](std::string& d) {
        return claim_passes("P_2CONN", lim, d) && claim_passes("P_K24", lim, d);
    });

    if (failures == 0) {
        std::puts("acceptance: all criteria pass");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
