#pragma once

#include <map>
#include <string>
#include <vector>

#include "polycon/generators.hpp"
#include "polycon/plane_map.hpp"

namespace polycon {

struct ClaimLimits {
    int max_vertices = 9;        // general-polyhedron universes
    int max_faces = 12;          // cubic universes (dual order) and triangulation order
    int max_constructible = 12;  // construction-equivalence bound
    int max_radial_vertices = 8; // radial/medial identity bound
    long long budget = 50'000'000; // instance budget, cf. POLYCON_BUDGET
    int workers = 1;
    T2Layout t2_layout = T2Layout::Standard;
};

struct Counterexample {
    std::string planar_code_hex;
    std::string detail;

    bool operator==(const Counterexample&) const = default;
    bool operator<(const Counterexample& o) const {
        return std::tie(planar_code_hex, detail) < std::tie(o.planar_code_hex, o.detail);
    }
};

/// Outcome of scanning one claim over its instance universe. A claim passes
/// when the counterexample list equals the expected one (empty for every
/// claim except the planted negative control).
struct VerificationReport {
    std::string claim;
    std::string universe;
    std::map<std::string, long long> limits;
    long long checked = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<Counterexample> expected_counterexamples;
    double elapsed_s = 0.0;

    bool pass() const { return counterexamples == expected_counterexamples; }
    std::string to_json(bool include_elapsed = true) const;
};

const std::vector<std::string>& claim_ids();

/// Scan one claim. Throws LimitTooLarge when the estimated universe size
/// exceeds the budget.
VerificationReport run_claim(const std::string& id, const ClaimLimits& limits);

std::vector<VerificationReport> run_suite(const ClaimLimits& limits);

/// The cube with one added face diagonal: the smallest fixture whose odd
/// dual is K2.
PlaneMap cube_plus_diagonal();

} // namespace polycon
