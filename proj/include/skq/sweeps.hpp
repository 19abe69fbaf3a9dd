#pragma once
// Verification sweeps shared by the acceptance runner and the CLI.

#include <cstdint>

#include "skq/duality.hpp"

namespace skq {

struct SweepResult {
    std::string suite;
    std::string detail;
    long long cases = 0;
    long long failures = 0;
    nlohmann::json witnesses = nlohmann::json::array();  // first few failures
    double seconds = 0;
    bool informational = false;  // reported, but not part of a suite verdict

    bool pass() const { return cases > 0 && failures == 0; }
    void check(bool ok, const nlohmann::json& witness);
    nlohmann::json to_json() const;
};

struct SweepBounds {
    std::uint64_t seed = 1;
    int samples = 50;         // disk samples; the annulus uses samples_annulus
    int samples_annulus = 20;
    int max_weight = 3;       // parallel copies in basis enumerations
    int max_winding = 3;      // annulus spanning arcs
    int max_cheb = 3;         // annulus bracelets
    int max_boundary = 1;     // |exponent| of annulus boundary factors
    int min_n = 3, max_n = 6; // disk sizes where a sweep ranges over several
};

// basis element enumerations: disk multicurves with at most two classes
// (boundary classes may carry negative exponents when `signed_boundary`)
std::vector<Mono> disk_basis(int n, int max_copies, bool signed_boundary);
// annulus: spanning arcs (single or adjacent pair), bracelets, empty; times
// boundary factors
std::vector<Mono> annulus_basis(const SweepBounds& b, int max_boundary);

SweepResult sweep_anchor();
SweepResult sweep_matrices(int min_n, int max_n);
SweepResult sweep_tropical(const SweepBounds& b);
SweepResult sweep_flip_transport();
SweepResult sweep_lowest_term(const SweepBounds& b);
SweepResult sweep_pointed_x(const SweepBounds& b);
SweepResult sweep_square(const SweepBounds& b);
SweepResult sweep_trace_cut(const SweepBounds& b);
// loop times arc, the two-arc family, and the twisted-arc products: the
// literal floor/ceiling tail and the tail that the one-step recursion gives
std::vector<SweepResult> sweep_annulus_formulas(int n_max);
SweepResult sweep_positivity(const SweepBounds& b);
SweepResult sweep_ptolemy(int min_n, int max_n);
SweepResult sweep_containing_monomial(const SweepBounds& b);
SweepResult sweep_spanning(int bound);

// verdict over the non-informational parts
bool suite_passes(const std::vector<SweepResult>& parts);

}  // namespace skq
