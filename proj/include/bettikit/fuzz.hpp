#pragma once

#include "bettikit/bounds.hpp"
#include "bettikit/koszul.hpp"
#include "bettikit/monomial_ideal.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bettikit {

/// Outcome of the cross-module checks on one Koszul table.
struct CaseReport {
    BettiDiagram table;
    std::size_t terms = 0;
    bool t1_checked = false;
    bool t2_checked = false;
    std::vector<ConvexityViolation> convexity_at_nvars;
    std::vector<std::string> failures;  ///< empty when every check passed
};

/// Checks minimal shifts, the Hilbert consistency, decomposition round trip,
/// coefficient mass, tau bounds, T1, T2 and convexity at p' = n. A convexity
/// violation at p' = n is a failure for n <= 3, where T1 rules it out.
CaseReport check_table(const MonomialIdeal& ideal, const BettiDiagram& table);

struct FuzzConfig {
    int nvars = 3;
    int max_deg = 3;
    int num_gens = 4;
    std::size_t count = 100;
    std::uint64_t seed = 1;
    KoszulOptions koszul;
};

struct FuzzCase {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::string ideal;
    std::string problem;
};

struct FuzzSummary {
    std::size_t cases = 0;
    std::size_t checked = 0;
    std::size_t skipped_too_large = 0;
    std::size_t t1_checked = 0;
    std::size_t t2_checked = 0;
    std::vector<FuzzCase> failures;
    std::vector<FuzzCase> convexity_findings;  ///< violations at p' = n for n > 3
};

/// Seed of case k.
inline std::uint64_t case_seed(std::uint64_t seed, std::size_t k) { return mix_seed(seed + k); }

/// Cases run in parallel; results are aggregated in case order.
FuzzSummary run_fuzz(const FuzzConfig& config);

}  // namespace bettikit
