#pragma once

// Regularity and syzygy-degree bounds computed from the statistics of a
// Betti table, together with the certification machinery behind them.
//
// Every value is exact. A bound that does not apply to the given table is
// returned as a record with applicable == false and a reason, never as a
// fabricated number.

#include "bettikit/diagram.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bettikit {

struct BoundRecord {
    std::string name;      ///< "T1", "T2", "EHU1[i=2]", "EHU2", "Texp"
    std::string quantity;  ///< what is bounded: "t_6", "reg(S/I)", "reg(I)"
    Rational value;
    bool applicable = false;
    std::string reason;    ///< why the bound does not apply; empty otherwise
    std::optional<Rational> actual;
    /// actual <= value, set only when applicable and actual is known.
    std::optional<bool> satisfied;
};

struct BoundsReport {
    std::vector<BoundRecord> records;
};

/// Caller-supplied facts about S/I that cannot be read off a Betti table.
struct DimensionInfo {
    std::optional<int> dim;
    std::optional<int> depth;
    std::optional<int> codim;
    std::vector<int> regular_sequence_degrees;
};

/// t_p <= max{t_i + t_{p-i}} and reg <= that max minus p, for cyclic S/I with p >= 2.
/// Returns the t_p record followed by the reg record.
std::vector<BoundRecord> bound_T1(const ModuleStats& s);

/// sum_{i<=h} t_i + prod_{i<=h} t_i / (h-1)!, evaluated exactly; t holds t_1..t_h.
Rational half_resolution_bound(std::span<const int> t);

/// reg(S/I) bound from the first ceil(n/2) syzygy degrees.
BoundRecord bound_T2(const ModuleStats& s, int nvars);

/// beta_s of (d0, t_1..t_h, r+h+1, ..., r+s), with h = t.size() and s > h.
Rational beta_hypothesis(int d0, std::span<const int> t, int r, int s);

enum class P1Strategy { L2, L3, NumericScan };

std::string to_string(P1Strategy strategy);

struct ScanPoint {
    int r = 0;
    int s = 0;
    Rational beta;
};

/// Certificate that reg(M) <= bound.
///
/// For L2 the threshold is the lower limit on the final degree r + p, which
/// equals the t_p bound of T1. For L3 it is the lower limit on r. Numeric
/// scans only inspect r up to scan_r_max and are never conclusive.
struct P1Certificate {
    int h = 0;
    int bound = 0;
    Rational mu;
    P1Strategy strategy = P1Strategy::L2;
    Rational threshold;
    bool conclusive = false;
    int scan_r_min = 0;
    int scan_r_max = 0;
    std::optional<ScanPoint> largest_beta;  ///< largest beta_s among certified r
    std::optional<ScanPoint> last_failure;  ///< largest r with beta_s >= 1/mu
};

struct ScanOptions {
    /// Largest r tested by the numeric scan.
    int r_max = 1000;
};

/// Applies the beta < 1/mu criterion with the chosen strategy.
/// Throws NotApplicable when the strategy's preconditions fail.
P1Certificate p1_certify(const ModuleStats& s, int h, P1Strategy strategy, ScanOptions options = {});

/// i-th elementary symmetric polynomial of x; sigma_0 = 1.
Rational elem_sym(std::span<const Rational> x, int i);

/// Records for the two comparison bounds of Eisenbud-Huneke-Ulrich.
std::vector<BoundRecord> bound_EHU(const ModuleStats& s, const std::optional<DimensionInfo>& info, int nvars);

/// (2d)^(2^(n-2)) as an exact integer. Throws NotApplicable for n < 2 or d < 1.
BigInt bound_doubly_exponential(int d, int nvars);

/// reg(I) record for the doubly exponential bound with d = t_1.
BoundRecord bound_Texp(const ModuleStats& s, int nvars);

struct ConvexityViolation {
    int p_prime = 0;
    int i = 0;
    int lhs = 0;  ///< t_{p'}
    int rhs = 0;  ///< t_i + t_{p'-i}
    bool at_nvars = false;  ///< p' == n
};

/// Every (p', i) with 1 <= i < p' <= p where t_{p'} > t_i + t_{p'-i}.
std::vector<ConvexityViolation> convexity_scan(const ModuleStats& s, int nvars);

/// T1, T2, EHU and Texp in that order.
BoundsReport bounds_report(const ModuleStats& s, int nvars, const std::optional<DimensionInfo>& info);

}  // namespace bettikit
