#include "bettikit/fuzz.hpp"

#include "bettikit/decomposition.hpp"
#include "bettikit/errors.hpp"
#include "bettikit/pure.hpp"

#include <exception>

namespace bettikit {

namespace {

std::string describe(const ConvexityViolation& v)
{
    return "t_" + std::to_string(v.p_prime) + " = " + std::to_string(v.lhs) + " > " + std::to_string(v.rhs) +
           " = t_" + std::to_string(v.i) + " + t_" + std::to_string(v.p_prime - v.i);
}

}  // namespace

CaseReport check_table(const MonomialIdeal& ideal, const BettiDiagram& table)
{
    CaseReport report;
    report.table = table;
    auto fail = [&](std::string what) { report.failures.push_back(std::move(what)); };
    const int n = ideal.nvars();

    const ModuleStats s = stats(table);
    for (int i = 1; i <= s.p; ++i)
        if (!s.has_column(i) || !s.has_column(i - 1) || s.dmin_at(i) <= s.dmin_at(i - 1))
            fail("min shifts not strictly increasing at column " + std::to_string(i));

    int cap = 0;
    for (const auto& [key, v] : table.entries())
        cap = std::max(cap, key.second);
    if (auto h = hilbert_check(ideal, table, cap); !h)
        fail("Hilbert series mismatch at degree " + std::to_string(*h.first_mismatch));

    try {
        const Decomposition d = decompose(table);
        report.terms = d.terms.size();
        if (reconstruct(d) != table)
            fail("reconstruction differs from the table");
        if (d.coefficient_sum() != s.mu)
            fail("coefficients sum to " + to_string(d.coefficient_sum()) + ", mu is " + to_string(s.mu));
        for (const auto& term : d.terms) {
            if (sgn(term.coefficient) <= 0)
                fail("nonpositive coefficient");
            const int len = term.degrees.length();
            for (int k = 0; k <= len; ++k) {
                const int dk = term.degrees[static_cast<std::size_t>(k)];
                if (k > s.p || dk < s.dmin_at(k) || dk > s.t_at(k))
                    fail("degree sequence " + to_string(term.degrees) + " leaves the min-shift/t envelope");
            }
        }
    } catch (const NotPeelable& e) {
        fail(std::string("decompose: ") + e.what());
    }

    const auto t1 = bound_T1(s);
    if (t1.front().applicable) {
        report.t1_checked = true;
        for (const auto& rec : t1)
            if (rec.satisfied == false)
                fail("T1 violated: " + rec.quantity + " = " + to_string(*rec.actual) + " > " + to_string(rec.value));
    }
    const auto t2 = bound_T2(s, n);
    if (t2.applicable) {
        report.t2_checked = true;
        if (t2.satisfied == false)
            fail("T2 violated: reg = " + to_string(*t2.actual) + " > " + to_string(t2.value));
    }

    for (const auto& v : convexity_scan(s, n))
        if (v.at_nvars) {
            report.convexity_at_nvars.push_back(v);
            if (n <= 3)
                fail("convexity violated with n <= 3: " + describe(v));
        }
    return report;
}

FuzzSummary run_fuzz(const FuzzConfig& config)
{
    const std::size_t count = config.count;
    std::vector<FuzzCase> cases(count);
    std::vector<int> outcome(count, 0);  // 0 checked, 1 too large
    std::vector<std::vector<std::string>> failures(count);
    std::vector<std::vector<std::string>> findings(count);
    std::vector<char> t1(count, 0);
    std::vector<char> t2(count, 0);

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(count); ++k) {
        const auto idx = static_cast<std::size_t>(k);
        FuzzCase& c = cases[idx];
        c.index = idx;
        c.seed = case_seed(config.seed, idx);
        try {
            const MonomialIdeal ideal = random_ideal(config.nvars, config.max_deg, config.num_gens, c.seed);
            c.ideal = format_ideal(ideal);
            const CaseReport report = check_table(ideal, betti_table(ideal, config.koszul));
            failures[idx] = report.failures;
            t1[idx] = report.t1_checked;
            t2[idx] = report.t2_checked;
            if (config.nvars > 3)
                for (const auto& v : report.convexity_at_nvars)
                    findings[idx].push_back(describe(v));
        } catch (const TooLarge& e) {
            outcome[idx] = 1;
            c.problem = e.what();
        } catch (const std::exception& e) {
            failures[idx].push_back(e.what());
        }
    }

    FuzzSummary summary;
    summary.cases = count;
    for (std::size_t k = 0; k < count; ++k) {
        if (outcome[k] == 1) {
            ++summary.skipped_too_large;
            continue;
        }
        ++summary.checked;
        summary.t1_checked += static_cast<std::size_t>(t1[k]);
        summary.t2_checked += static_cast<std::size_t>(t2[k]);
        for (const auto& f : failures[k]) {
            FuzzCase c = cases[k];
            c.problem = f;
            summary.failures.push_back(std::move(c));
        }
        for (const auto& f : findings[k]) {
            FuzzCase c = cases[k];
            c.problem = f;
            summary.convexity_findings.push_back(std::move(c));
        }
    }
    return summary;
}

}  // namespace bettikit
