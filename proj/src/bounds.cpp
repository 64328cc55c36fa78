#include "bettikit/bounds.hpp"

#include "bettikit/errors.hpp"
#include "bettikit/pure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace bettikit {

namespace {

std::optional<std::string> not_cyclic(const ModuleStats& s)
{
    if (s.mu != 1)
        return "cyclic only (mu = " + to_string(s.mu) + ")";
    if (!s.has_column(0) || s.dmin_at(0) != 0)
        return "cyclic only (generator not in degree 0)";
    return std::nullopt;
}

BoundRecord inapplicable(std::string name, std::string quantity, std::string reason)
{
    BoundRecord rec;
    rec.name = std::move(name);
    rec.quantity = std::move(quantity);
    rec.applicable = false;
    rec.reason = std::move(reason);
    return rec;
}

BoundRecord applicable(std::string name, std::string quantity, Rational value, std::optional<Rational> actual)
{
    BoundRecord rec;
    rec.name = std::move(name);
    rec.quantity = std::move(quantity);
    rec.value = std::move(value);
    rec.applicable = true;
    rec.actual = std::move(actual);
    if (rec.actual)
        rec.satisfied = *rec.actual <= rec.value;
    return rec;
}

std::string t_name(int i) { return "t_" + std::to_string(i); }

/// max{t_i + t_{p-i} | 1 <= i <= p-1}; every t_i must be defined.
int convexity_max(const ModuleStats& s, int p)
{
    int best = std::numeric_limits<int>::min();
    for (int i = 1; i <= p - 1; ++i)
        best = std::max(best, s.t_at(i) + s.t_at(p - i));
    return best;
}

std::optional<std::string> missing_columns(const ModuleStats& s, int first, int last)
{
    for (int i = first; i <= last; ++i)
        if (!s.has_column(i))
            return t_name(i) + " undefined";
    return std::nullopt;
}

std::vector<int> t_range(const ModuleStats& s, int first, int last)
{
    std::vector<int> out;
    for (int i = first; i <= last; ++i)
        out.push_back(s.t_at(i));
    return out;
}

int max_shift_excess(const ModuleStats& s, int h)
{
    int best = std::numeric_limits<int>::min();
    for (int i = 1; i <= h; ++i)
        best = std::max(best, s.t_at(i) - i);
    return best;
}

int floor_of(const Rational& q)
{
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return static_cast<int>(f.get_si());
}

}  // namespace

std::vector<BoundRecord> bound_T1(const ModuleStats& s)
{
    const std::string tp = t_name(s.p);
    auto reason = not_cyclic(s);
    if (!reason && s.p < 2)
        reason = "pd < 2 (empty maximum)";
    if (!reason)
        reason = missing_columns(s, 1, s.p);
    if (reason)
        return {inapplicable("T1", tp, *reason), inapplicable("T1", "reg(S/I)", *reason)};

    const int m = convexity_max(s, s.p);
    return {applicable("T1", tp, m, Rational(s.t_at(s.p))),
            applicable("T1", "reg(S/I)", m - s.p, Rational(s.reg))};
}

Rational half_resolution_bound(std::span<const int> t)
{
    if (t.empty())
        throw std::invalid_argument("half_resolution_bound needs at least t_1");
    BigInt sum(0);
    BigInt product(1);
    for (int ti : t) {
        sum += ti;
        product *= ti;
    }
    Rational value(product, factorial(static_cast<unsigned>(t.size() - 1)));
    value.canonicalize();
    return value + sum;
}

BoundRecord bound_T2(const ModuleStats& s, int nvars)
{
    if (nvars < 1)
        throw std::invalid_argument("number of variables must be positive");
    const int h = (nvars + 1) / 2;
    auto reason = not_cyclic(s);
    if (!reason && s.p < h)
        reason = "pd " + std::to_string(s.p) + " < h = " + std::to_string(h);
    if (!reason)
        reason = missing_columns(s, 1, h);
    if (reason)
        return inapplicable("T2", "reg(S/I)", *reason);
    return applicable("T2", "reg(S/I)", half_resolution_bound(t_range(s, 1, h)), Rational(s.reg));
}

Rational beta_hypothesis(int d0, std::span<const int> t, int r, int s)
{
    const int h = static_cast<int>(t.size());
    if (s <= h)
        throw std::invalid_argument("beta_hypothesis needs s > h");
    std::vector<int> tuple;
    tuple.reserve(static_cast<std::size_t>(s) + 1);
    tuple.push_back(d0);
    tuple.insert(tuple.end(), t.begin(), t.end());
    for (int k = h + 1; k <= s; ++k)
        tuple.push_back(r + k);
    return hk_beta(tuple, s);
}

std::string to_string(P1Strategy strategy)
{
    switch (strategy) {
    case P1Strategy::L2: return "L2";
    case P1Strategy::L3: return "L3";
    case P1Strategy::NumericScan: return "numeric-scan";
    }
    return "?";
}

P1Certificate p1_certify(const ModuleStats& s, int h, P1Strategy strategy, ScanOptions options)
{
    if (h < 1 || h >= s.p)
        throw NotApplicable("need 1 <= h < pd, got h = " + std::to_string(h) + ", pd = " + std::to_string(s.p));
    if (auto missing = missing_columns(s, 0, h))
        throw NotApplicable(*missing);

    P1Certificate cert;
    cert.h = h;
    cert.mu = s.mu;
    cert.strategy = strategy;
    const std::vector<int> t = t_range(s, 1, h);
    const int floor_bound = max_shift_excess(s, h);

    switch (strategy) {
    case P1Strategy::L2: {
        if (auto reason = not_cyclic(s))
            throw NotApplicable("L2: " + *reason);
        if (h != s.p - 1)
            throw NotApplicable("L2 requires h = pd - 1");
        const int m = convexity_max(s, s.p);
        cert.threshold = m;
        cert.bound = std::max(m - s.p, floor_bound);
        cert.conclusive = true;
        const int r = cert.bound + 1;
        cert.largest_beta = ScanPoint{r, s.p, beta_hypothesis(0, t, r, s.p)};
        break;
    }
    case P1Strategy::L3: {
        if (auto reason = not_cyclic(s))
            throw NotApplicable("L3: " + *reason);
        if (2 * h < s.p)
            throw NotApplicable("L3 requires h >= ceil(pd/2)");
        cert.threshold = half_resolution_bound(t) - h;
        cert.bound = std::max(floor_of(cert.threshold), floor_bound);
        cert.conclusive = true;
        const int r = cert.bound + 1;
        for (int sidx = h + 1; sidx <= s.p; ++sidx) {
            Rational beta = beta_hypothesis(0, t, r, sidx);
            if (!cert.largest_beta || beta > cert.largest_beta->beta)
                cert.largest_beta = ScanPoint{r, sidx, std::move(beta)};
        }
        break;
    }
    case P1Strategy::NumericScan: {
        const int d0 = s.dmin_at(0);
        cert.scan_r_min = floor_bound + 1;
        cert.scan_r_max = options.r_max;
        if (cert.scan_r_max < cert.scan_r_min)
            throw NotApplicable("scan range is empty: r_max < " + std::to_string(cert.scan_r_min));
        std::vector<ScanPoint> passing;
        for (int r = cert.scan_r_min; r <= cert.scan_r_max; ++r)
            for (int sidx = h + 1; sidx <= s.p; ++sidx) {
                Rational beta = beta_hypothesis(d0, t, r, sidx);
                if (beta * s.mu >= 1) {
                    if (!cert.last_failure || r >= cert.last_failure->r)
                        cert.last_failure = ScanPoint{r, sidx, beta};
                } else {
                    passing.push_back({r, sidx, std::move(beta)});
                }
            }
        if (cert.last_failure && cert.last_failure->r == cert.scan_r_max)
            throw NotApplicable("beta_s >= 1/mu at the top of the scan range r = " + std::to_string(cert.scan_r_max));
        cert.bound = cert.last_failure ? cert.last_failure->r : floor_bound;
        cert.threshold = cert.bound;
        for (auto& point : passing)
            if (point.r > cert.bound && (!cert.largest_beta || point.beta > cert.largest_beta->beta))
                cert.largest_beta = std::move(point);
        cert.conclusive = false;
        break;
    }
    }
    return cert;
}

Rational elem_sym(std::span<const Rational> x, int i)
{
    if (i < 0 || i > static_cast<int>(x.size()))
        throw std::out_of_range("elementary symmetric index " + std::to_string(i) + " outside 0.." +
                                std::to_string(x.size()));
    // e[k] after processing a prefix holds sigma_k of that prefix.
    std::vector<Rational> e(static_cast<std::size_t>(i) + 1, Rational(0));
    e[0] = 1;
    for (const Rational& xv : x)
        for (int k = i; k >= 1; --k)
            e[static_cast<std::size_t>(k)] += xv * e[static_cast<std::size_t>(k - 1)];
    return e[static_cast<std::size_t>(i)];
}

std::vector<BoundRecord> bound_EHU(const ModuleStats& s, const std::optional<DimensionInfo>& info, int nvars)
{
    std::vector<BoundRecord> out;
    const std::string tn = t_name(nvars);
    if (!info) {
        out.push_back(inapplicable("EHU1", tn, "insufficient data"));
        out.push_back(inapplicable("EHU2", "t_{c+delta}", "insufficient data"));
        return out;
    }
    const auto cyclic = not_cyclic(s);

    // dim(S/I) <= 1 gives t_n <= t_i + t_{n-i}.
    if (cyclic) {
        out.push_back(inapplicable("EHU1", tn, *cyclic));
    } else if (!info->dim) {
        out.push_back(inapplicable("EHU1", tn, "insufficient data (dim)"));
    } else if (*info->dim > 1) {
        out.push_back(inapplicable("EHU1", tn, "dim(S/I) > 1"));
    } else if (nvars < 2 || !s.has_column(nvars)) {
        out.push_back(inapplicable("EHU1", tn, tn + " undefined"));
    } else {
        for (int i = 1; i <= nvars - 1; ++i) {
            const std::string name = "EHU1[i=" + std::to_string(i) + "]";
            if (auto missing = missing_columns(s, i, i); missing || !s.has_column(nvars - i))
                out.push_back(inapplicable(name, tn, missing ? *missing : t_name(nvars - i) + " undefined"));
            else
                out.push_back(applicable(name, tn, s.t_at(i) + s.t_at(nvars - i), Rational(s.t_at(nvars))));
        }
    }

    // delta = dim - depth <= 1 and a regular sequence of degrees d_1..d_q give
    // t_{c+delta} <= t_{c+delta-q} + d_1 + ... + d_q.
    const std::string t2 = "t_{c+delta}";
    if (cyclic) {
        out.push_back(inapplicable("EHU2", t2, *cyclic));
    } else if (!info->dim || !info->depth || !info->codim || info->regular_sequence_degrees.empty()) {
        out.push_back(inapplicable("EHU2", t2, "insufficient data (dim, depth, codim, regular sequence)"));
    } else {
        const int delta = *info->dim - *info->depth;
        const int q = static_cast<int>(info->regular_sequence_degrees.size());
        const int top = *info->codim + delta;
        const int base = top - q;
        const std::string quantity = t_name(top);
        if (delta > 1 || delta < 0)
            out.push_back(inapplicable("EHU2", quantity, "dim - depth = " + std::to_string(delta) + " not in {0,1}"));
        else if (base < 0)
            out.push_back(inapplicable("EHU2", quantity, "regular sequence longer than c + delta"));
        else if (!s.has_column(base))
            out.push_back(inapplicable("EHU2", quantity, t_name(base) + " undefined"));
        else {
            const int sum = std::accumulate(info->regular_sequence_degrees.begin(),
                                            info->regular_sequence_degrees.end(), 0);
            std::optional<Rational> actual;
            if (s.has_column(top))
                actual = s.t_at(top);
            out.push_back(applicable("EHU2", quantity, s.t_at(base) + sum, actual));
        }
    }
    return out;
}

BigInt bound_doubly_exponential(int d, int nvars)
{
    if (nvars < 2)
        throw NotApplicable("doubly exponential bound needs n >= 2");
    if (d < 1)
        throw NotApplicable("generator degree must be positive");
    // (2d)^(2^(n-2)) has about 2^(n-2) * log2(2d) bits; refuse anything past 2^26 bits.
    const double bits = std::ldexp(std::log2(2.0 * d), nvars - 2);
    if (bits > static_cast<double>(1u << 26))
        throw NotApplicable("(2d)^(2^(n-2)) exceeds 2^26 bits for d = " + std::to_string(d) +
                            ", n = " + std::to_string(nvars));
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2ul * static_cast<unsigned long>(d), 1ul << (nvars - 2));
    return out;
}

BoundRecord bound_Texp(const ModuleStats& s, int nvars)
{
    if (auto reason = not_cyclic(s))
        return inapplicable("Texp", "reg(I)", *reason);
    if (!s.has_column(1))
        return inapplicable("Texp", "reg(I)", "no generators (t_1 undefined)");
    try {
        BigInt value = bound_doubly_exponential(s.t_at(1), nvars);
        return applicable("Texp", "reg(I)", Rational(value), Rational(s.reg + 1));
    } catch (const NotApplicable& e) {
        return inapplicable("Texp", "reg(I)", e.what());
    }
}

std::vector<ConvexityViolation> convexity_scan(const ModuleStats& s, int nvars)
{
    if (auto reason = not_cyclic(s))
        throw NotApplicable("convexity scan: " + *reason);
    std::vector<ConvexityViolation> out;
    for (int pp = 2; pp <= s.p; ++pp) {
        if (!s.has_column(pp))
            continue;
        for (int i = 1; i <= pp - 1; ++i) {
            if (!s.has_column(i) || !s.has_column(pp - i))
                continue;
            const int lhs = s.t_at(pp);
            const int rhs = s.t_at(i) + s.t_at(pp - i);
            if (lhs > rhs)
                out.push_back({pp, i, lhs, rhs, pp == nvars});
        }
    }
    return out;
}

BoundsReport bounds_report(const ModuleStats& s, int nvars, const std::optional<DimensionInfo>& info)
{
    BoundsReport report;
    for (auto& rec : bound_T1(s))
        report.records.push_back(std::move(rec));
    report.records.push_back(bound_T2(s, nvars));
    for (auto& rec : bound_EHU(s, info, nvars))
        report.records.push_back(std::move(rec));
    report.records.push_back(bound_Texp(s, nvars));
    return report;
}

}  // namespace bettikit
