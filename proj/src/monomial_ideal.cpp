#include "bettikit/monomial_ideal.hpp"

#include "bettikit/errors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bettikit {

int total_degree(std::span<const int> m)
{
    return std::accumulate(m.begin(), m.end(), 0);
}

bool divides(std::span<const int> a, std::span<const int> b)
{
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k])
            return false;
    return true;
}

bool grlex_before(std::span<const int> a, std::span<const int> b)
{
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db)
        return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void compositions(int nvars, int var, int left, Exponents& cur, std::vector<Exponents>& out)
{
    if (var == nvars - 1) {
        cur[static_cast<std::size_t>(var)] = left;
        out.push_back(cur);
        return;
    }
    for (int e = left; e >= 0; --e) {
        cur[static_cast<std::size_t>(var)] = e;
        compositions(nvars, var + 1, left - e, cur, out);
    }
    cur[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_degree(int nvars, int degree)
{
    std::vector<Exponents> out;
    if (nvars < 1 || degree < 0)
        return out;
    Exponents cur(static_cast<std::size_t>(nvars), 0);
    compositions(nvars, 0, degree, cur, out);
    return out;
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Exponents> generators) : nvars_(nvars)
{
    if (nvars < 1)
        throw std::invalid_argument("monomial ideal needs at least one variable");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != nvars)
            throw std::invalid_argument("generator has " + std::to_string(g.size()) + " exponents, expected " +
                                        std::to_string(nvars));
        if (std::any_of(g.begin(), g.end(), [](int e) { return e < 0; }))
            throw std::invalid_argument("negative exponent in generator");
        if (total_degree(g) == 0)
            throw std::invalid_argument("the unit ideal is not supported");
    }
    std::sort(generators.begin(), generators.end(),
              [](const Exponents& a, const Exponents& b) { return grlex_before(a, b); });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    // A divisor has degree <= its multiple, so it precedes it in grlex order.
    for (const auto& g : generators)
        if (std::none_of(generators_.begin(), generators_.end(), [&](const Exponents& h) { return divides(h, g); }))
            generators_.push_back(g);
}

bool MonomialIdeal::contains(std::span<const int> m) const
{
    return std::any_of(generators_.begin(), generators_.end(), [&](const Exponents& g) { return divides(g, m); });
}

namespace {

void lcm_walk(const std::vector<Exponents>& gens, std::size_t next, int depth, int max_depth, Exponents& lcm,
              std::vector<int>& caps)
{
    for (std::size_t g = next; g < gens.size(); ++g) {
        Exponents saved = lcm;
        for (std::size_t k = 0; k < lcm.size(); ++k)
            lcm[k] = std::max(lcm[k], gens[g][k]);
        auto& cap = caps[static_cast<std::size_t>(depth)];
        cap = std::max(cap, total_degree(lcm));
        if (depth + 1 < max_depth)
            lcm_walk(gens, g + 1, depth + 1, max_depth, lcm, caps);
        lcm = std::move(saved);
    }
}

}  // namespace

std::vector<int> taylor_degree_caps(const MonomialIdeal& ideal, std::optional<int> max_index)
{
    const int m = static_cast<int>(ideal.generators().size());
    const int top = std::min(m, max_index.value_or(m));
    std::vector<int> caps(static_cast<std::size_t>(std::max(top, 0)), 0);
    if (top <= 0)
        return caps;
    Exponents lcm(static_cast<std::size_t>(ideal.nvars()), 0);
    lcm_walk(ideal.generators(), 0, 0, top, lcm, caps);
    return caps;
}

std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

namespace {

/// Uniform integer in [0, bound) from the raw engine output, independent of
/// the standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return x % bound;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

MonomialIdeal random_ideal(int nvars, int max_deg, int num_gens, std::uint64_t seed)
{
    if (nvars < 1 || max_deg < 1 || num_gens < 1)
        throw std::invalid_argument("random_ideal needs nvars, max_deg, num_gens >= 1");
    std::mt19937_64 rng(seed);
    const auto n = static_cast<std::uint64_t>(nvars);

    std::vector<std::uint64_t> weights;
    for (int d = 1; d <= max_deg; ++d)
        weights.push_back(binomial(static_cast<std::uint64_t>(d) + n - 1, n - 1));
    const std::uint64_t total = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});

    std::vector<Exponents> gens;
    for (int g = 0; g < num_gens; ++g) {
        std::uint64_t u = uniform_below(rng, total);
        int degree = 1;
        while (u >= weights[static_cast<std::size_t>(degree - 1)]) {
            u -= weights[static_cast<std::size_t>(degree - 1)];
            ++degree;
        }
        // Stars and bars: pick n-1 bar slots out of degree+n-1 by selection sampling.
        Exponents e(n, 0);
        std::uint64_t slots = static_cast<std::uint64_t>(degree) + n - 1;
        std::uint64_t bars = n - 1;
        std::size_t var = 0;
        for (std::uint64_t pos = 0; pos < static_cast<std::uint64_t>(degree) + n - 1; ++pos, --slots) {
            if (bars > 0 && uniform_below(rng, slots) < bars) {
                --bars;
                ++var;
            } else {
                ++e[var];
            }
        }
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(nvars, std::move(gens));
}

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

int parse_int(std::string_view token, std::size_t line, const char* what)
{
    int value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end || token.empty())
        throw ParseError(line, std::string("bad ") + what + " '" + std::string(token) + "'");
    return value;
}

}  // namespace

MonomialIdeal parse_ideal_text(std::string_view text, std::optional<int> nvars)
{
    struct Factor {
        int var;
        int exp;
    };
    std::vector<Exponents> vectors;
    std::vector<std::pair<std::size_t, std::vector<Factor>>> symbolic;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
        if (line.empty())
            continue;
        if (line.find_first_not_of("0123456789 \t") == std::string::npos) {
            std::istringstream cells(line);
            Exponents e;
            for (std::string tok; cells >> tok;)
                e.push_back(parse_int(tok, lineno, "exponent"));
            if (nvars && static_cast<int>(e.size()) != *nvars)
                throw ParseError(lineno, "expected " + std::to_string(*nvars) + " exponents, got " +
                                             std::to_string(e.size()));
            if (!vectors.empty() && vectors.front().size() != e.size())
                throw ParseError(lineno, "exponent vector length differs from earlier lines");
            if (total_degree(e) == 0)
                throw ParseError(lineno, "constant generator (unit ideal)");
            vectors.push_back(std::move(e));
            continue;
        }
        std::vector<Factor> factors;
        std::string compact;
        for (char c : line)
            if (c != ' ' && c != '\t')
                compact.push_back(c);
        std::size_t start = 0;
        while (start <= compact.size()) {
            const std::size_t stop = std::min(compact.find('*', start), compact.size());
            const std::string_view tok = std::string_view(compact).substr(start, stop - start);
            if (tok.size() < 2 || tok[0] != 'x')
                throw ParseError(lineno, "expected a factor like x3 or x3^2, got '" + std::string(tok) + "'");
            const auto caret = tok.find('^');
            const int var = parse_int(tok.substr(1, caret == std::string_view::npos ? tok.npos : caret - 1), lineno,
                                      "variable index");
            const int exp = caret == std::string_view::npos ? 1 : parse_int(tok.substr(caret + 1), lineno, "exponent");
            if (var < 1)
                throw ParseError(lineno, "variables are numbered from x1");
            if (exp < 0)
                throw ParseError(lineno, "negative exponent");
            factors.push_back({var, exp});
            start = stop + 1;
        }
        symbolic.emplace_back(lineno, std::move(factors));
    }

    int n = nvars.value_or(0);
    if (!nvars) {
        if (!vectors.empty())
            n = static_cast<int>(vectors.front().size());
        for (const auto& [line, factors] : symbolic)
            for (const auto& f : factors)
                n = std::max(n, f.var);
    }
    if (!vectors.empty() && static_cast<int>(vectors.front().size()) != n)
        throw ParseError(0, "exponent vectors have " + std::to_string(vectors.front().size()) +
                                " entries but the ideal has " + std::to_string(n) + " variables");
    if (n < 1)
        throw ParseError(0, "cannot determine the number of variables");
    for (const auto& [line, factors] : symbolic) {
        Exponents e(static_cast<std::size_t>(n), 0);
        for (const auto& f : factors) {
            if (f.var > n)
                throw ParseError(line, "variable x" + std::to_string(f.var) + " exceeds nvars = " + std::to_string(n));
            e[static_cast<std::size_t>(f.var - 1)] += f.exp;
        }
        if (total_degree(e) == 0)
            throw ParseError(line, "constant generator (unit ideal)");
        vectors.push_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(vectors));
}

std::string format_monomial(std::span<const int> m)
{
    std::string out;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'x' + std::to_string(k + 1);
        if (m[k] > 1)
            out += '^' + std::to_string(m[k]);
    }
    return out.empty() ? "1" : out;
}

std::string format_ideal(const MonomialIdeal& ideal)
{
    std::string out;
    for (const auto& g : ideal.generators())
        out += format_monomial(g) + '\n';
    return out;
}

}  // namespace bettikit
