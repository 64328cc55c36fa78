#include "bettikit/koszul.hpp"

#include "bettikit/errors.hpp"
#include "bettikit/linalg.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <map>
#include <stdexcept>

namespace bettikit {

FieldChoice::FieldChoice(std::uint32_t characteristic) : characteristic_(characteristic)
{
    if (characteristic != 0 && (characteristic >= (1u << 31) || !is_prime(characteristic)))
        throw std::invalid_argument("field characteristic must be 0 or a prime below 2^31, got " +
                                    std::to_string(characteristic));
}

namespace {

/// Standard monomials of S/I by degree, with reverse lookup. Read-only once built.
class StandardMonomials {
public:
    StandardMonomials(const MonomialIdeal& ideal, int max_degree) : n_(ideal.nvars())
    {
        by_degree_.resize(static_cast<std::size_t>(std::max(max_degree, 0)) + 1);
        index_.resize(by_degree_.size());
        for (int k = 0; k <= max_degree; ++k) {
            auto& list = by_degree_[static_cast<std::size_t>(k)];
            for (auto& m : monomials_of_degree(n_, k))
                if (!ideal.contains(m))
                    list.push_back(std::move(m));
            auto& idx = index_[static_cast<std::size_t>(k)];
            for (std::size_t a = 0; a < list.size(); ++a)
                idx.emplace(list[a], a);
        }
    }

    const std::vector<Exponents>& of_degree(int k) const
    {
        static const std::vector<Exponents> none;
        if (k < 0 || k >= static_cast<int>(by_degree_.size()))
            return none;
        return by_degree_[static_cast<std::size_t>(k)];
    }

    /// Position of m among the standard monomials of its degree, if standard.
    std::optional<std::size_t> find(const Exponents& m, int degree) const
    {
        const auto& idx = index_[static_cast<std::size_t>(degree)];
        auto it = idx.find(m);
        if (it == idx.end())
            return std::nullopt;
        return it->second;
    }

    int max_degree() const { return static_cast<int>(by_degree_.size()) - 1; }

private:
    int n_;
    std::vector<std::vector<Exponents>> by_degree_;
    std::vector<std::map<Exponents, std::size_t>> index_;
};

/// Subsets of {0..n-1} of size k as bitmasks, in binary-counter order.
std::vector<unsigned> subsets_of_size(int n, int k)
{
    std::vector<unsigned> out;
    if (k < 0 || k > n)
        return out;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) == k)
            out.push_back(mask);
    return out;
}

struct Entry {
    std::size_t row;
    int sign;
};

struct Column {
    Exponents multidegree;
    std::vector<Entry> entries;
};

/// Columns of d_{i,j} in layout order (subset-major, then grlex monomial),
/// each with its image expressed in rows of K_{i-1,j}.
struct Strand {
    std::size_t rows = 0;
    std::vector<Column> columns;
};

Strand build_strand(const StandardMonomials& basis, int n, int i, int j)
{
    Strand strand;
    if (i < 1 || i > n)
        return strand;
    const auto& sources = basis.of_degree(j - i);
    const auto& targets = basis.of_degree(j - i + 1);
    const auto source_sets = subsets_of_size(n, i);
    const auto target_sets = subsets_of_size(n, i - 1);
    strand.rows = target_sets.size() * targets.size();
    if (sources.empty())
        return strand;

    std::map<unsigned, std::size_t> target_rank;
    for (std::size_t r = 0; r < target_sets.size(); ++r)
        target_rank.emplace(target_sets[r], r);

    strand.columns.reserve(source_sets.size() * sources.size());
    for (unsigned mask : source_sets) {
        for (const auto& m : sources) {
            Column col;
            col.multidegree = m;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v))
                    ++col.multidegree[static_cast<std::size_t>(v)];
            int before = 0;
            for (int a = 0; a < n; ++a) {
                if (!(mask & (1u << a)))
                    continue;
                Exponents image = m;
                ++image[static_cast<std::size_t>(a)];
                if (auto pos = basis.find(image, j - i + 1)) {
                    const std::size_t row = target_rank.at(mask & ~(1u << a)) * targets.size() + *pos;
                    col.entries.push_back({row, (before % 2) ? -1 : 1});
                }
                ++before;
            }
            strand.columns.push_back(std::move(col));
        }
    }
    return strand;
}

template <typename Fill>
std::size_t rank_of(std::size_t rows, std::size_t cols, FieldChoice field, Fill fill)
{
    if (rows == 0 || cols == 0)
        return 0;
    if (field.is_rational()) {
        DenseMatrix<BigInt> m(rows, cols);
        fill([&](std::size_t r, std::size_t c, int sign) { m(r, c) = sign; });
        return rank_rational(std::move(m));
    }
    const std::uint32_t p = field.characteristic();
    DenseMatrix<std::uint32_t> m(rows, cols);
    fill([&](std::size_t r, std::size_t c, int sign) { m(r, c) = sign > 0 ? 1u : p - 1u; });
    return rank_mod_p(std::move(m), p);
}

void check_dimension(std::size_t dim, int i, int j, std::size_t budget)
{
    if (dim > budget)
        throw TooLarge(i, j, dim, budget);
}

std::size_t dense_strand_rank(const StandardMonomials& basis, int n, int i, int j, const KoszulOptions& opt)
{
    const Strand strand = build_strand(basis, n, i, j);
    const std::size_t cols = strand.columns.size();
    const std::size_t cells = strand.rows * cols;
    if (cells > opt.cell_budget)
        throw TooLarge(i, j, cells, opt.cell_budget);
    return rank_of(strand.rows, cols, opt.field, [&](auto&& put) {
        for (std::size_t c = 0; c < cols; ++c)
            for (const auto& e : strand.columns[c].entries)
                put(e.row, c, e.sign);
    });
}

std::size_t blocked_strand_rank(const StandardMonomials& basis, int n, int i, int j, const KoszulOptions& opt)
{
    const Strand strand = build_strand(basis, n, i, j);

    struct Block {
        std::vector<std::size_t> cols;
        std::map<std::size_t, std::size_t> rows;  // strand row -> block row
    };
    std::map<Exponents, Block> blocks;
    for (std::size_t c = 0; c < strand.columns.size(); ++c) {
        const auto& col = strand.columns[c];
        if (col.entries.empty())
            continue;
        Block& b = blocks[col.multidegree];
        b.cols.push_back(c);
        for (const auto& e : col.entries)
            b.rows.emplace(e.row, b.rows.size());
    }

    std::size_t cells = 0;
    for (const auto& [key, b] : blocks)
        cells += b.rows.size() * b.cols.size();
    if (cells > opt.cell_budget)
        throw TooLarge(i, j, cells, opt.cell_budget);

    std::size_t rank = 0;
    for (const auto& [key, b] : blocks)
        rank += rank_of(b.rows.size(), b.cols.size(), opt.field, [&](auto&& put) {
            for (std::size_t c = 0; c < b.cols.size(); ++c)
                for (const auto& e : strand.columns[b.cols[c]].entries)
                    put(b.rows.at(e.row), c, e.sign);
        });
    return rank;
}

std::size_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::size_t r = 1;
    for (int t = 1; t <= k; ++t)
        r = r * static_cast<std::size_t>(n - k + t) / static_cast<std::size_t>(t);
    return r;
}

/// The (i, j) ranges that can carry Betti numbers, and the ranks they need.
struct Plan {
    int top = 0;                               // largest possibly nonzero column
    std::vector<int> caps;                     // caps[i] for i = 0..top
    std::vector<std::pair<int, int>> ranks;    // (i, j) with d_{i,j} needed
    int max_degree = 0;                        // of standard monomials used
};

Plan make_plan(const MonomialIdeal& ideal)
{
    const int n = ideal.nvars();
    Plan plan;
    const auto taylor = taylor_degree_caps(ideal, n);
    plan.top = static_cast<int>(taylor.size());
    plan.caps.push_back(0);
    plan.caps.insert(plan.caps.end(), taylor.begin(), taylor.end());

    std::map<std::pair<int, int>, bool> needed;
    for (int i = 0; i <= plan.top; ++i)
        for (int j = i; j <= plan.caps[static_cast<std::size_t>(i)]; ++j) {
            if (i >= 1)
                needed[{i, j}] = true;
            if (i + 1 <= n)
                needed[{i + 1, j}] = true;
        }
    for (const auto& [key, unused] : needed) {
        plan.ranks.push_back(key);
        plan.max_degree = std::max(plan.max_degree, key.second - key.first + 1);
    }
    for (int i = 0; i <= plan.top; ++i)
        plan.max_degree = std::max(plan.max_degree, plan.caps[static_cast<std::size_t>(i)] - i);

    return plan;
}

BettiDiagram assemble(const MonomialIdeal& ideal, const Plan& plan, const StandardMonomials& basis,
                      const std::map<std::pair<int, int>, std::size_t>& rank)
{
    const int n = ideal.nvars();
    BettiDiagram out(n);
    out.set_minimal(true);
    auto rank_at = [&](int i, int j) -> std::size_t {
        auto it = rank.find({i, j});
        return it == rank.end() ? 0 : it->second;
    };
    for (int i = 0; i <= plan.top; ++i)
        for (int j = i; j <= plan.caps[static_cast<std::size_t>(i)]; ++j) {
            const std::size_t dim = binomial(n, i) * basis.of_degree(j - i).size();
            const std::size_t used = rank_at(i, j) + rank_at(i + 1, j);
            if (used > dim)
                throw std::logic_error("Koszul ranks exceed strand dimension");
            if (dim > used)
                out.set(i, j, Rational(static_cast<unsigned long>(dim - used)));
        }
    return out;
}

void check_basis_sizes(const Plan& plan, const StandardMonomials& basis, int n, const KoszulOptions& opt)
{
    for (const auto& [i, j] : plan.ranks)
        check_dimension(binomial(n, i) * basis.of_degree(j - i).size(), i, j, opt.cell_budget);
}

}  // namespace

BettiDiagram betti_table_reference(const MonomialIdeal& ideal, const KoszulOptions& options)
{
    const Plan plan = make_plan(ideal);
    const StandardMonomials basis(ideal, plan.max_degree);
    check_basis_sizes(plan, basis, ideal.nvars(), options);
    std::map<std::pair<int, int>, std::size_t> rank;
    for (const auto& [i, j] : plan.ranks)
        rank[{i, j}] = dense_strand_rank(basis, ideal.nvars(), i, j, options);
    return assemble(ideal, plan, basis, rank);
}

BettiDiagram betti_table(const MonomialIdeal& ideal, const KoszulOptions& options)
{
    const Plan plan = make_plan(ideal);
    const StandardMonomials basis(ideal, plan.max_degree);
    check_basis_sizes(plan, basis, ideal.nvars(), options);

    const auto count = static_cast<std::ptrdiff_t>(plan.ranks.size());
    std::vector<std::size_t> ranks(plan.ranks.size(), 0);
    std::vector<std::exception_ptr> errors(plan.ranks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        const auto [i, j] = plan.ranks[static_cast<std::size_t>(k)];
        try {
            ranks[static_cast<std::size_t>(k)] = blocked_strand_rank(basis, ideal.nvars(), i, j, options);
        } catch (...) {
            errors[static_cast<std::size_t>(k)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    std::map<std::pair<int, int>, std::size_t> rank;
    for (std::size_t k = 0; k < plan.ranks.size(); ++k)
        rank[plan.ranks[k]] = ranks[k];
    return assemble(ideal, plan, basis, rank);
}

KoszulDims strand_shape(const MonomialIdeal& ideal, int i, int j)
{
    const int n = ideal.nvars();
    if (i < 0 || i > n)
        return {};
    const StandardMonomials basis(ideal, std::max(j - i + 1, 0));
    KoszulDims dims;
    dims.cols = binomial(n, i) * basis.of_degree(j - i).size();
    dims.rows = i >= 1 ? binomial(n, i - 1) * basis.of_degree(j - i + 1).size() : 0;
    return dims;
}

HilbertCheck hilbert_check(const MonomialIdeal& ideal, const BettiDiagram& b, int cap)
{
    for (const auto& [key, value] : b.entries())
        if (key.second > cap)
            throw std::invalid_argument("hilbert_check cap " + std::to_string(cap) + " is below table degree " +
                                        std::to_string(key.second));
    const int n = ideal.nvars();
    std::vector<BigInt> hilbert(static_cast<std::size_t>(cap) + 1);
    for (int d = 0; d <= cap; ++d) {
        std::size_t count = 0;
        for (const auto& m : monomials_of_degree(n, d))
            if (!ideal.contains(m))
                ++count;
        hilbert[static_cast<std::size_t>(d)] = static_cast<unsigned long>(count);
    }

    HilbertCheck result;
    for (int d = 0; d <= cap; ++d) {
        // Coefficient of t^d in HS(t) * (1-t)^n.
        BigInt rhs(0);
        for (int k = 0; k <= n && k <= d; ++k) {
            BigInt term = hilbert[static_cast<std::size_t>(d - k)] * static_cast<unsigned long>(binomial(n, k));
            rhs += (k % 2) ? BigInt(-term) : term;
        }
        Rational lhs(0);
        for (const auto& [key, value] : b.entries())
            if (key.second == d)
                lhs += (key.first % 2) ? Rational(-value) : value;
        if (lhs != Rational(rhs)) {
            result.ok = false;
            result.first_mismatch = d;
            return result;
        }
    }
    return result;
}

}  // namespace bettikit
