#include "bettikit/linalg.hpp"

#include <utility>

namespace bettikit {

namespace {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    // Fermat: a^(p-2)
    std::uint32_t result = 1;
    std::uint32_t base = a;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1u)
            result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::size_t rank_mod_p(DenseMatrix<std::uint32_t> m, std::uint32_t p)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m(pivot, c) == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        if (pivot != rank)
            for (std::size_t k = c; k < m.cols; ++k)
                std::swap(m(pivot, k), m(rank, k));
        const std::uint32_t inv = inverse_mod(m(rank, c), p);
        for (std::size_t k = c; k < m.cols; ++k)
            m(rank, k) = mul_mod(m(rank, k), inv, p);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            const std::uint32_t f = m(r, c);
            if (f == 0)
                continue;
            for (std::size_t k = c; k < m.cols; ++k)
                m(r, k) = static_cast<std::uint32_t>((m(r, k) + p - mul_mod(f, m(rank, k), p)) % p);
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_rational(DenseMatrix<BigInt> m)
{
    std::size_t rank = 0;
    BigInt prev(1);
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m(pivot, c) == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        if (pivot != rank)
            for (std::size_t k = 0; k < m.cols; ++k)
                std::swap(m(pivot, k), m(rank, k));
        const BigInt& piv = m(rank, c);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            for (std::size_t k = c + 1; k < m.cols; ++k) {
                BigInt v = piv * m(r, k) - m(r, c) * m(rank, k);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(r, k) = std::move(v);
            }
            m(r, c) = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

}  // namespace bettikit
