#pragma once

#include "bettikit/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bettikit {

/// Row-major dense matrix; the rank kernels consume it destructively.
template <typename T>
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}

    T& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// True when p is prime (trial division; p < 2^32).
bool is_prime(std::uint64_t p);

/// Rank over F_p by Gaussian elimination. Entries must already be reduced mod p.
std::size_t rank_mod_p(DenseMatrix<std::uint32_t> m, std::uint32_t p);

/// Rank over Q by Bareiss fraction-free elimination.
std::size_t rank_rational(DenseMatrix<BigInt> m);

}  // namespace bettikit
