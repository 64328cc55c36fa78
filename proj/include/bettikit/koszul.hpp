#pragma once

// Graded Betti numbers of S/I for a monomial ideal I, computed as the
// homology of the Koszul complex on x_1..x_n tensored with S/I.
//
// The degree-j strand in homological degree i has basis (A, m) with A an
// i-subset of the variables and m a standard monomial of degree j - i. The
// differential sends (A, m) to sum_{a in A} sign(a, A) (A \ a, x_a m), with
// terms vanishing when x_a m lies in I. Then
//
//     beta_{i,j} = dim K_{i,j} - rank d_{i,j} - rank d_{i+1,j},
//
// and j only needs to run up to the Taylor cap of column i.
//
// Two kernels share that definition. betti_table_reference eliminates each
// strand as one dense matrix, serially. betti_table splits every strand into
// its Z^n-graded blocks (the differential preserves multidegree, so the rank
// of a strand is the sum of its block ranks) and runs the strands in parallel
// with OpenMP. Tests keep the two in agreement.

#include "bettikit/diagram.hpp"
#include "bettikit/monomial_ideal.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace bettikit {

/// Coefficient field: 0 for Q, otherwise a prime below 2^31.
class FieldChoice {
public:
    FieldChoice() = default;
    /// Throws std::invalid_argument unless characteristic is 0 or a prime < 2^31.
    explicit FieldChoice(std::uint32_t characteristic);

    static FieldChoice rationals() { return FieldChoice(0); }

    std::uint32_t characteristic() const { return characteristic_; }
    bool is_rational() const { return characteristic_ == 0; }

    friend bool operator==(FieldChoice, FieldChoice) = default;

private:
    std::uint32_t characteristic_ = 32003;
};

struct KoszulOptions {
    FieldChoice field;
    /// Matrix cells allowed per strand (dense strand for the reference kernel,
    /// total over blocks for the parallel one).
    std::size_t cell_budget = 2'000'000;
};

/// Minimal graded Betti table of S/I, flagged minimal. Throws TooLarge.
BettiDiagram betti_table(const MonomialIdeal& ideal, const KoszulOptions& options = {});

/// Serial dense-strand kernel with identical results.
BettiDiagram betti_table_reference(const MonomialIdeal& ideal, const KoszulOptions& options = {});

struct KoszulDims {
    std::size_t rows = 0;
    std::size_t cols = 0;
};

/// Shape of d_{i,j}: K_{i,j} -> K_{i-1,j}.
KoszulDims strand_shape(const MonomialIdeal& ideal, int i, int j);

struct HilbertCheck {
    bool ok = true;
    std::optional<int> first_mismatch;  ///< smallest degree where the two sides differ

    explicit operator bool() const { return ok; }
};

/// Compares sum (-1)^i beta_{i,j} t^j with HS_{S/I}(t) (1-t)^n through degree cap.
/// The Hilbert function is counted by enumerating standard monomials.
HilbertCheck hilbert_check(const MonomialIdeal& ideal, const BettiDiagram& b, int cap);

}  // namespace bettikit
