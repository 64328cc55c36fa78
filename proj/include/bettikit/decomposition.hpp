#pragma once

#include "bettikit/diagram.hpp"
#include "bettikit/errors.hpp"

#include <vector>

namespace bettikit {

struct DecompositionTerm {
    DegreeSequence degrees;
    Rational coefficient;

    friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// Ordered list of (d, q_d) with every q_d > 0 and distinct d.
struct Decomposition {
    std::vector<DecompositionTerm> terms;

    Rational coefficient_sum() const;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Raised when the greedy peel cannot continue. Carries the terms found so far
/// and the remainder at which the candidate failed.
class NotPeelable : public Error {
public:
    NotPeelable(int column, const std::string& why, Decomposition partial = {}, BettiDiagram remainder = {});

    /// The offending column k.
    int column() const { return column_; }
    const Decomposition& partial() const { return partial_; }
    const BettiDiagram& remainder() const { return remainder_; }

private:
    int column_;
    Decomposition partial_;
    BettiDiagram remainder_;
};

/// Min-shift sequence of b over columns 0..p. Throws NotPeelable(k) when column
/// k < p is empty or the min shifts fail to increase at k.
DegreeSequence greedy_candidate(const BettiDiagram& b);

/// Greedy Boij-Soderberg peel: repeatedly subtract the largest multiple of the
/// pure diagram at the current min-shift sequence until nothing is left.
Decomposition decompose(const BettiDiagram& b);

/// Sum of q_d * pi(d).
BettiDiagram reconstruct(const Decomposition& d);

}  // namespace bettikit
