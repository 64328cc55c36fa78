#pragma once

#include "bettikit/diagram.hpp"

#include <span>

namespace bettikit {

/// Herzog-Kuhl value beta_i(d) = prod_{1<=j<=s, j!=i} |d_j - d_0| / |d_j - d_i|.
/// Any integer tuple is accepted, monotone or not. Throws DegenerateSequence
/// when a denominator vanishes and std::out_of_range for a bad index.
Rational hk_beta(std::span<const int> d, int i);

inline Rational hk_beta(const DegreeSequence& d, int i) { return hk_beta(d.degrees(), i); }

/// Normalized pure diagram: entries (i, d_i) -> beta_i(d), with beta_{0,d_0} = 1.
BettiDiagram pure_diagram(const DegreeSequence& d);

}  // namespace bettikit
