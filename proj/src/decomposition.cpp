#include "bettikit/decomposition.hpp"

#include "bettikit/pure.hpp"

namespace bettikit {

Rational Decomposition::coefficient_sum() const
{
    Rational total(0);
    for (const auto& term : terms)
        total += term.coefficient;
    return total;
}

NotPeelable::NotPeelable(int column, const std::string& why, Decomposition partial, BettiDiagram remainder)
    : Error("not peelable at column " + std::to_string(column) + ": " + why),
      column_(column),
      partial_(std::move(partial)),
      remainder_(std::move(remainder))
{
}

DegreeSequence greedy_candidate(const BettiDiagram& b)
{
    if (b.empty())
        throw EmptyDiagram();
    const int p = b.max_column();
    std::vector<int> shifts;
    shifts.reserve(static_cast<std::size_t>(p) + 1);
    for (int k = 0; k <= p; ++k) {
        const auto col = b.column(k);
        if (col.empty())
            throw NotPeelable(k, "column is empty");
        const int lo = col.front().first;
        if (!shifts.empty() && lo <= shifts.back())
            throw NotPeelable(k, "min shift " + std::to_string(lo) + " does not exceed " + std::to_string(shifts.back()));
        shifts.push_back(lo);
    }
    return DegreeSequence(std::move(shifts));
}

Decomposition decompose(const BettiDiagram& b)
{
    Decomposition out;
    BettiDiagram rest = b;
    while (!rest.empty()) {
        DegreeSequence d = [&] {
            try {
                return greedy_candidate(rest);
            } catch (const NotPeelable& e) {
                throw NotPeelable(e.column(), "greedy candidate failed", out, rest);
            }
        }();
        const BettiDiagram pure = pure_diagram(d);
        std::optional<Rational> q;
        for (const auto& [key, value] : pure.entries()) {
            Rational ratio = rest.at(key.first, key.second) / value;
            if (!q || ratio < *q)
                q = std::move(ratio);
        }
        // Every candidate position holds a remainder entry, so q > 0 and the step zeroes at least one entry.
        rest = scale_subtract(rest, *q, pure);
        out.terms.push_back({std::move(d), std::move(*q)});
    }
    return out;
}

BettiDiagram reconstruct(const Decomposition& d)
{
    BettiDiagram out;
    for (const auto& term : d.terms) {
        const BettiDiagram pure = pure_diagram(term.degrees);
        for (const auto& [key, value] : pure.entries())
            out.add(key.first, key.second, term.coefficient * value);
    }
    return out;
}

}  // namespace bettikit
