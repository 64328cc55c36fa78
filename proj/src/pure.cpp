#include "bettikit/pure.hpp"

#include "bettikit/errors.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bettikit {

Rational hk_beta(std::span<const int> d, int i)
{
    const int s = static_cast<int>(d.size()) - 1;
    if (s < 0 || i < 0 || i > s)
        throw std::out_of_range("Herzog-Kuhl index " + std::to_string(i) + " outside 0.." + std::to_string(s));
    BigInt num(1);
    BigInt den(1);
    for (int j = 1; j <= s; ++j) {
        if (j == i)
            continue;
        const long top = std::labs(static_cast<long>(d[j]) - d[0]);
        const long bottom = std::labs(static_cast<long>(d[j]) - d[i]);
        if (bottom == 0)
            throw DegenerateSequence("zero denominator |d_" + std::to_string(j) + " - d_" + std::to_string(i) + "|");
        num *= top;
        den *= bottom;
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

BettiDiagram pure_diagram(const DegreeSequence& d)
{
    BettiDiagram out;
    for (int i = 0; i <= d.length(); ++i)
        out.set(i, d[static_cast<std::size_t>(i)], hk_beta(d, i));
    return out;
}

}  // namespace bettikit
