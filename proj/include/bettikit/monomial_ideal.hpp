#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bettikit {

using Exponents = std::vector<int>;

int total_degree(std::span<const int> m);
/// a | b.
bool divides(std::span<const int> a, std::span<const int> b);

/// Graded lexicographic comparison: lower total degree first; within a degree
/// the lexicographically larger vector (x1^k before x2^k) comes first.
bool grlex_before(std::span<const int> a, std::span<const int> b);

/// All exponent vectors of the given total degree in n variables, grlex order.
std::vector<Exponents> monomials_of_degree(int nvars, int degree);

/// Monomial ideal in n variables, stored as its minimal generators in grlex order.
class MonomialIdeal {
public:
    /// Drops duplicates and non-minimal generators. Throws std::invalid_argument
    /// on length mismatches, negative exponents or the unit ideal.
    MonomialIdeal(int nvars, std::vector<Exponents> generators);

    int nvars() const { return nvars_; }
    const std::vector<Exponents>& generators() const { return generators_; }
    bool is_zero() const { return generators_.empty(); }

    /// Membership of the monomial x^m.
    bool contains(std::span<const int> m) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int nvars_;
    std::vector<Exponents> generators_;
};

/// caps_i = max over i-subsets of generators of deg lcm, for i = 1..m, or
/// i = 1..max_index when given. Element 0 of the result is caps_1.
std::vector<int> taylor_degree_caps(const MonomialIdeal& ideal, std::optional<int> max_index = std::nullopt);

/// Deterministic in seed. Exponent vectors are uniform over total degree
/// 1..max_deg, then minimalized, so at most num_gens generators survive.
MonomialIdeal random_ideal(int nvars, int max_deg, int num_gens, std::uint64_t seed);

/// splitmix64 step, used to derive per-case seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// One generator per line, either "2 1 0" or "x1^2*x2"; '#' starts a comment.
/// nvars may be omitted when the text determines it.
MonomialIdeal parse_ideal_text(std::string_view text, std::optional<int> nvars = std::nullopt);

/// "x1^2*x2" form; "1" for the constant monomial.
std::string format_monomial(std::span<const int> m);
std::string format_ideal(const MonomialIdeal& ideal);

}  // namespace bettikit
