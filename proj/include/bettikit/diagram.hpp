#pragma once

#include "bettikit/rational.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bettikit {

/// Strictly increasing integer tuple (d_0, ..., d_s) indexing a pure diagram.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<int> degrees);
    DegreeSequence(std::initializer_list<int> degrees) : DegreeSequence(std::vector<int>(degrees)) {}

    /// s, one less than the number of degrees.
    int length() const { return static_cast<int>(degrees_.size()) - 1; }
    std::size_t size() const { return degrees_.size(); }
    int operator[](std::size_t i) const { return degrees_[i]; }
    std::span<const int> degrees() const { return degrees_; }

    /// (d_0, ..., d_s) for s <= length().
    DegreeSequence truncate(int s) const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    /// Lexicographic; used for containers, not the partial order on sequences.
    friend auto operator<=>(const DegreeSequence& a, const DegreeSequence& b) { return a.degrees_ <=> b.degrees_; }

private:
    std::vector<int> degrees_;
};

/// d <= e componentwise. Sequences of different sizes are incomparable.
bool componentwise_le(const DegreeSequence& d, const DegreeSequence& e);

std::string to_string(const DegreeSequence& d);

/// Sparse table of positive rationals beta_{i,j}, keyed by homological index i
/// and internal degree j. Zero entries are never stored.
class BettiDiagram {
public:
    using Key = std::pair<int, int>;
    using Entries = std::map<Key, Rational>;

    BettiDiagram() = default;
    explicit BettiDiagram(std::optional<int> nvars) : nvars_(nvars) {}
    BettiDiagram(std::initializer_list<std::pair<const Key, Rational>> entries);

    /// Replaces the entry at (i, j); a zero value removes it. Negative values throw.
    void set(int i, int j, const Rational& value);
    /// Adds to the entry at (i, j). The sum must stay nonnegative.
    void add(int i, int j, const Rational& value);

    /// beta_{i,j}, zero when absent.
    Rational at(int i, int j) const;
    bool contains(int i, int j) const { return entries_.count({i, j}) != 0; }

    const Entries& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// Largest nonempty column index; -1 for the zero diagram.
    int max_column() const;
    /// Entries (j, beta_{i,j}) of column i by rising degree.
    std::vector<std::pair<int, Rational>> column(int i) const;

    std::optional<int> nvars() const { return nvars_; }
    void set_nvars(std::optional<int> n) { nvars_ = n; }

    bool minimal() const { return minimal_; }
    void set_minimal(bool flag) { minimal_ = flag; }

    /// c * B for c > 0.
    BettiDiagram scaled(const Rational& c) const;

    /// Equality is equality of the entry maps.
    friend bool operator==(const BettiDiagram& a, const BettiDiagram& b) { return a.entries_ == b.entries_; }

private:
    Entries entries_;
    std::optional<int> nvars_;
    bool minimal_ = false;
};

/// Invariants derived from a diagram. Columns that are empty (possible only
/// for hand-built or non-module tables) have no t or dmin value.
struct ModuleStats {
    std::vector<std::optional<int>> t;     ///< max shift per column, t_0..t_p
    std::vector<std::optional<int>> dmin;  ///< min shift per column
    int p = 0;
    int reg = 0;
    Rational mu;

    /// t_i, throwing NotApplicable when column i is absent or empty.
    int t_at(int i) const;
    int dmin_at(int i) const;
    bool has_column(int i) const { return i >= 0 && i <= p && t[static_cast<std::size_t>(i)].has_value(); }
};

ModuleStats stats(const BettiDiagram& b);

/// B - q * P, removing entries that reach zero. Throws NegativeEntry.
BettiDiagram scale_subtract(const BettiDiagram& b, const Rational& q, const BettiDiagram& p);

inline DegreeSequence truncate(const DegreeSequence& d, int s) { return d.truncate(s); }

}  // namespace bettikit
