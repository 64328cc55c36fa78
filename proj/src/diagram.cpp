#include "bettikit/diagram.hpp"

#include "bettikit/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace bettikit {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees))
{
    if (degrees_.empty())
        throw InvalidDegreeSequence("degree sequence must have at least one entry");
    for (std::size_t i = 1; i < degrees_.size(); ++i)
        if (degrees_[i - 1] >= degrees_[i])
            throw InvalidDegreeSequence("degree sequence " + to_string(*this) + " is not strictly increasing");
}

DegreeSequence DegreeSequence::truncate(int s) const
{
    if (s < 0 || s > length())
        throw std::out_of_range("truncation index " + std::to_string(s) + " outside 0.." + std::to_string(length()));
    return DegreeSequence(std::vector<int>(degrees_.begin(), degrees_.begin() + s + 1));
}

bool componentwise_le(const DegreeSequence& d, const DegreeSequence& e)
{
    if (d.size() != e.size())
        return false;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > e[i])
            return false;
    return true;
}

std::string to_string(const DegreeSequence& d)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < d.size(); ++i)
        os << (i ? "," : "") << d[i];
    os << ')';
    return os.str();
}

BettiDiagram::BettiDiagram(std::initializer_list<std::pair<const Key, Rational>> entries)
{
    for (const auto& [key, value] : entries)
        set(key.first, key.second, value);
}

void BettiDiagram::set(int i, int j, const Rational& value)
{
    if (i < 0)
        throw InvalidDiagram("negative homological index " + std::to_string(i));
    Rational v = value;
    v.canonicalize();
    if (sgn(v) < 0)
        throw NegativeEntry(i, j);
    if (sgn(v) == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = std::move(v);
}

void BettiDiagram::add(int i, int j, const Rational& value)
{
    set(i, j, at(i, j) + value);
}

Rational BettiDiagram::at(int i, int j) const
{
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Rational(0) : it->second;
}

int BettiDiagram::max_column() const
{
    return entries_.empty() ? -1 : entries_.rbegin()->first.first;
}

std::vector<std::pair<int, Rational>> BettiDiagram::column(int i) const
{
    std::vector<std::pair<int, Rational>> out;
    for (auto it = entries_.lower_bound({i, std::numeric_limits<int>::min()});
         it != entries_.end() && it->first.first == i; ++it)
        out.emplace_back(it->first.second, it->second);
    return out;
}

BettiDiagram BettiDiagram::scaled(const Rational& c) const
{
    if (sgn(c) <= 0)
        throw std::invalid_argument("scale factor must be positive");
    BettiDiagram out(nvars_);
    out.minimal_ = minimal_;
    for (const auto& [key, value] : entries_)
        out.entries_.emplace(key, value * c);
    return out;
}

int ModuleStats::t_at(int i) const
{
    if (!has_column(i))
        throw NotApplicable("t_" + std::to_string(i) + " is undefined");
    return *t[static_cast<std::size_t>(i)];
}

int ModuleStats::dmin_at(int i) const
{
    if (!has_column(i))
        throw NotApplicable("min shift of column " + std::to_string(i) + " is undefined");
    return *dmin[static_cast<std::size_t>(i)];
}

ModuleStats stats(const BettiDiagram& b)
{
    if (b.empty())
        throw EmptyDiagram();
    ModuleStats s;
    s.p = b.max_column();
    s.t.assign(static_cast<std::size_t>(s.p) + 1, std::nullopt);
    s.dmin.assign(static_cast<std::size_t>(s.p) + 1, std::nullopt);
    // Entries are ordered by (i, j): the first hit in a column is its min, the last its max.
    for (const auto& [key, value] : b.entries()) {
        const auto [i, j] = key;
        auto& lo = s.dmin[static_cast<std::size_t>(i)];
        if (!lo)
            lo = j;
        s.t[static_cast<std::size_t>(i)] = j;
        if (i == 0)
            s.mu += value;
    }
    if (!s.t[0])
        throw InvalidDiagram("column 0 of a nonzero diagram is empty");
    s.reg = std::numeric_limits<int>::min();
    for (int i = 0; i <= s.p; ++i)
        if (s.t[static_cast<std::size_t>(i)])
            s.reg = std::max(s.reg, *s.t[static_cast<std::size_t>(i)] - i);
    return s;
}

BettiDiagram scale_subtract(const BettiDiagram& b, const Rational& q, const BettiDiagram& p)
{
    if (sgn(q) <= 0)
        throw std::invalid_argument("scale_subtract needs a positive multiplier");
    BettiDiagram out = b;
    for (const auto& [key, value] : p.entries()) {
        const Rational rest = b.at(key.first, key.second) - q * value;
        if (sgn(rest) < 0)
            throw NegativeEntry(key.first, key.second);
        out.set(key.first, key.second, rest);
    }
    return out;
}

}  // namespace bettikit
