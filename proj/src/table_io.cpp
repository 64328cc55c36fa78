#include "bettikit/table_io.hpp"

#include "bettikit/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace bettikit {

using nlohmann::json;

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;)
        out.push_back(tok);
    return out;
}

std::optional<int> as_int(std::string_view s)
{
    int v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end)
        return std::nullopt;
    return v;
}

std::optional<Rational> parse_cell(const std::string& cell, std::size_t line)
{
    if (cell == "." || cell == "-")
        return std::nullopt;
    Rational q;
    try {
        q = parse_rational(cell);
    } catch (const ParseError& e) {
        throw ParseError(line, e.what());
    }
    if (sgn(q) < 0)
        throw ParseError(line, "negative entry '" + cell + "'");
    if (sgn(q) == 0)
        return std::nullopt;
    return q;
}

}  // namespace

BettiDiagram parse_table_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::optional<std::size_t> width;
    std::optional<std::pair<std::size_t, std::vector<std::string>>> total;
    std::map<int, std::size_t> seen_rows;
    BettiDiagram out;
    bool any_row = false;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
        if (line.empty())
            continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            const auto cells = split_ws(line);
            if (any_row || total || width)
                throw ParseError(lineno, "expected a row of the form 'k: ...'");
            for (std::size_t c = 0; c < cells.size(); ++c)
                if (as_int(cells[c]) != static_cast<int>(c))
                    throw ParseError(lineno, "header must list column indices 0, 1, 2, ...");
            width = cells.size();
            continue;
        }
        const std::string label = trim(std::string_view(line).substr(0, colon));
        const auto cells = split_ws(line.substr(colon + 1));
        if (!width)
            width = cells.size();
        if (cells.size() != *width)
            throw ParseError(lineno, "row has " + std::to_string(cells.size()) + " cells, expected " +
                                         std::to_string(*width));
        if (label == "total") {
            if (total)
                throw ParseError(lineno, "duplicate total row");
            total.emplace(lineno, cells);
            continue;
        }
        const auto row = as_int(label);
        if (!row)
            throw ParseError(lineno, "bad row label '" + label + "'");
        if (!seen_rows.emplace(*row, lineno).second)
            throw ParseError(lineno, "duplicate row " + label);
        any_row = true;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (auto q = parse_cell(cells[i], lineno))
                out.set(static_cast<int>(i), static_cast<int>(i) + *row, *q);
    }
    if (!any_row)
        throw ParseError(0, "no table rows");

    if (total) {
        const auto& [line, cells] = *total;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            Rational sum(0);
            for (const auto& [j, v] : out.column(static_cast<int>(i)))
                sum += v;
            const Rational declared = parse_cell(cells[i], line).value_or(Rational(0));
            if (declared != sum)
                throw ParseError(line, "total for column " + std::to_string(i) + " is " + to_string(declared) +
                                           " but the column sums to " + to_string(sum));
        }
    }
    if (!out.empty() && out.column(0).empty())
        throw ParseError(0, "column 0 is empty");
    return out;
}

std::string format_table_text(const BettiDiagram& b)
{
    const int p = std::max(b.max_column(), 0);
    int lo = 0;
    int hi = 0;
    bool first = true;
    for (const auto& [key, value] : b.entries()) {
        const int row = key.second - key.first;
        lo = first ? row : std::min(lo, row);
        hi = first ? row : std::max(hi, row);
        first = false;
    }

    std::vector<std::string> header;
    std::vector<std::string> totals;
    std::vector<std::size_t> widths;
    for (int i = 0; i <= p; ++i) {
        Rational sum(0);
        for (const auto& [j, v] : b.column(i))
            sum += v;
        header.push_back(std::to_string(i));
        totals.push_back(to_string(sum));
        widths.push_back(std::max(header.back().size(), totals.back().size()));
    }
    std::vector<std::vector<std::string>> rows;
    for (int k = lo; k <= hi; ++k) {
        std::vector<std::string> cells;
        for (int i = 0; i <= p; ++i) {
            const Rational v = b.at(i, i + k);
            cells.push_back(sgn(v) ? to_string(v) : ".");
            widths[static_cast<std::size_t>(i)] = std::max(widths[static_cast<std::size_t>(i)], cells.back().size());
        }
        rows.push_back(std::move(cells));
    }

    std::size_t label_width = 6;  // "total:"
    for (int k = lo; k <= hi; ++k)
        label_width = std::max(label_width, std::to_string(k).size() + 1);

    std::ostringstream os;
    auto emit = [&](const std::string& label, const std::vector<std::string>& cells) {
        os << std::string(label_width - label.size(), ' ') << label;
        for (std::size_t i = 0; i < cells.size(); ++i)
            os << ' ' << std::string(widths[i] - cells[i].size(), ' ') << cells[i];
        os << '\n';
    };
    emit("", header);
    emit("total:", totals);
    if (rows.empty())
        emit("0:", std::vector<std::string>(static_cast<std::size_t>(p) + 1, "."));
    for (int k = lo; k <= hi && !rows.empty(); ++k)
        emit(std::to_string(k) + ":", rows[static_cast<std::size_t>(k - lo)]);
    return os.str();
}

json table_to_json(const BettiDiagram& b)
{
    json entries = json::array();
    for (const auto& [key, value] : b.entries())
        entries.push_back({{"i", key.first}, {"j", key.second}, {"value", to_string(value)}});
    json doc;
    doc["format-version"] = kTableFormatVersion;
    doc["nvars"] = b.nvars() ? json(*b.nvars()) : json(nullptr);
    doc["minimal"] = b.minimal();
    doc["entries"] = std::move(entries);
    return doc;
}

BettiDiagram table_from_json(const json& doc)
{
    if (!doc.is_object())
        throw ParseError(0, "table document must be a JSON object");
    if (!doc.contains("format-version") || doc["format-version"] != kTableFormatVersion)
        throw ParseError(0, std::string("unsupported or missing format-version, expected ") + kTableFormatVersion);
    BettiDiagram out;
    if (doc.contains("nvars") && !doc["nvars"].is_null()) {
        if (!doc["nvars"].is_number_integer() || doc["nvars"].get<int>() < 1)
            throw ParseError(0, "nvars must be a positive integer or null");
        out.set_nvars(doc["nvars"].get<int>());
    }
    if (doc.contains("minimal")) {
        if (!doc["minimal"].is_boolean())
            throw ParseError(0, "minimal must be a boolean");
        out.set_minimal(doc["minimal"].get<bool>());
    }
    if (!doc.contains("entries") || !doc["entries"].is_array())
        throw ParseError(0, "entries must be an array");
    for (const auto& e : doc["entries"]) {
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("value") ||
            !e["i"].is_number_integer() || !e["j"].is_number_integer() || !e["value"].is_string())
            throw ParseError(0, "entry must be {\"i\": int, \"j\": int, \"value\": string}");
        const int i = e["i"].get<int>();
        const int j = e["j"].get<int>();
        if (i < 0)
            throw ParseError(0, "negative homological index");
        const Rational q = parse_rational(e["value"].get<std::string>());
        if (sgn(q) <= 0)
            throw ParseError(0, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") must be positive");
        if (out.contains(i, j))
            throw ParseError(0, "duplicate entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
        out.set(i, j, q);
    }
    return out;
}

std::string serialize_json_table(const BettiDiagram& b)
{
    return table_to_json(b).dump(2) + "\n";
}

BettiDiagram parse_json_table(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    return table_from_json(doc);
}

BettiDiagram parse_table_any(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return parse_json_table(text);
    return parse_table_text(text);
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

BettiDiagram load_table_file(const std::filesystem::path& path)
{
    return parse_table_any(read_file(path));
}

json to_json(const DegreeSequence& d)
{
    return json(std::vector<int>(d.degrees().begin(), d.degrees().end()));
}

json to_json(const Decomposition& d)
{
    json terms = json::array();
    for (const auto& t : d.terms)
        terms.push_back({{"degrees", to_json(t.degrees)}, {"coefficient", to_string(t.coefficient)}});
    return terms;
}

json to_json(const ModuleStats& s)
{
    auto column = [](const std::vector<std::optional<int>>& v) {
        json out = json::array();
        for (const auto& x : v)
            out.push_back(x ? json(*x) : json(nullptr));
        return out;
    };
    return {{"t", column(s.t)}, {"dmin", column(s.dmin)}, {"pd", s.p}, {"reg", s.reg}, {"mu", to_string(s.mu)}};
}

json to_json(const BoundRecord& r)
{
    json out{{"name", r.name}, {"quantity", r.quantity}, {"applicable", r.applicable}};
    if (r.applicable)
        out["value"] = to_string(r.value);
    else
        out["reason"] = r.reason;
    out["actual"] = r.actual ? json(to_string(*r.actual)) : json(nullptr);
    out["satisfied"] = r.satisfied ? json(*r.satisfied) : json(nullptr);
    return out;
}

json to_json(const BoundsReport& r)
{
    json out = json::array();
    for (const auto& rec : r.records)
        out.push_back(to_json(rec));
    return out;
}

json to_json(const ConvexityViolation& v)
{
    return {{"p_prime", v.p_prime}, {"i", v.i}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"at_nvars", v.at_nvars}};
}

json to_json(const P1Certificate& c)
{
    auto point = [](const std::optional<ScanPoint>& p) {
        return p ? json{{"r", p->r}, {"s", p->s}, {"beta", to_string(p->beta)}} : json(nullptr);
    };
    json out{{"h", c.h},
             {"bound", c.bound},
             {"mu", to_string(c.mu)},
             {"strategy", to_string(c.strategy)},
             {"threshold", to_string(c.threshold)},
             {"conclusive", c.conclusive},
             {"largest_beta", point(c.largest_beta)},
             {"last_failure", point(c.last_failure)}};
    if (c.strategy == P1Strategy::NumericScan)
        out["scan_r"] = {c.scan_r_min, c.scan_r_max};
    return out;
}

}  // namespace bettikit
