// bettikit command-line front end.
//
// Exit codes: 0 success, 2 usage or input error, 3 a check found a violation.

#include "bettikit/bounds.hpp"
#include "bettikit/decomposition.hpp"
#include "bettikit/errors.hpp"
#include "bettikit/fuzz.hpp"
#include "bettikit/koszul.hpp"
#include "bettikit/monomial_ideal.hpp"
#include "bettikit/pure.hpp"
#include "bettikit/table_io.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace bettikit;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kError = 2;
constexpr int kViolation = 3;

struct Globals {
    bool json = false;
    bool quiet = false;
};

class Output {
public:
    explicit Output(const Globals& g) : g_(g) {}
    bool json() const { return g_.json; }
    void text(const std::string& s) const
    {
        if (!g_.quiet && !g_.json)
            std::cout << s;
    }
    void doc(const nlohmann::json& d) const
    {
        if (!g_.quiet && g_.json)
            std::cout << d.dump(2) << '\n';
    }

private:
    const Globals& g_;
};

std::vector<int> parse_int_list(const std::string& s, const char* what)
{
    std::vector<int> out;
    std::stringstream in(s);
    for (std::string tok; std::getline(in, tok, ',');) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size())
            throw Error(std::string("bad ") + what + " '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw Error(std::string("empty ") + what);
    return out;
}

std::string opt_int(const std::optional<int>& v)
{
    return v ? std::to_string(*v) : "-";
}

std::string stats_text(const ModuleStats& s)
{
    std::ostringstream os;
    os << "pd = " << s.p << ", reg = " << s.reg << ", mu = " << to_string(s.mu) << '\n';
    os << "t    = (";
    for (std::size_t i = 0; i < s.t.size(); ++i)
        os << (i ? "," : "") << opt_int(s.t[i]);
    os << ")\ndmin = (";
    for (std::size_t i = 0; i < s.dmin.size(); ++i)
        os << (i ? "," : "") << opt_int(s.dmin[i]);
    os << ")\n";
    return os.str();
}

std::string term_text(const DecompositionTerm& t)
{
    return to_string(t.coefficient) + " * pi" + to_string(t.degrees);
}

std::string violation_text(const ConvexityViolation& v)
{
    std::ostringstream os;
    os << "t_" << v.p_prime << " = " << v.lhs << " > " << v.rhs << " = t_" << v.i << " + t_" << (v.p_prime - v.i)
       << (v.at_nvars ? "  (p' = n)" : "") << '\n';
    return os.str();
}

int cmd_pure(const Output& out, const std::string& degrees)
{
    const DegreeSequence d(parse_int_list(degrees, "degree"));
    const BettiDiagram p = pure_diagram(d);
    out.text(format_table_text(p));
    out.doc({{"degrees", to_json(d)}, {"table", table_to_json(p)}});
    return kOk;
}

int cmd_decompose(const Output& out, const std::string& file)
{
    const BettiDiagram b = load_table_file(file);
    try {
        const Decomposition d = decompose(b);
        const bool round_trip = reconstruct(d) == b;
        const Rational mu = b.empty() ? Rational(0) : stats(b).mu;
        const bool mass = d.coefficient_sum() == mu;
        std::ostringstream os;
        for (const auto& t : d.terms)
            os << term_text(t) << '\n';
        os << "terms: " << d.terms.size() << '\n';
        os << "reconstruction: " << (round_trip ? "exact" : "MISMATCH") << '\n';
        os << "sum q = " << to_string(d.coefficient_sum()) << ", mu = " << to_string(mu) << (mass ? "" : "  MISMATCH")
           << '\n';
        out.text(os.str());
        out.doc({{"terms", to_json(d)},
                 {"reconstruction_exact", round_trip},
                 {"coefficient_sum", to_string(d.coefficient_sum())},
                 {"mu", to_string(mu)}});
        return round_trip && mass ? kOk : kViolation;
    } catch (const NotPeelable& e) {
        std::cerr << "bettikit: " << e.what() << '\n';
        std::ostringstream os;
        for (const auto& t : e.partial().terms)
            os << term_text(t) << '\n';
        os << "remainder:\n" << format_table_text(e.remainder());
        out.text(os.str());
        out.doc({{"error", "not-peelable"},
                 {"column", e.column()},
                 {"message", e.what()},
                 {"partial", to_json(e.partial())},
                 {"remainder", table_to_json(e.remainder())}});
        return kViolation;
    }
}

std::optional<int> resolve_nvars(const std::optional<int>& flag, const BettiDiagram& b)
{
    if (flag) {
        if (*flag < 1)
            throw Error("--nvars must be positive");
        return flag;
    }
    return b.nvars();
}

struct BoundsArgs {
    std::string file;
    std::optional<int> nvars;
    std::optional<int> dim, depth, codim;
    std::string regseq;
};

int cmd_bounds(const Output& out, const BoundsArgs& a)
{
    const BettiDiagram b = load_table_file(a.file);
    const auto n = resolve_nvars(a.nvars, b);
    if (!n)
        throw Error("the number of variables is unknown; pass --nvars");
    std::optional<DimensionInfo> info;
    if (a.dim || a.depth || a.codim || !a.regseq.empty()) {
        info.emplace();
        info->dim = a.dim;
        info->depth = a.depth;
        info->codim = a.codim;
        if (!a.regseq.empty())
            info->regular_sequence_degrees = parse_int_list(a.regseq, "regular sequence degree");
    }
    const ModuleStats s = stats(b);
    const BoundsReport report = bounds_report(s, *n, info);
    std::vector<ConvexityViolation> convexity;
    std::string convexity_note;
    try {
        convexity = convexity_scan(s, *n);
    } catch (const NotApplicable& e) {
        convexity_note = e.what();
    }

    bool violated = false;
    std::ostringstream os;
    os << stats_text(s) << '\n';
    os << std::left << std::setw(11) << "bound" << std::setw(13) << "quantity" << std::setw(14) << "value"
       << std::setw(9) << "actual" << "status\n";
    for (const auto& r : report.records) {
        std::string value = r.applicable ? to_string(r.value) : "-";
        if (value.size() > 13)
            value = value.substr(0, 6) + "..(" + std::to_string(value.size()) + "d)";
        std::string status;
        if (!r.applicable)
            status = "n/a: " + r.reason;
        else if (!r.satisfied)
            status = "applicable";
        else
            status = *r.satisfied ? "satisfied" : "VIOLATED";
        violated = violated || (r.satisfied && !*r.satisfied);
        os << std::setw(11) << r.name << std::setw(13) << r.quantity << std::setw(14) << value << std::setw(9)
           << (r.actual ? to_string(*r.actual) : "-") << status << '\n';
    }
    os << "\nconvexity (t_p' <= t_i + t_{p'-i}):\n";
    if (!convexity_note.empty())
        os << "  n/a: " << convexity_note << '\n';
    else if (convexity.empty())
        os << "  no violations\n";
    for (const auto& v : convexity)
        os << "  " << violation_text(v);
    out.text(os.str());

    json conv = json::array();
    for (const auto& v : convexity)
        conv.push_back(to_json(v));
    json doc{{"nvars", *n}, {"stats", to_json(s)}, {"bounds", to_json(report)}, {"convexity", conv}};
    if (!convexity_note.empty())
        doc["convexity_note"] = convexity_note;
    out.doc(doc);
    return violated ? kViolation : kOk;
}

int cmd_check(const Output& out, const std::string& file, const std::optional<int>& nvars_flag)
{
    const BettiDiagram b = load_table_file(file);
    const int n = resolve_nvars(nvars_flag, b).value_or(0);
    const ModuleStats s = stats(b);
    const auto violations = convexity_scan(s, n);
    std::ostringstream os;
    if (violations.empty())
        os << "no convexity violations\n";
    for (const auto& v : violations)
        os << violation_text(v);
    out.text(os.str());
    json list = json::array();
    for (const auto& v : violations)
        list.push_back(to_json(v));
    out.doc({{"violations", list}});
    return violations.empty() ? kOk : kViolation;
}

struct BettiArgs {
    std::string file;
    std::optional<int> nvars;
    std::uint32_t characteristic = 32003;
    std::size_t budget = KoszulOptions{}.cell_budget;
    bool hilbert = false;
};

int cmd_betti(const Output& out, const BettiArgs& a)
{
    const MonomialIdeal ideal = parse_ideal_text(read_file(a.file), a.nvars);
    KoszulOptions opt;
    opt.field = FieldChoice(a.characteristic);
    opt.cell_budget = a.budget;
    const BettiDiagram b = betti_table(ideal, opt);
    out.text(format_table_text(b));
    json doc{{"table", table_to_json(b)}, {"characteristic", a.characteristic}};
    int code = kOk;
    if (a.hilbert) {
        int cap = 0;
        for (const auto& [key, v] : b.entries())
            cap = std::max(cap, key.second);
        const HilbertCheck h = hilbert_check(ideal, b, cap);
        out.text(h.ok ? "hilbert check: ok through degree " + std::to_string(cap) + "\n"
                      : "hilbert check: FAILED at degree " + std::to_string(*h.first_mismatch) + "\n");
        doc["hilbert_check"] = {{"ok", h.ok}, {"cap", cap},
                                {"first_mismatch", h.first_mismatch ? json(*h.first_mismatch) : json(nullptr)}};
        if (!h.ok)
            code = kViolation;
    }
    out.doc(doc);
    return code;
}

int cmd_fuzz(const Output& out, const FuzzConfig& config)
{
    const FuzzSummary s = run_fuzz(config);
    std::ostringstream os;
    os << "cases " << s.cases << ", checked " << s.checked << ", skipped (too large) " << s.skipped_too_large << '\n';
    os << "T1 checked " << s.t1_checked << ", T2 checked " << s.t2_checked << '\n';
    os << "failures " << s.failures.size() << ", convexity findings at p' = n " << s.convexity_findings.size() << '\n';
    auto list = [&](const char* label, const std::vector<FuzzCase>& cases) {
        json arr = json::array();
        for (const auto& c : cases) {
            os << label << " case " << c.index << " (seed " << c.seed << "): " << c.problem << '\n';
            std::istringstream gens(c.ideal);
            for (std::string g; std::getline(gens, g);)
                os << "    " << g << '\n';
            arr.push_back({{"index", c.index}, {"seed", c.seed}, {"ideal", c.ideal}, {"problem", c.problem}});
        }
        return arr;
    };
    json failures = list("FAIL", s.failures);
    json findings = list("finding", s.convexity_findings);
    out.text(os.str());
    out.doc({{"cases", s.cases},
             {"checked", s.checked},
             {"skipped_too_large", s.skipped_too_large},
             {"t1_checked", s.t1_checked},
             {"t2_checked", s.t2_checked},
             {"failures", failures},
             {"convexity_findings", findings}});
    return s.failures.empty() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Betti table toolkit: pure diagrams, Boij-Soderberg decompositions, regularity bounds, "
                 "and Koszul Betti numbers of monomial ideals"};
    app.require_subcommand(1);
    Globals globals;
    app.add_flag("--json", globals.json, "structured JSON output");
    app.add_flag("-q,--quiet", globals.quiet, "suppress normal output; rely on the exit code");
    app.fallthrough();

    std::string pure_degrees;
    auto* pure = app.add_subcommand("pure", "normalized pure diagram of a degree sequence");
    pure->add_option("degrees", pure_degrees, "comma-separated d_0,...,d_s")->required();

    std::string decompose_file;
    auto* dec = app.add_subcommand("decompose", "greedy Boij-Soderberg decomposition of a table");
    dec->add_option("file", decompose_file, "table file (text or JSON)")->required()->check(CLI::ExistingFile);

    BoundsArgs bounds_args;
    auto* bnd = app.add_subcommand("bounds", "regularity and syzygy bounds for a table");
    bnd->add_option("file", bounds_args.file, "table file (text or JSON)")->required()->check(CLI::ExistingFile);
    bnd->add_option("--nvars", bounds_args.nvars, "number of variables n");
    bnd->add_option("--dim", bounds_args.dim, "dim S/I");
    bnd->add_option("--depth", bounds_args.depth, "depth S/I");
    bnd->add_option("--codim", bounds_args.codim, "codim S/I");
    bnd->add_option("--regseq", bounds_args.regseq, "degrees of a regular sequence in I, comma-separated");

    std::string check_file;
    std::optional<int> check_nvars;
    auto* chk = app.add_subcommand("check", "scan t_p' <= t_i + t_{p'-i}; exit 3 on violations");
    chk->add_option("file", check_file, "table file (text or JSON)")->required()->check(CLI::ExistingFile);
    chk->add_option("--nvars", check_nvars, "number of variables n (marks violations at p' = n)");

    BettiArgs betti_args;
    auto* bet = app.add_subcommand("betti", "Betti table of S/I for a monomial ideal");
    bet->add_option("file", betti_args.file, "ideal file")->required()->check(CLI::ExistingFile);
    bet->add_option("--nvars", betti_args.nvars, "number of variables (default: inferred)");
    bet->add_option("--char", betti_args.characteristic, "field characteristic: 0 or a prime (default 32003)");
    bet->add_option("--budget", betti_args.budget, "matrix cells allowed per strand");
    bet->add_flag("--hilbert-check", betti_args.hilbert, "check the table against the Hilbert series");

    FuzzConfig fuzz_config;
    auto* fz = app.add_subcommand("fuzz", "random ideals through every cross-check");
    fz->add_option("--nvars", fuzz_config.nvars, "variables")->check(CLI::Range(1, 8));
    fz->add_option("--max-deg", fuzz_config.max_deg, "largest generator degree")->check(CLI::PositiveNumber);
    fz->add_option("--gens", fuzz_config.num_gens, "generators drawn per ideal")->check(CLI::PositiveNumber);
    fz->add_option("--count", fuzz_config.count, "number of ideals");
    fz->add_option("--seed", fuzz_config.seed, "base seed");
    fz->add_option("--budget", fuzz_config.koszul.cell_budget, "matrix cells allowed per strand");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }

    const Output out(globals);
    try {
        if (*pure)
            return cmd_pure(out, pure_degrees);
        if (*dec)
            return cmd_decompose(out, decompose_file);
        if (*bnd)
            return cmd_bounds(out, bounds_args);
        if (*chk)
            return cmd_check(out, check_file, check_nvars);
        if (*bet)
            return cmd_betti(out, betti_args);
        if (*fz)
            return cmd_fuzz(out, fuzz_config);
    } catch (const std::exception& e) {
        std::cerr << "bettikit: error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
