#include "ecodyck/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecodyck/chains.hpp"
#include "ecodyck/finite_rule.hpp"
#include "ecodyck/io.hpp"
#include "ecodyck/rule_operator.hpp"
#include "ecodyck/sequence.hpp"

namespace ecodyck::cli {

namespace {

using io::Format;
using nlohmann::json;

struct Common {
    std::string format = "pretty";
    std::string out_path;
    std::string mode = "fast";
    std::uint64_t guard = EnumerationGuard{}.max_objects;
};

Route parse_route(const std::string& mode)
{
    if (mode == "fast") return Route::fast;
    if (mode == "oracle") return Route::oracle;
    throw std::invalid_argument("unknown mode '" + mode + "' (expected fast or oracle)");
}

class OperationalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Renders into a buffer, then copies to the destination so a failed file
// open never leaves partial output behind.
int emit(const Common& c, std::ostream& out, const std::string& text)
{
    if (c.out_path.empty()) {
        out << text;
        return out ? exit_ok : exit_operational;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw OperationalError("cannot open '" + c.out_path + "' for writing");
    f << text;
    if (!f) throw OperationalError("write to '" + c.out_path + "' failed");
    return exit_ok;
}

std::string pretty_row(const std::vector<BigInt>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

json big_json(const std::vector<BigInt>& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

// --- rank ------------------------------------------------------------------

int cmd_rank(std::size_t n, const Common& c, std::ostream& out)
{
    if (n < 1) throw std::invalid_argument("--n must be at least 1");
    const auto route = parse_route(c.mode);
    std::vector<io::RankRow> rows;
    if (route == Route::fast) {
        auto polys = rank_polys_fast(n);
        for (std::size_t i = 0; i < polys.size(); ++i) rows.push_back({i + 1, std::move(polys[i])});
    } else {
        const EnumerationGuard g{c.guard};
        g.require(catalan(n), "oracle rank rows up to D_" + std::to_string(n));
        for (std::size_t i = 1; i <= n; ++i) rows.push_back({i, rank_poly(i, Route::oracle, g)});
    }
    std::ostringstream os;
    switch (io::parse_format(c.format)) {
    case Format::csv: io::write_rank_csv(os, rows); break;
    case Format::json: io::write_rank_json(os, rows); break;
    case Format::pretty: io::write_rank_pretty(os, rows); break;
    }
    return emit(c, out, os.str());
}

// --- chains ----------------------------------------------------------------

std::vector<io::IdentityResult> verify_identities(std::size_t n, Route route, const EnumerationGuard& g)
{
    std::vector<io::IdentityResult> r;
    r.push_back({"s_n = x*A_n - P_n = diff(r_n)", check_difference_identity(n, route, g)});
    r.push_back({"A_n^(k) = x^(k+1)*P_n^(k)", check_end_rank_shift(n, route, g)});
    r.push_back({"s_n = sum_k (x^(k+2)-1)*P_n^(k)", check_s_expansion(n, route, g)});
    if (n >= 3) {
        r.push_back({"q-ballot recurrence", check_qballot(n, route, g)});
        r.push_back({"q-ballot difference form", check_qballot_corollary(n, route, g)});
    }
    if (route == Route::oracle) r.push_back({"L^(n-2)(1) slices = P_n^(k)", check_operator_slices(n, g)});

    std::mt19937_64 rng(n);
    std::uniform_int_distribution<long> coeff(-5, 5);
    bool module_ok = true;
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<IntPoly> slices(1 + trial % 4);
        for (auto& s : slices) {
            std::vector<BigInt> cs(1 + static_cast<std::size_t>(trial));
            for (auto& v : cs) v = coeff(rng);
            s = IntPoly(std::move(cs));
        }
        module_ok = module_ok && check_module_homomorphism(BiPoly(std::move(slices)), static_cast<std::size_t>(trial));
    }
    r.push_back({"L(x^a p) = x^a L(p)", module_ok});
    if (n >= 3) r.push_back({"column recursion", check_column_recursion(n - 2)});
    return r;
}

int cmd_chains(std::size_t n, bool verify, const Common& c, std::ostream& out, std::ostream& err)
{
    if (n < 2) throw std::invalid_argument("--n must be at least 2");
    const auto route = parse_route(c.mode);
    const EnumerationGuard g{c.guard};
    const auto polys = ChainPolynomials::compute(n, route, g);
    const auto pm = polys.p_matrix();
    const auto am = polys.a_matrix();
    std::vector<io::IdentityResult> checks;
    if (verify) checks = verify_identities(n, route, g);

    std::ostringstream os;
    switch (io::parse_format(c.format)) {
    case Format::csv:
        io::write_matrix_csv(os, pm);
        os << '\n';
        io::write_matrix_csv(os, am);
        if (verify) {
            os << "\nidentity,holds\n";
            for (const auto& r : checks) os << r.name << ',' << (r.holds ? "true" : "false") << '\n';
        }
        break;
    case Format::json: io::write_chains_json(os, pm, am, checks); break;
    case Format::pretty:
        io::write_matrix_pretty(os, pm);
        io::write_matrix_pretty(os, am);
        for (const auto& r : checks) os << "verify " << r.name << ": " << (r.holds ? "pass" : "FAIL") << '\n';
        break;
    }
    const int rc = emit(c, out, os.str());
    for (const auto& r : checks) {
        if (!r.holds) {
            err << "identity failed at n=" << n << ": " << r.name << '\n';
            return exit_operational;
        }
    }
    return rc;
}

// --- omega -----------------------------------------------------------------

int cmd_omega(std::size_t levels, const Common& c, std::ostream& out)
{
    const auto dist = omega_levels(levels);
    std::ostringstream os;
    switch (io::parse_format(c.format)) {
    case Format::csv: io::write_eco_csv(os, dist); break;
    case Format::json: io::write_eco_json(os, dist); break;
    case Format::pretty: io::write_eco_pretty(os, dist); break;
    }
    return emit(c, out, os.str());
}

// --- sweep -----------------------------------------------------------------

int cmd_sweep(std::size_t n_max, const Common& c, std::ostream& out, std::ostream& err)
{
    if (n_max < 1) throw std::invalid_argument("--max must be at least 1");
    const auto route = parse_route(c.mode);
    const EnumerationGuard g{c.guard};
    const auto rows = conjecture_sweep(n_max, route, g);
    if (route == Route::oracle) {
        const auto fast = rank_polys_fast(n_max);
        for (const auto& r : rows) {
            if (r.rank_poly != fast[r.n - 1]) {
                err << "enumeration and operator routes disagree at n=" << r.n << '\n';
                return exit_operational;
            }
        }
    }
    std::vector<io::SweepRecord> recs;
    for (const auto& r : rows) recs.push_back(io::record_of(r));

    std::ostringstream os;
    switch (io::parse_format(c.format)) {
    case Format::csv: io::write_sweep_csv(os, recs); break;
    case Format::json: io::write_sweep_json(os, recs); break;
    case Format::pretty:
        io::write_sweep_pretty(os, recs);
        if (route == Route::oracle) os << "routes agree: yes\n";
        break;
    }
    const int rc = emit(c, out, os.str());
    if (rc != exit_ok) return rc;
    for (const auto& r : rows) {
        if (!r.report.unimodal) {
            err << "rank sequence of D_" << r.n << " is not unimodal\n";
            return exit_violation;
        }
    }
    return exit_ok;
}

// --- rule ------------------------------------------------------------------

std::string verdict_text(const RuleUnimodalityReport& rep)
{
    if (rep.violated())
        return "violation at level " + std::to_string(*rep.violation_level) + ": " + pretty_row(rep.violating_row);
    return "no violation in levels 0.." + std::to_string(rep.bound) + " (bounded check)";
}

std::string forward_text(const ForwardReport& f)
{
    if (f.vacuous()) return "vacuous: every production row is unimodal";
    std::string s = "non-unimodal rows";
    for (auto k : f.non_unimodal_rows) s += " (" + std::to_string(k) + ")";
    s += "; witnesses:";
    if (f.witnesses.empty()) s += " none";
    for (const auto& w : f.witnesses)
        s += " axiom " + std::to_string(w.axiom) + " at level " + std::to_string(w.level) + " " + pretty_row(w.row) + ";";
    if (!s.empty() && s.back() == ';') s.pop_back();
    return s;
}

std::string backward_text(const BackwardReport& b)
{
    if (!b.hypothesis_holds) return b.explanation;
    std::string s = "hypothesis holds (common argmax";
    for (auto i : b.common_argmax) s += " " + std::to_string(i);
    return s + "); " + b.explanation;
}

int cmd_rule(const std::string& path, std::optional<std::size_t> axiom, std::size_t levels, const Common& c,
             std::ostream& out, std::ostream& err)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        err << path << ": cannot open rule file\n";
        return exit_operational;
    }
    std::stringstream buf;
    buf << f.rdbuf();

    FiniteRule rule = [&] {
        try {
            return parse_rule(buf.str());
        } catch (const RuleParseError& e) {
            err << path << ':' << e.what() << '\n';
            throw;
        }
    }();
    if (!axiom) axiom = rule.axiom();
    const auto fmt = io::parse_format(c.format);
    std::ostringstream os;

    if (axiom) {
        if (*axiom < 1 || *axiom > rule.labels())
            throw std::invalid_argument("--axiom must lie in 1.." + std::to_string(rule.labels()));
        const auto rows = evolve(rule, *axiom, levels);
        const auto rep = rule_unimodality_report(rule, *axiom, levels);
        switch (fmt) {
        case Format::csv:
            io::write_levels_csv(os, rows);
            os << "# verdict: " << verdict_text(rep) << '\n';
            break;
        case Format::json: {
            json lv = json::array();
            for (const auto& r : rows) lv.push_back(big_json(r));
            json j{{"axiom", *axiom},
                   {"bound", levels},
                   {"levels", lv},
                   {"violation_level", rep.violated() ? json(*rep.violation_level) : json(nullptr)},
                   {"violating_row", big_json(rep.violating_row)}};
            os << j.dump(2) << '\n';
            break;
        }
        case Format::pretty:
            for (std::size_t l = 0; l < rows.size(); ++l) {
                os << "level " << l << ':';
                for (const auto& v : rows[l]) os << ' ' << v;
                os << '\n';
            }
            os << "verdict: " << verdict_text(rep) << '\n';
            break;
        }
        return emit(c, out, os.str());
    }

    const auto fwd = theorem_forward_check(rule, levels);
    const auto bwd = theorem_backward_check(rule, levels);
    switch (fmt) {
    case Format::csv:
        os << "check,result\n"
           << "forward," << forward_text(fwd) << '\n'
           << "backward," << backward_text(bwd) << '\n';
        break;
    case Format::json: {
        json w = json::array();
        for (const auto& x : fwd.witnesses) w.push_back({{"axiom", x.axiom}, {"level", x.level}, {"row", big_json(x.row)}});
        json j{{"bound", levels},
               {"forward",
                {{"vacuous", fwd.vacuous()}, {"non_unimodal_rows", fwd.non_unimodal_rows}, {"witnesses", w},
                 {"all_rows_witnessed", fwd.all_rows_witnessed()}}},
               {"backward",
                {{"rows_unimodal", bwd.rows_unimodal}, {"common_argmax", bwd.common_argmax},
                 {"hypothesis_holds", bwd.hypothesis_holds}, {"checked", bwd.checked},
                 {"contradiction", bwd.contradiction.has_value()}, {"explanation", bwd.explanation}}}};
        os << j.dump(2) << '\n';
        break;
    }
    case Format::pretty:
        os << "forward: " << forward_text(fwd) << '\n' << "backward: " << backward_text(bwd) << '\n';
        break;
    }
    const int rc = emit(c, out, os.str());
    if (rc == exit_ok && bwd.contradiction) return exit_violation;
    return rc;
}

void add_output_options(CLI::App* sub, Common& c)
{
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"pretty", "csv", "json"}));
    sub->add_option("--out", c.out_path, "Write output to PATH instead of standard output");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dyck lattice rank-unimodality toolkit: rank polynomials, ECO chain decompositions, "
                 "the two-labelled rule and finite succession rules"};
    app.require_subcommand(1);

    Common common;
    std::size_t n = 0, n_max = 0, levels = 0;
    bool verify = false;
    std::string rule_path;
    std::optional<std::size_t> axiom;
    std::size_t rule_levels = 10;

    auto* rank_cmd = app.add_subcommand("rank", "Rank polynomials of D_1 .. D_n");
    rank_cmd->add_option("--n", n, "Largest semilength")->required();
    rank_cmd->add_option("--mode", common.mode, "fast (rule operator) or oracle (enumeration)")
        ->check(CLI::IsMember({"fast", "oracle"}));
    rank_cmd->add_option("--guard", common.guard, "Enumeration bound for oracle mode");
    add_output_options(rank_cmd, common);

    auto* chains_cmd = app.add_subcommand("chains", "Chain matrices P_n and A_n of the ECO decomposition");
    chains_cmd->add_option("--n", n, "Semilength")->required();
    chains_cmd->add_flag("--verify", verify, "Check the chain identities at n");
    chains_cmd->add_option("--mode", common.mode, "oracle (explicit chains, default) or fast (rule operator)")
        ->check(CLI::IsMember({"fast", "oracle"}));
    chains_cmd->add_option("--guard", common.guard, "Enumeration bound for oracle mode");
    add_output_options(chains_cmd, common);

    auto* omega_cmd = app.add_subcommand("omega", "ECO matrix of the two-labelled succession rule");
    omega_cmd->add_option("--levels", levels, "Last level")->required();
    add_output_options(omega_cmd, common);

    auto* sweep_cmd = app.add_subcommand("sweep", "Unimodality sweep of the rank sequences");
    sweep_cmd->add_option("--max", n_max, "Largest semilength")->required();
    sweep_cmd->add_option("--mode", common.mode, "fast or oracle")->check(CLI::IsMember({"fast", "oracle"}));
    sweep_cmd->add_option("--guard", common.guard, "Enumeration bound for oracle mode");
    add_output_options(sweep_cmd, common);

    auto* rule_cmd = app.add_subcommand("rule", "Evolve or check a finite succession rule file");
    rule_cmd->add_option("file", rule_path, "Rule file")->required();
    rule_cmd->add_option("--axiom", axiom, "Axiom label (overrides the file's axiom line)");
    rule_cmd->add_option("--levels", rule_levels, "Last level to scan");
    add_output_options(rule_cmd, common);

    // The chains command defaults to explicit decomposition.
    chains_cmd->preparse_callback([&](std::size_t) { common.mode = "oracle"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? exit_ok : exit_operational;
    }

    try {
        if (rank_cmd->parsed()) return cmd_rank(n, common, out);
        if (chains_cmd->parsed()) return cmd_chains(n, verify, common, out, err);
        if (omega_cmd->parsed()) return cmd_omega(levels, common, out);
        if (sweep_cmd->parsed()) return cmd_sweep(n_max, common, out, err);
        if (rule_cmd->parsed()) return cmd_rule(rule_path, axiom, rule_levels, common, out, err);
    } catch (const RuleParseError&) {
        return exit_parse;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << " (raise it with --guard)\n";
        return exit_operational;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_operational;
    }
    return exit_operational;
}

} // namespace ecodyck::cli
