#include "ecodyck/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ecodyck::io {

using nlohmann::json;

namespace {

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

bool next_line(std::istream& is, std::string& line)
{
    if (!std::getline(is, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

BigInt parse_big(const std::string& s)
{
    if (s.empty()) throw std::invalid_argument("empty integer field");
    try {
        return BigInt(s, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

std::size_t parse_size(const std::string& s)
{
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("not a count: '" + s + "'");
    return static_cast<std::size_t>(v);
}

bool parse_bool(const std::string& s)
{
    if (s == "true") return true;
    if (s == "false") return false;
    throw std::invalid_argument("not a boolean: '" + s + "'");
}

void expect_header(const std::string& line, const std::string& prefix)
{
    if (line.rfind(prefix, 0) != 0) throw std::invalid_argument("unexpected header: '" + line + "'");
}

json big_array(const std::vector<BigInt>& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

std::vector<BigInt> read_big_array(const json& a)
{
    std::vector<BigInt> out;
    for (const auto& x : a) out.push_back(parse_big(x.get<std::string>()));
    return out;
}

std::string pad_left(const std::string& s, std::size_t width)
{
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void rtrim(std::string& s)
{
    while (!s.empty() && s.back() == ' ') s.pop_back();
}

TwoLabel parse_label(const std::string& s)
{
    const auto us = s.find('_');
    if (us == std::string::npos) throw std::invalid_argument("not a label: '" + s + "'");
    return {parse_size(s.substr(0, us)), parse_size(s.substr(us + 1))};
}

LabelDistribution distribution_of_row(std::size_t level, const std::vector<TwoLabel>& columns,
                                      const std::vector<BigInt>& values)
{
    if (values.size() > columns.size()) throw std::invalid_argument("more counts than columns");
    LabelDistribution d;
    d.level = level;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (sgn(values[i]) != 0) d.counts.emplace(columns[i], values[i]);
    return d;
}

} // namespace

Format parse_format(const std::string& name)
{
    if (name == "pretty") return Format::pretty;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown format '" + name + "' (expected pretty, csv or json)");
}

// --- rank polynomials ------------------------------------------------------

void write_rank_csv(std::ostream& os, const std::vector<RankRow>& rows)
{
    std::size_t width = 1;
    for (const auto& r : rows) width = std::max(width, r.coefficients.size());
    os << 'n';
    for (std::size_t k = 0; k < width; ++k) os << ",k" << k;
    os << '\n';
    for (const auto& r : rows) {
        os << r.n;
        for (std::size_t k = 0; k < width; ++k) os << ',' << r.coefficients.coeff(k);
        os << '\n';
    }
}

void write_rank_json(std::ostream& os, const std::vector<RankRow>& rows)
{
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"n", r.n}, {"coefficients", big_array(r.coefficients.coeffs())}});
    os << json{{"rank_polynomials", arr}}.dump(2) << '\n';
}

void write_rank_pretty(std::ostream& os, const std::vector<RankRow>& rows)
{
    for (const auto& r : rows) {
        const auto& c = r.coefficients.coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
        os << '\n';
    }
}

std::vector<RankRow> read_rank_csv(std::istream& is)
{
    std::string line;
    if (!next_line(is, line)) throw std::invalid_argument("empty rank table");
    expect_header(line, "n,k0");
    std::vector<RankRow> rows;
    while (next_line(is, line)) {
        if (line.empty()) continue;
        auto cells = split_csv(line);
        std::vector<BigInt> c;
        for (std::size_t i = 1; i < cells.size(); ++i) c.push_back(parse_big(cells[i]));
        rows.push_back({parse_size(cells.at(0)), IntPoly(std::move(c))});
    }
    return rows;
}

std::vector<RankRow> read_rank_json(std::istream& is)
{
    const json j = json::parse(is);
    std::vector<RankRow> rows;
    for (const auto& r : j.at("rank_polynomials"))
        rows.push_back({r.at("n").get<std::size_t>(), IntPoly(read_big_array(r.at("coefficients")))});
    return rows;
}

// --- chain matrices --------------------------------------------------------

std::string matrix_title(const ChainMatrix& m)
{
    return std::string(m.form() == MatrixForm::start_rank ? "P_" : "A_") + std::to_string(m.n());
}

void write_matrix_csv(std::ostream& os, const ChainMatrix& m)
{
    os << "# " << matrix_title(m) << '\n' << "rank";
    for (std::size_t k = 0; k < m.cols(); ++k) os << ",k" << k;
    os << '\n';
    for (std::size_t j = 0; j < m.rows(); ++j) {
        os << j;
        for (const auto& v : m.entries()[j]) os << ',' << v;
        os << '\n';
    }
}

void write_matrix_pretty(std::ostream& os, const ChainMatrix& m)
{
    std::vector<std::size_t> width(m.cols(), 1);
    for (const auto& row : m.entries())
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].get_str().size());
    os << matrix_title(m) << '\n';
    for (const auto& row : m.entries()) {
        os << '(';
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << pad_left(row[k].get_str(), width[k]);
        os << ")\n";
    }
}

std::vector<ChainMatrix> read_matrix_csv(std::istream& is)
{
    std::vector<ChainMatrix> out;
    std::string line;
    while (next_line(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("# ", 0) != 0 || line.size() < 5) throw std::invalid_argument("expected a matrix title line");
        const char form = line[2];
        if ((form != 'P' && form != 'A') || line[3] != '_') throw std::invalid_argument("bad matrix title: " + line);
        ChainMatrix m(parse_size(line.substr(4)), form == 'P' ? MatrixForm::start_rank : MatrixForm::end_rank);
        if (!next_line(is, line)) throw std::invalid_argument("missing matrix header");
        expect_header(line, "rank");
        for (std::size_t j = 0; j < m.rows(); ++j) {
            if (!next_line(is, line)) throw std::invalid_argument("matrix ends early");
            auto cells = split_csv(line);
            if (cells.size() != m.cols() + 1 || parse_size(cells[0]) != j)
                throw std::invalid_argument("malformed matrix row: " + line);
            for (std::size_t k = 0; k < m.cols(); ++k) m.at(j, k) = parse_big(cells[k + 1]);
        }
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

json matrix_json(const ChainMatrix& m)
{
    json rows = json::array();
    for (const auto& r : m.entries()) rows.push_back(big_array(r));
    return rows;
}

ChainMatrix matrix_from_json(std::size_t n, MatrixForm form, const json& rows)
{
    ChainMatrix m(n, form);
    if (rows.size() != m.rows()) throw std::invalid_argument("matrix row count mismatch");
    for (std::size_t j = 0; j < m.rows(); ++j) {
        auto vals = read_big_array(rows[j]);
        if (vals.size() != m.cols()) throw std::invalid_argument("matrix column count mismatch");
        for (std::size_t k = 0; k < m.cols(); ++k) m.at(j, k) = vals[k];
    }
    return m;
}

} // namespace

void write_chains_json(std::ostream& os, const ChainMatrix& p, const ChainMatrix& a,
                       const std::vector<IdentityResult>& verification)
{
    json j{{"n", p.n()}, {"P", matrix_json(p)}, {"A", matrix_json(a)}};
    if (!verification.empty()) {
        json v = json::array();
        for (const auto& r : verification) v.push_back({{"identity", r.name}, {"holds", r.holds}});
        j["verification"] = v;
    }
    os << j.dump(2) << '\n';
}

std::pair<ChainMatrix, ChainMatrix> read_chains_json(std::istream& is)
{
    const json j = json::parse(is);
    const auto n = j.at("n").get<std::size_t>();
    return {matrix_from_json(n, MatrixForm::start_rank, j.at("P")), matrix_from_json(n, MatrixForm::end_rank, j.at("A"))};
}

// --- ECO matrix ------------------------------------------------------------

std::vector<BigInt> eco_row(const LabelDistribution& level, const std::vector<TwoLabel>& columns)
{
    std::vector<BigInt> out;
    const std::size_t top = max_label_value(level.level);
    for (const auto& c : columns) {
        if (c.alpha > top) break;
        out.push_back(level.count(c));
    }
    return out;
}

namespace {

std::size_t deepest(const std::vector<LabelDistribution>& levels)
{
    std::size_t m = 0;
    for (const auto& l : levels) m = std::max(m, l.level);
    return m;
}

} // namespace

void write_eco_csv(std::ostream& os, const std::vector<LabelDistribution>& levels)
{
    const auto cols = eco_matrix_columns(deepest(levels));
    os << "level";
    for (const auto& c : cols) os << ',' << c.str();
    os << '\n';
    for (const auto& l : levels) {
        os << l.level;
        for (const auto& c : cols) os << ',' << l.count(c);
        os << '\n';
    }
}

void write_eco_json(std::ostream& os, const std::vector<LabelDistribution>& levels)
{
    const auto cols = eco_matrix_columns(deepest(levels));
    json names = json::array();
    for (const auto& c : cols) names.push_back(c.str());
    json rows = json::array();
    for (const auto& l : levels) rows.push_back({{"level", l.level}, {"counts", big_array(eco_row(l, cols))}});
    os << json{{"columns", names}, {"rows", rows}}.dump(2) << '\n';
}

void write_eco_pretty(std::ostream& os, const std::vector<LabelDistribution>& levels)
{
    const auto cols = eco_matrix_columns(deepest(levels));
    std::vector<std::vector<BigInt>> table;
    for (const auto& l : levels) table.push_back(eco_row(l, cols));

    std::vector<std::size_t> width(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) width[i] = cols[i].str().size();
    for (const auto& row : table)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].get_str().size());

    const std::size_t lw = std::max<std::size_t>(5, std::to_string(deepest(levels)).size());
    auto render = [&](const std::string& lead, std::size_t count, auto&& cell) {
        std::string s = pad_left(lead, lw) + " |";
        for (std::size_t i = 0; i < count; ++i) {
            s += ' ' + pad_left(cell(i), width[i]);
            if (i + 1 == cols.size() || cols[i + 1].alpha != cols[i].alpha) s += " |";
        }
        rtrim(s);
        os << s << '\n';
    };
    render("level", cols.size(), [&](std::size_t i) { return cols[i].str(); });
    for (std::size_t r = 0; r < table.size(); ++r)
        render(std::to_string(levels[r].level), table[r].size(), [&](std::size_t i) { return table[r][i].get_str(); });
}

std::vector<LabelDistribution> read_eco_csv(std::istream& is)
{
    std::string line;
    if (!next_line(is, line)) throw std::invalid_argument("empty ECO matrix table");
    auto header = split_csv(line);
    if (header.empty() || header[0] != "level") throw std::invalid_argument("unexpected header: " + line);
    std::vector<TwoLabel> cols;
    for (std::size_t i = 1; i < header.size(); ++i) cols.push_back(parse_label(header[i]));
    std::vector<LabelDistribution> out;
    while (next_line(is, line)) {
        if (line.empty()) continue;
        auto cells = split_csv(line);
        std::vector<BigInt> vals;
        for (std::size_t i = 1; i < cells.size(); ++i) vals.push_back(parse_big(cells[i]));
        out.push_back(distribution_of_row(parse_size(cells.at(0)), cols, vals));
    }
    return out;
}

std::vector<LabelDistribution> read_eco_json(std::istream& is)
{
    const json j = json::parse(is);
    std::vector<TwoLabel> cols;
    for (const auto& c : j.at("columns")) cols.push_back(parse_label(c.get<std::string>()));
    std::vector<LabelDistribution> out;
    for (const auto& r : j.at("rows"))
        out.push_back(distribution_of_row(r.at("level").get<std::size_t>(), cols, read_big_array(r.at("counts"))));
    return out;
}

// --- conjecture sweep ------------------------------------------------------

SweepRecord record_of(const SweepRow& row)
{
    return {row.n,           row.report.unimodal,    row.report.argmax_lo, row.report.argmax_hi,
            row.sign.kbar,   row.report.log_concave, row.catalan};
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& rows)
{
    os << "n,unimodal,argmax_lo,argmax_hi,kbar,log_concave,catalan\n";
    for (const auto& r : rows) {
        os << r.n << ',' << (r.unimodal ? "true" : "false") << ',' << r.argmax_lo << ',' << r.argmax_hi << ',';
        if (r.kbar) os << *r.kbar;
        os << ',' << (r.log_concave ? "true" : "false") << ',' << r.catalan << '\n';
    }
}

void write_sweep_json(std::ostream& os, const std::vector<SweepRecord>& rows)
{
    json arr = json::array();
    for (const auto& r : rows) {
        json o{{"n", r.n},
               {"unimodal", r.unimodal},
               {"argmax_lo", r.argmax_lo},
               {"argmax_hi", r.argmax_hi},
               {"kbar", r.kbar ? json(*r.kbar) : json(nullptr)},
               {"log_concave", r.log_concave},
               {"catalan", r.catalan.get_str()}};
        arr.push_back(o);
    }
    os << json{{"sweep", arr}}.dump(2) << '\n';
}

void write_sweep_pretty(std::ostream& os, const std::vector<SweepRecord>& rows)
{
    std::size_t nw = 1, aw = 6, kw = 4;
    for (const auto& r : rows) {
        nw = std::max(nw, std::to_string(r.n).size());
        aw = std::max(aw, std::to_string(r.argmax_lo).size() + std::to_string(r.argmax_hi).size() + 3);
        if (r.kbar) kw = std::max(kw, std::to_string(*r.kbar).size());
    }
    os << pad_left("n", nw) << "  unimodal  " << pad_left("argmax", aw) << "  " << pad_left("kbar", kw)
       << "  log_concave  catalan\n";
    for (const auto& r : rows) {
        const std::string am = "[" + std::to_string(r.argmax_lo) + "," + std::to_string(r.argmax_hi) + "]";
        std::string line = pad_left(std::to_string(r.n), nw) + "  " + pad_left(r.unimodal ? "yes" : "NO", 8) + "  " +
                           pad_left(am, aw) + "  " + pad_left(r.kbar ? std::to_string(*r.kbar) : "-", kw) + "  " +
                           pad_left(r.log_concave ? "yes" : "no", 11) + "  " + r.catalan.get_str();
        os << line << '\n';
    }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& is)
{
    std::string line;
    if (!next_line(is, line)) throw std::invalid_argument("empty sweep table");
    expect_header(line, "n,unimodal,argmax_lo,argmax_hi,kbar,log_concave,catalan");
    std::vector<SweepRecord> out;
    while (next_line(is, line)) {
        if (line.empty()) continue;
        auto c = split_csv(line);
        if (c.size() != 7) throw std::invalid_argument("malformed sweep row: " + line);
        SweepRecord r;
        r.n = parse_size(c[0]);
        r.unimodal = parse_bool(c[1]);
        r.argmax_lo = parse_size(c[2]);
        r.argmax_hi = parse_size(c[3]);
        if (!c[4].empty()) r.kbar = parse_size(c[4]);
        r.log_concave = parse_bool(c[5]);
        r.catalan = parse_big(c[6]);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<SweepRecord> read_sweep_json(std::istream& is)
{
    const json j = json::parse(is);
    std::vector<SweepRecord> out;
    for (const auto& o : j.at("sweep")) {
        SweepRecord r;
        r.n = o.at("n").get<std::size_t>();
        r.unimodal = o.at("unimodal").get<bool>();
        r.argmax_lo = o.at("argmax_lo").get<std::size_t>();
        r.argmax_hi = o.at("argmax_hi").get<std::size_t>();
        if (!o.at("kbar").is_null()) r.kbar = o.at("kbar").get<std::size_t>();
        r.log_concave = o.at("log_concave").get<bool>();
        r.catalan = parse_big(o.at("catalan").get<std::string>());
        out.push_back(std::move(r));
    }
    return out;
}

// --- finite rules ----------------------------------------------------------

void write_levels_csv(std::ostream& os, const std::vector<LevelVector>& levels)
{
    const std::size_t n = levels.empty() ? 0 : levels.front().size();
    os << "level";
    for (std::size_t j = 1; j <= n; ++j) os << ',' << j;
    os << '\n';
    for (std::size_t l = 0; l < levels.size(); ++l) {
        os << l;
        for (const auto& v : levels[l]) os << ',' << v;
        os << '\n';
    }
}

std::vector<LevelVector> read_levels_csv(std::istream& is)
{
    std::string line;
    if (!next_line(is, line)) throw std::invalid_argument("empty level table");
    expect_header(line, "level");
    std::vector<LevelVector> out;
    while (next_line(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto cells = split_csv(line);
        if (parse_size(cells.at(0)) != out.size()) throw std::invalid_argument("levels out of order");
        LevelVector v;
        for (std::size_t i = 1; i < cells.size(); ++i) v.push_back(parse_big(cells[i]));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace ecodyck::io
