#include "ecodyck/finite_rule.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <limits>
#include <map>
#include <sstream>

namespace ecodyck {

FiniteRule::FiniteRule(std::vector<std::vector<unsigned long>> productions, std::optional<std::size_t> axiom)
    : productions_(std::move(productions)), axiom_(axiom)
{
    if (productions_.empty()) throw std::invalid_argument("a finite rule needs at least one label");
    for (const auto& row : productions_)
        if (row.size() != productions_.size())
            throw std::invalid_argument("production grid must be n x n");
    if (axiom_ && (*axiom_ < 1 || *axiom_ > productions_.size()))
        throw std::invalid_argument("axiom label " + std::to_string(*axiom_) + " outside 1.." +
                                    std::to_string(productions_.size()));
}

RuleParseError::RuleParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind), line_(line), column_(column)
{
}

namespace {

using Kind = RuleParseError::Kind;

class LineScanner {
public:
    LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    [[noreturn]] void fail(const std::string& msg, Kind kind = Kind::syntax) const
    {
        throw RuleParseError(kind, line_, pos_ + 1, msg);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
    std::size_t column() const { return pos_ + 1; }

    void expect(std::string_view token)
    {
        if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
        pos_ += token.size();
    }

    std::size_t label()
    {
        const std::size_t start = pos_;
        std::size_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::size_t digit = static_cast<std::size_t>(text_[pos_] - '0');
            if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) {
                pos_ = start;
                fail("label too large", Kind::label_out_of_range);
            }
            value = value * 10 + digit;
            ++pos_;
        }
        if (pos_ == start) fail("expected a label");
        if (value == 0) {
            pos_ = start;
            fail("labels start at 1", Kind::label_out_of_range);
        }
        return value;
    }

    std::size_t parenthesized_label()
    {
        expect("(");
        skip_ws();
        const std::size_t v = label();
        skip_ws();
        expect(")");
        return v;
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct ParsedProduction {
    std::size_t line;
    std::size_t head_column;
    std::map<std::size_t, unsigned long> sons;
};

} // namespace

FiniteRule parse_rule(std::string_view text)
{
    std::optional<std::size_t> axiom;
    std::size_t axiom_line = 0, axiom_col = 0;
    std::map<std::size_t, ParsedProduction> heads;
    std::size_t max_label = 0;
    std::size_t max_line = 0, max_col = 0;
    std::size_t line_no = 0;

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        LineScanner sc(line, line_no);
        sc.skip_ws();
        if (sc.at_end()) {
            if (end == text.size()) break;
            continue;
        }

        auto note_label = [&](std::size_t v, std::size_t col) {
            if (v > max_label) {
                max_label = v;
                max_line = line_no;
                max_col = col;
            }
        };

        if (sc.peek('a')) {
            if (!heads.empty()) sc.fail("the axiom line must precede the productions");
            if (axiom) sc.fail("duplicate axiom line");
            sc.expect("axiom:");
            sc.skip_ws();
            axiom_line = line_no;
            axiom_col = sc.column();
            axiom = sc.label();
            sc.skip_ws();
            if (!sc.at_end()) sc.fail("unexpected text after the axiom");
        } else {
            const std::size_t head_col = sc.column();
            const std::size_t head = sc.parenthesized_label();
            if (heads.count(head))
                throw RuleParseError(Kind::duplicate_production, line_no, head_col,
                                     "label (" + std::to_string(head) + ") already has a production on line " +
                                         std::to_string(heads.at(head).line));
            note_label(head, head_col);
            sc.skip_ws();
            sc.expect("->");
            sc.skip_ws();
            ParsedProduction prod{line_no, head_col, {}};
            if (sc.at_end()) sc.fail("a production needs at least one son");
            while (!sc.at_end()) {
                const std::size_t col = sc.column();
                const std::size_t son = sc.parenthesized_label();
                note_label(son, col);
                ++prod.sons[son];
                sc.skip_ws();
            }
            heads.emplace(head, std::move(prod));
        }
        if (end == text.size()) break;
    }

    if (heads.empty()) throw RuleParseError(Kind::syntax, line_no == 0 ? 1 : line_no, 1, "no production lines");
    for (std::size_t k = 1; k <= max_label; ++k)
        if (!heads.count(k))
            throw RuleParseError(Kind::missing_production, max_line, max_col,
                                 "label (" + std::to_string(k) + ") has no production (labels run 1.." +
                                     std::to_string(max_label) + ")");
    if (axiom && *axiom > max_label)
        throw RuleParseError(Kind::label_out_of_range, axiom_line, axiom_col,
                             "axiom (" + std::to_string(*axiom) + ") outside 1.." + std::to_string(max_label));

    std::vector<std::vector<unsigned long>> grid(max_label, std::vector<unsigned long>(max_label, 0));
    for (const auto& [head, prod] : heads)
        for (const auto& [son, mult] : prod.sons) grid[head - 1][son - 1] = mult;
    return FiniteRule(std::move(grid), axiom);
}

std::string render_rule(const FiniteRule& rule)
{
    std::ostringstream os;
    if (rule.axiom()) os << "axiom: " << *rule.axiom() << '\n';
    for (std::size_t k = 1; k <= rule.labels(); ++k) {
        os << '(' << k << ")->";
        const auto& row = rule.row(k);
        for (std::size_t j = 0; j < row.size(); ++j)
            for (unsigned long m = 0; m < row[j]; ++m) os << '(' << j + 1 << ')';
        os << '\n';
    }
    return os.str();
}

LevelVector next_level(const FiniteRule& rule, const LevelVector& current)
{
    const std::size_t n = rule.labels();
    LevelVector next(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(current[k]) == 0) continue;
        const auto& row = rule.productions()[k];
        for (std::size_t j = 0; j < n; ++j)
            if (row[j]) next[j] += current[k] * row[j];
    }
    return next;
}

std::vector<LevelVector> evolve(const FiniteRule& rule, std::size_t axiom, std::size_t levels)
{
    if (axiom < 1 || axiom > rule.labels())
        throw std::invalid_argument("axiom " + std::to_string(axiom) + " outside 1.." + std::to_string(rule.labels()));
    std::vector<LevelVector> out;
    out.reserve(levels + 1);
    LevelVector v(rule.labels());
    v[axiom - 1] = 1;
    out.push_back(std::move(v));
    for (std::size_t l = 0; l < levels; ++l) out.push_back(next_level(rule, out.back()));
    return out;
}

RuleUnimodalityReport rule_unimodality_report(const FiniteRule& rule, std::size_t axiom, std::size_t levels)
{
    RuleUnimodalityReport rep;
    rep.axiom = axiom;
    rep.bound = levels;
    const auto rows = evolve(rule, axiom, levels);
    for (std::size_t l = 0; l < rows.size(); ++l) {
        auto details = analyze(rows[l]);
        if (!details.unimodal) {
            rep.violation_level = l;
            rep.violating_row = rows[l];
            rep.details = details;
            break;
        }
    }
    return rep;
}

std::vector<std::size_t> argmax_positions(const std::vector<unsigned long>& row)
{
    std::vector<std::size_t> pos;
    if (row.empty()) return pos;
    const auto top = *std::max_element(row.begin(), row.end());
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] == top) pos.push_back(j + 1);
    return pos;
}

bool row_unimodal(const std::vector<unsigned long>& row)
{
    std::vector<BigInt> big(row.begin(), row.end());
    return analyze(big).unimodal;
}

bool ForwardReport::all_rows_witnessed() const
{
    for (std::size_t k : non_unimodal_rows) {
        auto it = std::find_if(witnesses.begin(), witnesses.end(), [k](const Witness& w) { return w.axiom == k; });
        if (it == witnesses.end() || it->level > 1) return false;
    }
    return true;
}

ForwardReport theorem_forward_check(const FiniteRule& family, std::size_t levels)
{
    ForwardReport rep;
    rep.bound = levels;
    for (std::size_t k = 1; k <= family.labels(); ++k)
        if (!row_unimodal(family.row(k))) rep.non_unimodal_rows.push_back(k);
    if (rep.vacuous()) return rep;
    for (std::size_t b = 1; b <= family.labels(); ++b) {
        const auto r = rule_unimodality_report(family, b, levels);
        if (r.violated()) rep.witnesses.push_back({b, *r.violation_level, r.violating_row});
    }
    return rep;
}

BackwardReport theorem_backward_check(const FiniteRule& family, std::size_t levels)
{
    BackwardReport rep;
    rep.bound = levels;
    rep.rows_unimodal = true;
    std::vector<std::size_t> common;
    for (std::size_t k = 1; k <= family.labels(); ++k) {
        const auto& row = family.row(k);
        if (!row_unimodal(row)) {
            rep.rows_unimodal = false;
            if (rep.explanation.empty())
                rep.explanation = "production row of (" + std::to_string(k) + ") is not unimodal";
        }
        const auto pos = argmax_positions(row);
        if (k == 1) {
            common = pos;
        } else {
            std::vector<std::size_t> both;
            std::set_intersection(common.begin(), common.end(), pos.begin(), pos.end(), std::back_inserter(both));
            common = std::move(both);
        }
    }
    rep.common_argmax = common;
    rep.hypothesis_holds = rep.rows_unimodal && !common.empty();
    if (!rep.hypothesis_holds) {
        if (rep.rows_unimodal) rep.explanation = "backward hypothesis fails: no common argmax";
        else rep.explanation = "backward hypothesis fails: " + rep.explanation;
        return rep;
    }
    rep.checked = true;
    for (std::size_t b = 1; b <= family.labels(); ++b) {
        const auto r = rule_unimodality_report(family, b, levels);
        if (r.violated()) {
            rep.contradiction = Witness{b, *r.violation_level, r.violating_row};
            rep.explanation = "violation despite the hypothesis";
            return rep;
        }
    }
    rep.explanation = "no violation in levels 0.." + std::to_string(levels) + " for any axiom";
    return rep;
}

} // namespace ecodyck
