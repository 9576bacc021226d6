#pragma once

// Finite succession rules over the labels 1..n, a small line-oriented text
// format for them, level-by-level evolution of label counts, and the
// unimodality checks for rules and families of rules.
//
// Rule file grammar ('#' starts a comment, blank lines are ignored):
//
//     rule_file       := [axiom_line] production_line+
//     axiom_line      := "axiom:" WS label
//     production_line := "(" label ")" WS? "->" WS? ( "(" label ")" )+
//     label           := positive decimal integer
//
// n is the largest label mentioned and every label 1..n heads exactly one
// production line. Repeated sons accumulate multiplicity.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ecodyck/int_poly.hpp"
#include "ecodyck/sequence.hpp"

namespace ecodyck {

class FiniteRule {
public:
    /// productions[k-1][j-1] is the multiplicity of label j among the sons
    /// of label k. Throws std::invalid_argument on a non-square grid or an
    /// axiom outside 1..n.
    explicit FiniteRule(std::vector<std::vector<unsigned long>> productions,
                        std::optional<std::size_t> axiom = std::nullopt);

    std::size_t labels() const noexcept { return productions_.size(); }
    const std::vector<std::vector<unsigned long>>& productions() const noexcept { return productions_; }
    /// Production row of label k (1-based).
    const std::vector<unsigned long>& row(std::size_t k) const { return productions_.at(k - 1); }
    std::optional<std::size_t> axiom() const noexcept { return axiom_; }
    bool is_family() const noexcept { return !axiom_; }

    FiniteRule with_axiom(std::optional<std::size_t> axiom) const { return FiniteRule(productions_, axiom); }

    friend bool operator==(const FiniteRule&, const FiniteRule&) = default;

private:
    std::vector<std::vector<unsigned long>> productions_;
    std::optional<std::size_t> axiom_;
};

class RuleParseError : public std::runtime_error {
public:
    enum class Kind { syntax, label_out_of_range, duplicate_production, missing_production };

    RuleParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
};

FiniteRule parse_rule(std::string_view text);

/// Canonical text: optional axiom line, then one production per label in
/// ascending order, sons ascending and repeated by multiplicity.
std::string render_rule(const FiniteRule& rule);

using LevelVector = std::vector<BigInt>;

/// Levels 0..levels of the generating tree. Level 0 is the unit vector at
/// the axiom; each next level is the production-weighted image of the last.
std::vector<LevelVector> evolve(const FiniteRule& rule, std::size_t axiom, std::size_t levels);

/// One step of the evolution.
LevelVector next_level(const FiniteRule& rule, const LevelVector& current);

struct RuleUnimodalityReport {
    std::size_t axiom = 0;
    std::size_t bound = 0;  // levels 0..bound were scanned
    std::optional<std::size_t> violation_level;
    LevelVector violating_row;
    SeqReport details;

    bool violated() const noexcept { return violation_level.has_value(); }
};

/// Bounded semi-decision: a rule is unimodal only if every level is, so a
/// clean scan means "no violation up to `levels`".
RuleUnimodalityReport rule_unimodality_report(const FiniteRule& rule, std::size_t axiom, std::size_t levels);

struct Witness {
    std::size_t axiom = 0;
    std::size_t level = 0;
    LevelVector row;
};

struct ForwardReport {
    std::size_t bound = 0;
    /// Labels whose production row is not unimodal.
    std::vector<std::size_t> non_unimodal_rows;
    /// First violating level for every axiom that exposes one.
    std::vector<Witness> witnesses;
    /// No production row is non-unimodal, so nothing is predicted.
    bool vacuous() const noexcept { return non_unimodal_rows.empty(); }
    /// Each non-unimodal row k is exposed by axiom k at level 1.
    bool all_rows_witnessed() const;
};

/// Contrapositive of "all rules of the family unimodal => all rows unimodal".
ForwardReport theorem_forward_check(const FiniteRule& family, std::size_t levels);

struct BackwardReport {
    std::size_t bound = 0;
    bool rows_unimodal = false;
    /// Intersection of the argmax index sets of all rows (1-based labels).
    std::vector<std::size_t> common_argmax;
    bool hypothesis_holds = false;
    bool checked = false;
    std::string explanation;
    /// A violation found while the hypothesis holds would contradict the
    /// theorem.
    std::optional<Witness> contradiction;
};

/// "All rows unimodal with a common maximum position => every rule of the
/// family unimodal", verified on levels 0..levels for every axiom.
BackwardReport theorem_backward_check(const FiniteRule& family, std::size_t levels);

/// 1-based positions where a row attains its maximum.
std::vector<std::size_t> argmax_positions(const std::vector<unsigned long>& row);
bool row_unimodal(const std::vector<unsigned long>& row);

} // namespace ecodyck
