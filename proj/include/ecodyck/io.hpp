#pragma once

// Table formats emitted by the command-line tool, with readers for the CSV
// and JSON forms. Big integers are written as decimal digits in CSV and as
// decimal strings in JSON.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecodyck/chains.hpp"
#include "ecodyck/finite_rule.hpp"
#include "ecodyck/int_poly.hpp"
#include "ecodyck/rule_operator.hpp"
#include "ecodyck/sequence.hpp"

namespace ecodyck::io {

enum class Format { pretty, csv, json };

/// Parses "pretty", "csv" or "json"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& name);

// --- rank polynomials ------------------------------------------------------

struct RankRow {
    std::size_t n = 0;
    IntPoly coefficients;
    friend bool operator==(const RankRow&, const RankRow&) = default;
};

/// CSV: header "n,k0,k1,...,kM", rows zero-padded to the widest row.
void write_rank_csv(std::ostream& os, const std::vector<RankRow>& rows);
/// {"rank_polynomials": [{"n": 1, "coefficients": ["1"]}, ...]}
void write_rank_json(std::ostream& os, const std::vector<RankRow>& rows);
/// One line per n, coefficients separated by spaces.
void write_rank_pretty(std::ostream& os, const std::vector<RankRow>& rows);
std::vector<RankRow> read_rank_csv(std::istream& is);
std::vector<RankRow> read_rank_json(std::istream& is);

// --- chain matrices --------------------------------------------------------

/// Title line for a matrix, e.g. "P_5" or "A_5".
std::string matrix_title(const ChainMatrix& m);

/// CSV block: "# P_5", header "rank,k0,...,k{n-2}", one row per rank.
void write_matrix_csv(std::ostream& os, const ChainMatrix& m);
/// Parenthesized rows under the title; P_2 prints as "(1)".
void write_matrix_pretty(std::ostream& os, const ChainMatrix& m);
/// Reads every block written by write_matrix_csv, separated by blank lines.
std::vector<ChainMatrix> read_matrix_csv(std::istream& is);

struct IdentityResult {
    std::string name;
    bool holds = false;
};

void write_chains_json(std::ostream& os, const ChainMatrix& p, const ChainMatrix& a,
                       const std::vector<IdentityResult>& verification);
std::pair<ChainMatrix, ChainMatrix> read_chains_json(std::istream& is);

// --- ECO matrix of the two-labelled rule -----------------------------------

/// CSV: header "level,0_0,1_0,1_1,...", zeros beyond a level's largest label.
void write_eco_csv(std::ostream& os, const std::vector<LabelDistribution>& levels);
/// {"columns": [...], "rows": [{"level": l, "counts": [...]}]}, each row
/// running up to the level's largest label value.
void write_eco_json(std::ostream& os, const std::vector<LabelDistribution>& levels);
/// Table with one column group per label value.
void write_eco_pretty(std::ostream& os, const std::vector<LabelDistribution>& levels);
std::vector<LabelDistribution> read_eco_csv(std::istream& is);
std::vector<LabelDistribution> read_eco_json(std::istream& is);

/// Row of the table for one level: counts for every column whose label
/// value does not exceed the level's largest, in column order.
std::vector<BigInt> eco_row(const LabelDistribution& level, const std::vector<TwoLabel>& columns);

// --- conjecture sweep ------------------------------------------------------

struct SweepRecord {
    std::size_t n = 0;
    bool unimodal = false;
    std::size_t argmax_lo = 0;
    std::size_t argmax_hi = 0;
    std::optional<std::size_t> kbar;
    bool log_concave = false;
    BigInt catalan;
    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

SweepRecord record_of(const SweepRow& row);

/// CSV header "n,unimodal,argmax_lo,argmax_hi,kbar,log_concave,catalan".
void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& rows);
void write_sweep_json(std::ostream& os, const std::vector<SweepRecord>& rows);
void write_sweep_pretty(std::ostream& os, const std::vector<SweepRecord>& rows);
std::vector<SweepRecord> read_sweep_csv(std::istream& is);
std::vector<SweepRecord> read_sweep_json(std::istream& is);

// --- finite rules ----------------------------------------------------------

void write_levels_csv(std::ostream& os, const std::vector<LevelVector>& levels);
std::vector<LevelVector> read_levels_csv(std::istream& is);

} // namespace ecodyck::io
