#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "boolforget/forget.hpp"
#include "boolforget/formula.hpp"
#include "boolforget/poly.hpp"
#include "boolforget/vartable.hpp"

namespace boolforget {

struct DimacsProblem {
    std::size_t num_vars = 0;
    std::vector<std::vector<int>> clauses; // signed 1-based literals, no zeros
};

// Parses the usual 'p cnf <vars> <clauses>' format with 'c' comment lines.
// Rejects a missing or duplicate header, out-of-range or zero-variable
// literals, empty clauses, and a clause left open at end of input.
DimacsProblem parse_dimacs(std::string_view text);

std::string format_dimacs(const DimacsProblem& problem);

struct IoOptions {
    // Largest clause clause_to_poly will expand; the table form of a clause
    // is exponential in its width.
    std::size_t clause_width_cap = 12;
};

// pi(l1 | ... | lk) = 1 + (1+pi(l1)) * ... * (1+pi(lk)).
Poly clause_to_poly(const std::vector<Literal>& clause, const IoOptions& opts = {});

// DIMACS variable k appears as "x<k>"; the whole declared language enters
// the KB language even when some variables never occur.
PolyKB dimacs_to_kb(const DimacsProblem& problem, VarTable& table,
                    const IoOptions& opts = {});

// Dispatch on extension: .cnf (DIMACS), .fml (one formula per non-empty
// line), .pol (one polynomial per non-empty line). '#' comments are allowed
// in the line-based formats.
PolyKB load_kb(const std::string& path, VarTable& table, const IoOptions& opts = {});

// The same inputs kept as formulas: .fml lines verbatim, .cnf clauses as
// literal disjunctions, .pol lines through the polynomial-to-formula map.
std::vector<Formula> load_formulas(const std::string& path, VarTable& table,
                                   const IoOptions& opts = {});

enum class KbSyntax { Poly, Formula };

// One member per line in display order. Loading the written file back yields
// the same polynomial set under either syntax.
void write_kb(const PolyKB& kb, const std::string& path, const VarTable& table,
              KbSyntax syntax);

// Minimal CSV: fields joined with ',', rows with '\n'. Fields containing
// separators or quotes are double-quoted.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

} // namespace boolforget
