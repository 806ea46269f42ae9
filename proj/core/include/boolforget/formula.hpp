#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "boolforget/valuation.hpp"
#include "boolforget/vartable.hpp"

namespace boolforget {

enum class Conn : std::uint8_t { True, False, Var, Not, And, Or, Imp, Iff };

// Immutable propositional formula. Copies share structure; substitution and
// simplification reuse untouched subtrees, so repeated transforms stay cheap
// even when the printed tree is large.
class Formula {
public:
    static Formula verum();
    static Formula falsum();
    static Formula var(VarId v);
    static Formula negation(Formula f);
    static Formula conjunction(Formula a, Formula b);
    static Formula disjunction(Formula a, Formula b);
    static Formula implication(Formula a, Formula b);
    static Formula biconditional(Formula a, Formula b);

    Conn kind() const;
    VarId var() const;          // pre: kind() == Var
    const Formula& lhs() const; // pre: Not or binary
    const Formula& rhs() const; // pre: binary

    bool is_constant() const;

    // Size of the unfolded syntax tree.
    std::size_t node_count() const;
    std::size_t hash() const;

    // Structural equality.
    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    static Formula make(Conn kind, VarId v, Formula a, Formula b);
    std::shared_ptr<const Node> n_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// Distinct variables occurring in f, ascending.
std::vector<VarId> vars(const Formula& f);

// Truth-functional evaluation; throws EvalError on unassigned variables.
bool eval_formula(const Formula& f, const Valuation& v);

// Replace every occurrence of variable p by the formula g.
Formula substitute(const Formula& f, VarId p, const Formula& g);

// One bottom-up constant-elimination pass. The result contains no T or F
// subterm unless it is T or F itself, and formulas without constants come
// back structurally unchanged.
Formula simplify_sigma(const Formula& f);

// Boolean derivative lifted to formulas; equivalent to ~(F{p/~p} <-> F).
// Defined alongside the polynomial translation.
Formula formula_derivative(const Formula& f, VarId p);

// Grammar: identifiers [A-Za-z_][A-Za-z0-9_]*, constants T and F, operators
// ~ & | -> <-> with precedence loosest-to-tightest <->, ->, |, &, ~ (the
// arrows right-associative, & and | left-associative), parentheses, and
// '#' comments running to end of line.
Formula parse_formula(std::string_view text, VarTable& table, std::size_t line = 1);

// Precedence-aware rendering; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f, const VarTable& table);

} // namespace boolforget
