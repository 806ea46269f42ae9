#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "boolforget/formula.hpp"
#include "boolforget/poly.hpp"

namespace boolforget {

inline constexpr std::size_t kDefaultSizeCap = 25'000'000;

struct ForgetOptions {
    // Drop constant-1 members after each forgetting step. Turning this off
    // keeps tautologies so intermediate sets can be inspected verbatim.
    bool drop_tautologies = true;
    // Hard bound on the symbol size a knowledge base (or a single product)
    // may reach before the run aborts with ResourceCapError. 0 disables it.
    std::size_t size_cap_symbols = kDefaultSizeCap;
};

// Reads BOOLFORGET_SIZE_CAP; returns `fallback` when unset. Throws
// std::invalid_argument on garbage values.
std::size_t size_cap_from_env(std::size_t fallback = kDefaultSizeCap);

// Set of polynomial constraints (each asserted equal to 1) over an explicit
// language. Members are kept deduplicated and canonically sorted.
class PolyKB {
public:
    PolyKB() = default;
    // Language is the union of the members' variables.
    static PolyKB of(std::vector<Poly> members);
    // Declared language; must cover every member's variables.
    static PolyKB of(std::vector<Poly> members, std::vector<VarId> language);

    const std::vector<Poly>& members() const { return members_; }
    const std::vector<VarId>& language() const { return language_; }

    bool contains(const Poly& p) const;
    bool contains_zero() const;
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

    friend bool operator==(const PolyKB&, const PolyKB&) = default;

private:
    std::vector<Poly> members_;  // sorted by poly_less, unique
    std::vector<VarId> language_; // ascending, unique
};

std::size_t symbol_size(const PolyKB& kb);

// Elimination heuristic: variables ordered by how few members mention them,
// ties broken by id.
std::vector<VarId> default_order(const PolyKB& kb);

// Forget one variable: members not mentioning v survive unchanged, and every
// unordered pair (with repetition) of members mentioning v is combined with
// independence_rule. A 0 result short-circuits the whole KB to {0}; constant
// 1 members are dropped unless the options keep them.
PolyKB forget_var(const PolyKB& kb, VarId v, const ForgetOptions& opts = {});

// Forget every variable in q following `order`, which must be a permutation
// of q. Different permutations give logically equivalent results.
PolyKB retract(const PolyKB& kb, const std::set<VarId>& q,
               const std::vector<VarId>& order, const ForgetOptions& opts = {});

enum class Outcome { Consistent, Inconsistent };

struct SaturationStep {
    VarId variable;
    std::size_t pairs_processed = 0;
    std::size_t kb_members = 0;      // after the step
    std::size_t kb_size_symbols = 0; // after the step
    double elapsed_ms = 0.0;
};

struct SaturationTrace {
    std::vector<SaturationStep> steps;
    Outcome outcome = Outcome::Consistent;
    PolyKB final_kb;
};

// Forget every language variable in the given order (which must cover the
// language). Ends in {} or {1} for consistent input, or short-circuits to
// {0} as soon as inconsistency surfaces.
SaturationTrace saturate(const PolyKB& kb, const std::vector<VarId>& order,
                         const ForgetOptions& opts = {});

// Reference forgetting operator on formulas:
//   sigma( (F&G){p/T} | (F&G){p/F} ).
Formula canonical_forget(const Formula& f, const Formula& g, VarId p);

// Set of formulas; deduplicated structurally, insertion order preserved.
class FormulaKB {
public:
    FormulaKB() = default;
    static FormulaKB of(std::vector<Formula> members);

    const std::vector<Formula>& members() const { return members_; }
    std::vector<VarId> language() const;
    bool contains_falsum() const;
    std::size_t size() const { return members_.size(); }

private:
    std::vector<Formula> members_;
};

// Total unfolded AST node count; the size metric for formula KBs.
std::size_t node_size(const FormulaKB& kb);

// Pairwise canonical_forget with the same refinement as forget_var: members
// without p survive, pairs of members with p are combined. Results are
// sigma-reduced; T is dropped, F short-circuits to {F}. The options' size
// cap applies with node_size as the metric.
FormulaKB canonical_forget_kb(const FormulaKB& kb, VarId p,
                              const ForgetOptions& opts = {});

FormulaKB canonical_retract(const FormulaKB& kb, const std::set<VarId>& q,
                            const std::vector<VarId>& order,
                            const ForgetOptions& opts = {});

// Forget the whole language; Inconsistent iff F is reached.
Outcome canonical_saturate(const FormulaKB& kb, const std::vector<VarId>& order,
                           const ForgetOptions& opts = {});

} // namespace boolforget
