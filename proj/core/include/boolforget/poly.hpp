#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "boolforget/valuation.hpp"
#include "boolforget/vartable.hpp"

namespace boolforget {

// Product of distinct variables; the empty product is the constant 1.
// Stored as a strictly ascending id sequence.
class Monomial {
public:
    Monomial() = default;
    static Monomial unit() { return {}; }
    static Monomial var(VarId v) { return Monomial({v}); }
    static Monomial from_vars(std::vector<VarId> vars);

    std::size_t degree() const { return vars_.size(); }
    bool is_unit() const { return vars_.empty(); }
    bool contains(VarId v) const;
    const std::vector<VarId>& vars() const { return vars_; }

    // Product in the idempotent quotient: set union of the factors.
    Monomial times(const Monomial& other) const;
    Monomial without(VarId v) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    explicit Monomial(std::vector<VarId> sorted) : vars_(std::move(sorted)) {}
    std::vector<VarId> vars_;

    friend struct MonomialHash;
};

// Term order used everywhere internally: degree descending, then
// lexicographic on the ascending id sequences. Puts constants last.
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

// Multilinear polynomial over GF(2), kept reduced at all times:
// terms are distinct monomials sorted by monomial_less, and x*x never
// appears because Monomial is a set. The zero polynomial has no terms.
class Poly {
public:
    Poly() = default;
    static Poly zero() { return {}; }
    static Poly one();
    static Poly var(VarId v);
    // Normalizes: sorts and cancels duplicate monomials mod 2.
    static Poly from_terms(std::vector<Monomial> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].is_unit(); }
    bool is_constant() const { return is_zero() || is_one(); }

    const std::vector<Monomial>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    std::size_t degree() const { return terms_.empty() ? 0 : terms_.front().degree(); }

    bool contains_var(VarId v) const;
    std::vector<VarId> vars() const; // ascending, distinct

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    struct SortedUniqueTag {};
    Poly(std::vector<Monomial> terms, SortedUniqueTag) : terms_(std::move(terms)) {}
    std::vector<Monomial> terms_;

    friend Poly add(const Poly&, const Poly&);
    friend Poly mul(const Poly&, const Poly&, std::size_t);
    friend Poly substitute(const Poly&, VarId, bool);
    friend Poly derivative(const Poly&, VarId);
};

// Deterministic total order on polynomials (id-based); used to keep
// knowledge-base members canonically sorted.
bool poly_less(const Poly& a, const Poly& b);

// Sum in GF(2): symmetric difference of the term sets.
Poly add(const Poly& a, const Poly& b);

// Product in the quotient ring. term_budget > 0 bounds the number of
// distinct terms the accumulator may hold; exceeding it raises
// ResourceCapError. 0 means unbounded.
Poly mul(const Poly& a, const Poly& b, std::size_t term_budget = 0);

inline Poly operator+(const Poly& a, const Poly& b) { return add(a, b); }
inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

// Evaluate at a point; throws EvalError if some variable of a is unassigned.
bool eval(const Poly& a, const Valuation& v);

// a with x_v fixed to the given bit.
Poly substitute(const Poly& a, VarId v, bool bit);

// Boolean derivative: the terms containing x_v, with x_v struck out.
// Equals substitute(a,v,1) + substitute(a,v,0).
Poly derivative(const Poly& a, VarId v);

// a = base + x_v * cofactor with neither part containing x_v.
struct Decomposition {
    Poly base;
    Poly cofactor;
};
Decomposition decompose(const Poly& a, VarId v);

// Combines two constraints while eliminating x_v:
//   1 + (1 + b1*b2) * (1 + (b1+c1)*(b2+c2))
// where ai = bi + x_v*ci. Symmetric; the result never mentions x_v, and
// when neither input does it degenerates to mul(a1, a2).
Poly independence_rule(const Poly& a1, const Poly& a2, VarId v,
                       std::size_t term_budget = 0);

// Size metric: per term max(1, degree), plus one for each '+'.
// The zero polynomial counts as 1.
std::size_t symbol_size(const Poly& a);

// Text format: terms joined by '+', each term '1', '0', or identifiers
// joined by '*'. Whitespace is insignificant. `line` seeds error positions.
Poly parse_poly(std::string_view text, VarTable& table, std::size_t line = 1);

// Canonical rendering: terms by degree descending then lexicographic on the
// name sequences; variables inside a term in ascending name order.
std::string print_poly(const Poly& a, const VarTable& table);

// Display order for KB listings; name-based so output does not depend on
// the order variables were first seen.
bool print_order_less(const Poly& a, const Poly& b, const VarTable& table);

} // namespace boolforget
