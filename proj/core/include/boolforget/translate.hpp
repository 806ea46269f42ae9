#pragma once

#include <cstdint>
#include <map>
#include <set>

#include "boolforget/formula.hpp"
#include "boolforget/poly.hpp"

namespace boolforget {

// Monomial with explicit exponents, e.g. x1^2*x2. Only the untruncated
// formula-to-polynomial image needs this; everything else works in the
// quotient where exponents collapse.
using RawMonomial = std::map<VarId, std::uint32_t>;

class RawPoly {
public:
    static RawPoly zero() { return {}; }
    static RawPoly one();
    static RawPoly var(VarId v);

    bool is_zero() const { return terms_.empty(); }
    const std::set<RawMonomial>& terms() const { return terms_; }

    // Collapse every positive exponent to 1 and cancel mod 2.
    Poly reduced() const;

    friend RawPoly add(const RawPoly& a, const RawPoly& b);
    friend RawPoly mul(const RawPoly& a, const RawPoly& b);
    friend bool operator==(const RawPoly&, const RawPoly&) = default;

private:
    std::set<RawMonomial> terms_; // GF(2) coefficients: membership = 1
};

// Full formula-to-polynomial image, exponents preserved:
//   F -> 0, T -> 1, p -> x_p, ~A -> 1+P(A), A&B -> P(A)*P(B),
//   A|B -> P(A)+P(B)+P(A)*P(B), A->B -> 1+P(A)+P(A)*P(B),
//   A<->B -> 1+P(A)+P(B).
RawPoly to_poly_P(const Formula& f);

// The reduced translation: to_poly_P followed by exponent collapse, computed
// directly in the quotient ring.
Poly project_pi(const Formula& f);

// Inverse direction: 0 -> F, a sum becomes a right-nested ~(. <-> .) chain
// over the terms in canonical order, and each term a right-nested & chain
// over its variables. project_pi(to_formula_theta(a)) == a exactly.
Formula to_formula_theta(const Poly& a);

} // namespace boolforget
