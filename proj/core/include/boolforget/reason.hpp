#pragma once

#include <optional>
#include <vector>

#include "boolforget/forget.hpp"
#include "boolforget/formula.hpp"
#include "boolforget/poly.hpp"

namespace boolforget {

// Polynomial asserting the literal: x for p, 1+x for ~p.
Poly literal_poly(Literal l);

struct ConsistencyResult {
    bool consistent = false;
    SaturationTrace trace;
};

// Saturation over the default elimination order.
ConsistencyResult is_consistent(const PolyKB& kb, const ForgetOptions& opts = {});

enum class Method { Direct, Localized };

struct EntailmentVerdict {
    bool holds = false;
    Method method = Method::Direct;
    // The intermediate KB over var(goal) when the localized route was taken.
    std::optional<PolyKB> retraction_used;
    SaturationTrace trace;
};

// K entails F iff K plus the complement constraint 1+pi(F) saturates to 0.
EntailmentVerdict entails(const PolyKB& kb, const Formula& goal,
                          const ForgetOptions& opts = {});

// Same verdict, but first retracts K onto the goal's variables so the final
// saturation runs over a small language.
EntailmentVerdict entails_localized(const PolyKB& kb, const Formula& goal,
                                    const ForgetOptions& opts = {});

// F is sensitive to p (relative to K) iff K stays consistent when extended
// with the derivative of F by p. Requires p to occur in F.
bool is_sensitive(const PolyKB& kb, const Formula& f, VarId p,
                  const ForgetOptions& opts = {});

// True when p cannot change the truth of F under any valuation, i.e. the
// derivative of the translation vanishes.
bool irrelevance_check(const Formula& f, VarId p);

struct DangerousReport {
    std::vector<Literal> dangerous; // adding the literal makes K |= warning
    std::vector<Literal> vacuous;   // the literal contradicts the state outright
    std::vector<Literal> safe;
    std::vector<Literal> in_state;  // already part of the state; never reported
    PolyKB retraction;              // the reduced context all checks ran against
};

// Which candidate facts would trip the warning if they became true, given
// what is already known. The KB is first retracted onto the variables of the
// candidates, the state, and the warning; each candidate is then tested
// against that small context. Preconditions: K plus the state is consistent
// and does not already entail the warning.
DangerousReport dangerous_literals(const PolyKB& kb, const std::vector<Literal>& facts,
                                   const std::vector<Literal>& state, VarId warning,
                                   const ForgetOptions& opts = {});

} // namespace boolforget
