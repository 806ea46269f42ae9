#include "boolforget/reason.hpp"

#include <algorithm>
#include <set>

#include "boolforget/errors.hpp"
#include "boolforget/translate.hpp"

namespace boolforget {

Poly literal_poly(Literal l) {
    Poly x = Poly::var(l.var);
    return l.positive ? x : add(Poly::one(), x);
}

ConsistencyResult is_consistent(const PolyKB& kb, const ForgetOptions& opts) {
    SaturationTrace trace = saturate(kb, default_order(kb), opts);
    bool ok = trace.outcome == Outcome::Consistent;
    return {ok, std::move(trace)};
}

namespace {

PolyKB with_extra(const PolyKB& kb, std::vector<Poly> extra) {
    std::vector<Poly> members = kb.members();
    std::vector<VarId> lang = kb.language();
    for (Poly& p : extra) {
        auto vs = p.vars();
        lang.insert(lang.end(), vs.begin(), vs.end());
        members.push_back(std::move(p));
    }
    return PolyKB::of(std::move(members), std::move(lang));
}

EntailmentVerdict direct_entails(const PolyKB& kb, const Formula& goal,
                                 const ForgetOptions& opts, Method method) {
    PolyKB extended = with_extra(kb, {add(Poly::one(), project_pi(goal))});
    SaturationTrace trace = saturate(extended, default_order(extended), opts);
    EntailmentVerdict verdict;
    verdict.holds = trace.outcome == Outcome::Inconsistent;
    verdict.method = method;
    verdict.trace = std::move(trace);
    return verdict;
}

} // namespace

EntailmentVerdict entails(const PolyKB& kb, const Formula& goal, const ForgetOptions& opts) {
    return direct_entails(kb, goal, opts, Method::Direct);
}

EntailmentVerdict entails_localized(const PolyKB& kb, const Formula& goal,
                                    const ForgetOptions& opts) {
    auto goal_vars = vars(goal);
    std::set<VarId> q;
    for (VarId v : kb.language())
        if (!std::binary_search(goal_vars.begin(), goal_vars.end(), v)) q.insert(v);

    std::vector<VarId> order;
    for (VarId v : default_order(kb))
        if (q.count(v) > 0) order.push_back(v);

    PolyKB reduced = retract(kb, q, order, opts);
    EntailmentVerdict verdict = direct_entails(reduced, goal, opts, Method::Localized);
    verdict.retraction_used = std::move(reduced);
    return verdict;
}

bool is_sensitive(const PolyKB& kb, const Formula& f, VarId p, const ForgetOptions& opts) {
    auto fv = vars(f);
    if (!std::binary_search(fv.begin(), fv.end(), p))
        throw PreconditionError("is_sensitive: variable does not occur in the formula");
    Poly d = derivative(project_pi(f), p);
    PolyKB extended = with_extra(kb, {std::move(d)});
    return saturate(extended, default_order(extended), opts).outcome == Outcome::Consistent;
}

bool irrelevance_check(const Formula& f, VarId p) {
    return derivative(project_pi(f), p).is_zero();
}

DangerousReport dangerous_literals(const PolyKB& kb, const std::vector<Literal>& facts,
                                   const std::vector<Literal>& state, VarId warning,
                                   const ForgetOptions& opts) {
    std::vector<Poly> state_polys;
    state_polys.reserve(state.size());
    for (Literal l : state) state_polys.push_back(literal_poly(l));

    PolyKB with_state = with_extra(kb, state_polys);
    if (saturate(with_state, default_order(with_state), opts).outcome != Outcome::Consistent)
        throw PreconditionError("dangerous_literals: the state contradicts the knowledge base");
    if (direct_entails(with_state, Formula::var(warning), opts, Method::Direct).holds)
        throw PreconditionError("dangerous_literals: the warning already follows from the state");

    // Keep only the variables the candidate tests can mention.
    std::set<VarId> keep{warning};
    for (Literal l : facts) keep.insert(l.var);
    for (Literal l : state) keep.insert(l.var);
    std::set<VarId> q;
    for (VarId v : kb.language())
        if (keep.count(v) == 0) q.insert(v);
    std::vector<VarId> order;
    for (VarId v : default_order(kb))
        if (q.count(v) > 0) order.push_back(v);
    PolyKB reduced = retract(kb, q, order, opts);

    Poly not_warning = add(Poly::one(), Poly::var(warning));
    DangerousReport report;
    std::set<Literal> state_set(state.begin(), state.end());
    std::set<Literal> tested;
    for (Literal l : facts) {
        if (!tested.insert(l).second) continue;
        if (state_set.count(l) > 0) {
            report.in_state.push_back(l);
            continue;
        }
        std::vector<Poly> base = state_polys;
        base.push_back(literal_poly(l));
        PolyKB candidate = with_extra(reduced, base);
        if (saturate(candidate, default_order(candidate), opts).outcome ==
            Outcome::Inconsistent) {
            report.vacuous.push_back(l);
            continue;
        }
        PolyKB refuted = with_extra(candidate, {not_warning});
        if (saturate(refuted, default_order(refuted), opts).outcome == Outcome::Inconsistent) {
            report.dangerous.push_back(l);
        } else {
            report.safe.push_back(l);
        }
    }
    report.retraction = std::move(reduced);
    return report;
}

} // namespace boolforget
