#include "boolforget/forget.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "boolforget/errors.hpp"

namespace boolforget {

std::size_t size_cap_from_env(std::size_t fallback) {
    const char* raw = std::getenv("BOOLFORGET_SIZE_CAP");
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0')
        throw std::invalid_argument("BOOLFORGET_SIZE_CAP must be a non-negative integer");
    return static_cast<std::size_t>(v);
}

namespace {

std::vector<Poly> normalize_members(std::vector<Poly> members) {
    std::sort(members.begin(), members.end(), poly_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

std::vector<VarId> union_language(const std::vector<Poly>& members) {
    std::vector<VarId> lang;
    for (const Poly& p : members) {
        auto vs = p.vars();
        lang.insert(lang.end(), vs.begin(), vs.end());
    }
    std::sort(lang.begin(), lang.end());
    lang.erase(std::unique(lang.begin(), lang.end()), lang.end());
    return lang;
}

} // namespace

PolyKB PolyKB::of(std::vector<Poly> members) {
    PolyKB kb;
    kb.members_ = normalize_members(std::move(members));
    kb.language_ = union_language(kb.members_);
    return kb;
}

PolyKB PolyKB::of(std::vector<Poly> members, std::vector<VarId> language) {
    PolyKB kb;
    kb.members_ = normalize_members(std::move(members));
    std::sort(language.begin(), language.end());
    language.erase(std::unique(language.begin(), language.end()), language.end());
    auto used = union_language(kb.members_);
    if (!std::includes(language.begin(), language.end(), used.begin(), used.end()))
        throw PreconditionError("declared language does not cover the members");
    kb.language_ = std::move(language);
    return kb;
}

bool PolyKB::contains(const Poly& p) const {
    return std::binary_search(members_.begin(), members_.end(), p,
                              [](const Poly& a, const Poly& b) { return poly_less(a, b); });
}

bool PolyKB::contains_zero() const { return contains(Poly::zero()); }

std::size_t symbol_size(const PolyKB& kb) {
    std::size_t n = 0;
    for (const Poly& p : kb.members()) n += symbol_size(p);
    return n;
}

std::vector<VarId> default_order(const PolyKB& kb) {
    std::vector<std::pair<std::size_t, VarId>> counts;
    counts.reserve(kb.language().size());
    for (VarId v : kb.language()) {
        std::size_t c = 0;
        for (const Poly& p : kb.members())
            if (p.contains_var(v)) ++c;
        counts.push_back({c, v});
    }
    std::sort(counts.begin(), counts.end());
    std::vector<VarId> order;
    order.reserve(counts.size());
    for (const auto& [c, v] : counts) order.push_back(v);
    return order;
}

namespace {

std::vector<VarId> language_without(const std::vector<VarId>& lang, VarId v) {
    std::vector<VarId> out;
    out.reserve(lang.size());
    for (VarId x : lang)
        if (x != v) out.push_back(x);
    return out;
}

PolyKB zero_kb(std::vector<VarId> language) {
    return PolyKB::of({Poly::zero()}, std::move(language));
}

} // namespace

PolyKB forget_var(const PolyKB& kb, VarId v, const ForgetOptions& opts) {
    std::vector<VarId> new_lang = language_without(kb.language(), v);
    if (kb.contains_zero()) return zero_kb(std::move(new_lang));

    auto cmp = [](const Poly& a, const Poly& b) { return poly_less(a, b); };
    std::set<Poly, decltype(cmp)> result(cmp);
    std::vector<const Poly*> active;
    std::size_t budget = opts.size_cap_symbols;
    std::size_t running = 0;

    auto insert_checked = [&](Poly p) {
        if (opts.drop_tautologies && p.is_one()) return;
        auto [it, added] = result.insert(std::move(p));
        if (!added) return;
        running += symbol_size(*it);
        if (budget != 0 && running > budget)
            throw ResourceCapError("knowledge base exceeded the size cap (" +
                                   std::to_string(budget) + " symbols)");
    };

    for (const Poly& p : kb.members()) {
        if (p.contains_var(v)) {
            active.push_back(&p);
        } else {
            insert_checked(p);
        }
    }
    for (std::size_t i = 0; i < active.size(); ++i) {
        for (std::size_t j = i; j < active.size(); ++j) {
            Poly r = independence_rule(*active[i], *active[j], v, budget);
            if (r.is_zero()) return zero_kb(std::move(new_lang));
            insert_checked(std::move(r));
        }
    }
    std::vector<Poly> members(result.begin(), result.end());
    return PolyKB::of(std::move(members), std::move(new_lang));
}

PolyKB retract(const PolyKB& kb, const std::set<VarId>& q,
               const std::vector<VarId>& order, const ForgetOptions& opts) {
    if (order.size() != q.size() ||
        !std::all_of(order.begin(), order.end(), [&](VarId v) { return q.count(v) > 0; }))
        throw PreconditionError("order must be a permutation of the forget set");
    std::unordered_set<std::uint32_t> seen;
    for (VarId v : order)
        if (!seen.insert(v.value).second)
            throw PreconditionError("order must be a permutation of the forget set");

    PolyKB out = kb;
    for (VarId v : order) out = forget_var(out, v, opts);
    return out;
}

SaturationTrace saturate(const PolyKB& kb, const std::vector<VarId>& order,
                         const ForgetOptions& opts) {
    for (VarId v : kb.language()) {
        if (std::find(order.begin(), order.end(), v) == order.end())
            throw PreconditionError("elimination order must cover the language");
    }

    SaturationTrace trace;
    PolyKB cur = kb;
    if (cur.contains_zero()) {
        trace.outcome = Outcome::Inconsistent;
        trace.final_kb = zero_kb({});
        return trace;
    }
    for (VarId v : order) {
        std::size_t actives = 0;
        for (const Poly& p : cur.members())
            if (p.contains_var(v)) ++actives;

        auto t0 = std::chrono::steady_clock::now();
        cur = forget_var(cur, v, opts);
        auto t1 = std::chrono::steady_clock::now();

        SaturationStep step;
        step.variable = v;
        step.pairs_processed = actives * (actives + 1) / 2;
        step.kb_members = cur.size();
        step.kb_size_symbols = symbol_size(cur);
        step.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        trace.steps.push_back(step);

        if (cur.contains_zero()) {
            trace.outcome = Outcome::Inconsistent;
            trace.final_kb = std::move(cur);
            return trace;
        }
    }
    for (const Poly& p : cur.members()) {
        if (!p.is_constant())
            throw std::logic_error("saturation left a non-constant member");
    }
    trace.outcome = Outcome::Consistent;
    trace.final_kb = std::move(cur);
    return trace;
}

Formula canonical_forget(const Formula& f, const Formula& g, VarId p) {
    Formula both = Formula::conjunction(f, g);
    Formula on = substitute(both, p, Formula::verum());
    Formula off = substitute(both, p, Formula::falsum());
    return simplify_sigma(Formula::disjunction(std::move(on), std::move(off)));
}

FormulaKB FormulaKB::of(std::vector<Formula> members) {
    FormulaKB kb;
    std::unordered_set<std::size_t> hashes;
    for (Formula& f : members) {
        bool dup = false;
        if (!hashes.insert(f.hash()).second) {
            for (const Formula& g : kb.members_) {
                if (g == f) {
                    dup = true;
                    break;
                }
            }
        }
        if (!dup) kb.members_.push_back(std::move(f));
    }
    return kb;
}

std::vector<VarId> FormulaKB::language() const {
    std::set<VarId> lang;
    for (const Formula& f : members_) {
        for (VarId v : vars(f)) lang.insert(v);
    }
    return std::vector<VarId>(lang.begin(), lang.end());
}

bool FormulaKB::contains_falsum() const {
    for (const Formula& f : members_)
        if (f.kind() == Conn::False) return true;
    return false;
}

std::size_t node_size(const FormulaKB& kb) {
    std::size_t n = 0;
    for (const Formula& f : kb.members()) n += f.node_count();
    return n;
}

FormulaKB canonical_forget_kb(const FormulaKB& kb, VarId p, const ForgetOptions& opts) {
    if (kb.contains_falsum()) return FormulaKB::of({Formula::falsum()});

    std::vector<Formula> survivors;
    std::unordered_set<Formula, FormulaHash> seen;
    std::vector<const Formula*> active;
    std::size_t budget = opts.size_cap_symbols;
    std::size_t running = 0;

    auto insert_checked = [&](Formula f) {
        if (!seen.insert(f).second) return;
        running += f.node_count();
        if (budget != 0 && running > budget)
            throw ResourceCapError("knowledge base exceeded the size cap (" +
                                   std::to_string(budget) + " nodes)");
        survivors.push_back(std::move(f));
    };

    for (const Formula& f : kb.members()) {
        auto vs = vars(f);
        if (std::binary_search(vs.begin(), vs.end(), p)) {
            active.push_back(&f);
        } else if (f.kind() != Conn::True) {
            insert_checked(f);
        }
    }
    for (std::size_t i = 0; i < active.size(); ++i) {
        for (std::size_t j = i; j < active.size(); ++j) {
            Formula r = canonical_forget(*active[i], *active[j], p);
            if (r.kind() == Conn::False) return FormulaKB::of({Formula::falsum()});
            if (r.kind() == Conn::True) continue;
            insert_checked(std::move(r));
        }
    }
    return FormulaKB::of(std::move(survivors));
}

FormulaKB canonical_retract(const FormulaKB& kb, const std::set<VarId>& q,
                            const std::vector<VarId>& order, const ForgetOptions& opts) {
    if (order.size() != q.size() ||
        !std::all_of(order.begin(), order.end(), [&](VarId v) { return q.count(v) > 0; }))
        throw PreconditionError("order must be a permutation of the forget set");
    std::unordered_set<std::uint32_t> seen;
    for (VarId v : order)
        if (!seen.insert(v.value).second)
            throw PreconditionError("order must be a permutation of the forget set");

    FormulaKB out = kb;
    for (VarId v : order) out = canonical_forget_kb(out, v, opts);
    return out;
}

Outcome canonical_saturate(const FormulaKB& kb, const std::vector<VarId>& order,
                           const ForgetOptions& opts) {
    auto lang = kb.language();
    for (VarId v : lang) {
        if (std::find(order.begin(), order.end(), v) == order.end())
            throw PreconditionError("elimination order must cover the language");
    }
    FormulaKB cur = kb;
    if (cur.contains_falsum()) return Outcome::Inconsistent;
    for (VarId v : order) {
        cur = canonical_forget_kb(cur, v, opts);
        if (cur.contains_falsum()) return Outcome::Inconsistent;
    }
    return Outcome::Consistent;
}

} // namespace boolforget
