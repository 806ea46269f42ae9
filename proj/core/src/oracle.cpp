#include "boolforget/oracle.hpp"

#include <algorithm>

#include "boolforget/errors.hpp"

namespace boolforget {

namespace {

std::vector<VarId> checked_language(std::vector<VarId> language) {
    std::sort(language.begin(), language.end());
    language.erase(std::unique(language.begin(), language.end()), language.end());
    if (language.size() > kMaxOracleVars)
        throw PreconditionError("oracle language exceeds " +
                                std::to_string(kMaxOracleVars) + " variables");
    return language;
}

void require_covers(const std::vector<VarId>& language, const std::vector<VarId>& used) {
    if (!std::includes(language.begin(), language.end(), used.begin(), used.end()))
        throw PreconditionError("oracle language does not cover the input");
}

// Calls fn with every valuation of the language.
template <typename Fn>
void enumerate(const std::vector<VarId>& language, Fn&& fn) {
    std::uint64_t limit = std::uint64_t{1} << language.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask)
        fn(static_cast<std::uint32_t>(mask),
           mask_to_valuation(language, static_cast<std::uint32_t>(mask)));
}

bool kb_holds(const PolyKB& kb, const Valuation& v) {
    for (const Poly& p : kb.members())
        if (!eval(p, v)) return false;
    return true;
}

bool kb_holds(const std::vector<Formula>& kb, const Valuation& v) {
    for (const Formula& f : kb)
        if (!eval_formula(f, v)) return false;
    return true;
}

std::vector<VarId> union_vars(std::vector<VarId> a, const std::vector<VarId>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return checked_language(std::move(a));
}

} // namespace

Valuation mask_to_valuation(const std::vector<VarId>& language, std::uint32_t mask) {
    Valuation v;
    for (std::size_t i = 0; i < language.size(); ++i)
        v.set(language[i], (mask >> i) & 1u);
    return v;
}

ModelSet models_of(const Formula& f, std::vector<VarId> language) {
    ModelSet m{checked_language(std::move(language)), {}};
    require_covers(m.language, vars(f));
    enumerate(m.language, [&](std::uint32_t mask, const Valuation& v) {
        if (eval_formula(f, v)) m.points.insert(mask);
    });
    return m;
}

ModelSet models_of(const Formula& f) { return models_of(f, vars(f)); }

ModelSet models_of(const std::vector<Formula>& kb, std::vector<VarId> language) {
    ModelSet m{checked_language(std::move(language)), {}};
    for (const Formula& f : kb) require_covers(m.language, vars(f));
    enumerate(m.language, [&](std::uint32_t mask, const Valuation& v) {
        if (kb_holds(kb, v)) m.points.insert(mask);
    });
    return m;
}

ModelSet models_of(const PolyKB& kb, std::vector<VarId> language) {
    ModelSet m{checked_language(std::move(language)), {}};
    for (const Poly& p : kb.members()) require_covers(m.language, p.vars());
    enumerate(m.language, [&](std::uint32_t mask, const Valuation& v) {
        if (kb_holds(kb, v)) m.points.insert(mask);
    });
    return m;
}

ModelSet models_of(const PolyKB& kb) {
    return models_of(kb, kb.language());
}

ModelSet project_models(const ModelSet& m, const std::vector<VarId>& keep) {
    std::vector<VarId> sub = keep;
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    if (!std::includes(m.language.begin(), m.language.end(), sub.begin(), sub.end()))
        throw PreconditionError("projection target is not a sub-language");

    std::vector<std::size_t> idx;
    idx.reserve(sub.size());
    for (VarId v : sub) {
        auto it = std::lower_bound(m.language.begin(), m.language.end(), v);
        idx.push_back(static_cast<std::size_t>(it - m.language.begin()));
    }
    ModelSet out{std::move(sub), {}};
    for (std::uint32_t mask : m.points) {
        std::uint32_t reduced = 0;
        for (std::size_t i = 0; i < idx.size(); ++i)
            reduced |= ((mask >> idx[i]) & 1u) << i;
        out.points.insert(reduced);
    }
    return out;
}

bool oracle_entails(const PolyKB& kb, const Formula& goal) {
    auto language = union_vars(kb.language(), vars(goal));
    bool holds = true;
    enumerate(language, [&](std::uint32_t, const Valuation& v) {
        if (holds && kb_holds(kb, v) && !eval_formula(goal, v)) holds = false;
    });
    return holds;
}

bool oracle_entails(const std::vector<Formula>& kb, const Formula& goal) {
    std::vector<VarId> language = vars(goal);
    for (const Formula& f : kb) language = union_vars(std::move(language), vars(f));
    bool holds = true;
    enumerate(language, [&](std::uint32_t, const Valuation& v) {
        if (holds && kb_holds(kb, v) && !eval_formula(goal, v)) holds = false;
    });
    return holds;
}

bool oracle_equivalent(const Formula& a, const Formula& b) {
    auto language = union_vars(vars(a), vars(b));
    bool same = true;
    enumerate(language, [&](std::uint32_t, const Valuation& v) {
        if (same && eval_formula(a, v) != eval_formula(b, v)) same = false;
    });
    return same;
}

bool oracle_equivalent(const PolyKB& a, const PolyKB& b) {
    auto language = union_vars(a.language(), b.language());
    bool same = true;
    enumerate(language, [&](std::uint32_t, const Valuation& v) {
        if (same && kb_holds(a, v) != kb_holds(b, v)) same = false;
    });
    return same;
}

bool oracle_equivalent(const PolyKB& a, const std::vector<Formula>& b) {
    std::vector<VarId> language = a.language();
    for (const Formula& f : b) language = union_vars(std::move(language), vars(f));
    bool same = true;
    enumerate(language, [&](std::uint32_t, const Valuation& v) {
        if (same && kb_holds(a, v) != kb_holds(b, v)) same = false;
    });
    return same;
}

} // namespace boolforget
