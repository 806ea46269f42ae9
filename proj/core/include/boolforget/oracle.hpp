#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "boolforget/forget.hpp"
#include "boolforget/formula.hpp"
#include "boolforget/poly.hpp"

namespace boolforget {

// Everything here decides semantics by brute-force truth-table enumeration,
// evaluating formulas directly on their syntax trees. It exists to check the
// polynomial machinery against an implementation that shares none of it.

inline constexpr std::size_t kMaxOracleVars = 24;

// Finite model set over an explicit ordered language. points holds one bit
// mask per model; bit i gives the value of language[i].
struct ModelSet {
    std::vector<VarId> language; // ascending, at most kMaxOracleVars entries
    std::set<std::uint32_t> points;

    std::size_t count() const { return points.size(); }
    friend bool operator==(const ModelSet&, const ModelSet&) = default;
};

Valuation mask_to_valuation(const std::vector<VarId>& language, std::uint32_t mask);

ModelSet models_of(const Formula& f, std::vector<VarId> language);
ModelSet models_of(const Formula& f);
ModelSet models_of(const std::vector<Formula>& kb, std::vector<VarId> language);
ModelSet models_of(const PolyKB& kb, std::vector<VarId> language);
ModelSet models_of(const PolyKB& kb);

// Restriction of the model set to a sub-language.
ModelSet project_models(const ModelSet& m, const std::vector<VarId>& keep);

bool oracle_entails(const PolyKB& kb, const Formula& goal);
bool oracle_entails(const std::vector<Formula>& kb, const Formula& goal);

bool oracle_equivalent(const Formula& a, const Formula& b);
bool oracle_equivalent(const PolyKB& a, const PolyKB& b);
bool oracle_equivalent(const PolyKB& a, const std::vector<Formula>& b);

} // namespace boolforget
