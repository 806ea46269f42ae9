#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace boolforget {

// Dense handle for a propositional variable. Identity is per VarTable.
struct VarId {
    std::uint32_t value = 0;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

// A variable or its negation.
struct Literal {
    VarId var;
    bool positive = true;

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

// Bidirectional name <-> id map. Ids are handed out densely in intern order,
// so parsing the same input always yields the same ids.
class VarTable {
public:
    VarId intern(std::string_view name);
    std::optional<VarId> lookup(std::string_view name) const;

    const std::string& name(VarId v) const;
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VarId> index_;
};

} // namespace boolforget

template <>
struct std::hash<boolforget::VarId> {
    std::size_t operator()(const boolforget::VarId& v) const noexcept {
        return std::hash<std::uint32_t>{}(v.value);
    }
};
