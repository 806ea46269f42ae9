#include "boolforget/vartable.hpp"

#include <stdexcept>

namespace boolforget {

VarId VarTable::intern(std::string_view name) {
    auto it = index_.find(std::string(name));
    if (it != index_.end()) return it->second;
    VarId id{static_cast<std::uint32_t>(names_.size())};
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return id;
}

std::optional<VarId> VarTable::lookup(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::string& VarTable::name(VarId v) const {
    if (v.value >= names_.size()) throw std::out_of_range("VarTable::name: unknown id");
    return names_[v.value];
}

} // namespace boolforget
