#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "boolforget/errors.hpp"
#include "boolforget/vartable.hpp"

namespace boolforget {

// Partial or total assignment of truth values to variables.
// Entries are kept sorted by variable id.
class Valuation {
public:
    Valuation() = default;

    void set(VarId v, bool bit) {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                                   [](const auto& e, VarId x) { return e.first < x; });
        if (it != entries_.end() && it->first == v) {
            it->second = bit;
        } else {
            entries_.insert(it, {v, bit});
        }
    }

    std::optional<bool> get(VarId v) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                                   [](const auto& e, VarId x) { return e.first < x; });
        if (it != entries_.end() && it->first == v) return it->second;
        return std::nullopt;
    }

    bool at(VarId v) const {
        auto b = get(v);
        if (!b) throw EvalError("variable not assigned");
        return *b;
    }

    bool defines(VarId v) const { return get(v).has_value(); }

    const std::vector<std::pair<VarId, bool>>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    friend bool operator==(const Valuation&, const Valuation&) = default;

private:
    std::vector<std::pair<VarId, bool>> entries_;
};

// The same assignment seen as a coordinate tuple: coords[i] is the value of
// language[i], with the language listed in ascending id order.
struct Point {
    std::vector<VarId> language;
    std::vector<bool> coords;

    friend bool operator==(const Point&, const Point&) = default;
};

inline Point valuation_to_point(const Valuation& v) {
    Point o;
    o.language.reserve(v.size());
    o.coords.reserve(v.size());
    for (const auto& [var, bit] : v.entries()) {
        o.language.push_back(var);
        o.coords.push_back(bit);
    }
    return o;
}

inline Valuation point_to_valuation(const Point& o) {
    if (o.language.size() != o.coords.size())
        throw PreconditionError("point: language/coords length mismatch");
    Valuation v;
    for (std::size_t i = 0; i < o.language.size(); ++i) v.set(o.language[i], o.coords[i]);
    return v;
}

} // namespace boolforget
