#include "boolforget/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "boolforget/errors.hpp"

namespace boolforget {

Monomial Monomial::from_vars(std::vector<VarId> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return Monomial(std::move(vars));
}

bool Monomial::contains(VarId v) const {
    return std::binary_search(vars_.begin(), vars_.end(), v);
}

Monomial Monomial::times(const Monomial& other) const {
    std::vector<VarId> merged;
    merged.reserve(vars_.size() + other.vars_.size());
    std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                   std::back_inserter(merged));
    return Monomial(std::move(merged));
}

Monomial Monomial::without(VarId v) const {
    std::vector<VarId> rest;
    rest.reserve(vars_.size());
    for (VarId x : vars_)
        if (x != v) rest.push_back(x);
    return Monomial(std::move(rest));
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return std::lexicographical_compare(a.vars().begin(), a.vars().end(),
                                        b.vars().begin(), b.vars().end());
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (VarId v : m.vars_) {
        h ^= v.value;
        h *= 0x100000001b3ull;
    }
    return h;
}

Poly Poly::one() { return Poly({Monomial::unit()}, SortedUniqueTag{}); }

Poly Poly::var(VarId v) { return Poly({Monomial::var(v)}, SortedUniqueTag{}); }

Poly Poly::from_terms(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end(), monomial_less);
    std::vector<Monomial> reduced;
    reduced.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) reduced.push_back(terms[i]);
        i = j;
    }
    return Poly(std::move(reduced), SortedUniqueTag{});
}

bool Poly::contains_var(VarId v) const {
    for (const Monomial& m : terms_)
        if (m.contains(v)) return true;
    return false;
}

std::vector<VarId> Poly::vars() const {
    std::vector<VarId> out;
    for (const Monomial& m : terms_) out.insert(out.end(), m.vars().begin(), m.vars().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool poly_less(const Poly& a, const Poly& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (ta[i] == tb[i]) continue;
        return monomial_less(ta[i], tb[i]);
    }
    return ta.size() < tb.size();
}

Poly add(const Poly& a, const Poly& b) {
    std::vector<Monomial> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ea = a.terms_.end();
    auto ib = b.terms_.begin(), eb = b.terms_.end();
    while (ia != ea && ib != eb) {
        if (*ia == *ib) {
            ++ia; // mod-2 cancellation
            ++ib;
        } else if (monomial_less(*ia, *ib)) {
            out.push_back(*ia++);
        } else {
            out.push_back(*ib++);
        }
    }
    out.insert(out.end(), ia, ea);
    out.insert(out.end(), ib, eb);
    return Poly::from_terms(std::move(out));
}

Poly mul(const Poly& a, const Poly& b, std::size_t term_budget) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    if (a.is_one()) return b;
    if (b.is_one()) return a;

    std::unordered_set<Monomial, MonomialHash> acc;
    acc.reserve(a.terms_.size() + b.terms_.size());
    for (const Monomial& ma : a.terms_) {
        for (const Monomial& mb : b.terms_) {
            Monomial prod = ma.times(mb);
            auto it = acc.find(prod);
            if (it != acc.end()) {
                acc.erase(it); // mod-2 cancellation
            } else {
                acc.insert(std::move(prod));
                if (term_budget != 0 && acc.size() > term_budget)
                    throw ResourceCapError("product exceeded the term budget");
            }
        }
    }
    std::vector<Monomial> terms(acc.begin(), acc.end());
    return Poly::from_terms(std::move(terms));
}

bool eval(const Poly& a, const Valuation& v) {
    bool acc = false;
    for (const Monomial& m : a.terms()) {
        bool term = true;
        for (VarId x : m.vars()) {
            if (!v.at(x)) {
                term = false;
                break;
            }
        }
        acc ^= term;
    }
    return acc;
}

Poly substitute(const Poly& a, VarId v, bool bit) {
    std::vector<Monomial> out;
    out.reserve(a.terms_.size());
    for (const Monomial& m : a.terms_) {
        if (!m.contains(v)) {
            out.push_back(m);
        } else if (bit) {
            out.push_back(m.without(v));
        }
    }
    return Poly::from_terms(std::move(out));
}

Poly derivative(const Poly& a, VarId v) {
    std::vector<Monomial> out;
    for (const Monomial& m : a.terms_)
        if (m.contains(v)) out.push_back(m.without(v));
    return Poly::from_terms(std::move(out));
}

Decomposition decompose(const Poly& a, VarId v) {
    std::vector<Monomial> base;
    std::vector<Monomial> cof;
    for (const Monomial& m : a.terms()) {
        if (m.contains(v)) {
            cof.push_back(m.without(v));
        } else {
            base.push_back(m);
        }
    }
    return {Poly::from_terms(std::move(base)), Poly::from_terms(std::move(cof))};
}

Poly independence_rule(const Poly& a1, const Poly& a2, VarId v, std::size_t term_budget) {
    auto [b1, c1] = decompose(a1, v);
    auto [b2, c2] = decompose(a2, v);
    const Poly one = Poly::one();
    Poly left = add(one, mul(b1, b2, term_budget));
    Poly right = add(one, mul(add(b1, c1), add(b2, c2), term_budget));
    return add(one, mul(left, right, term_budget));
}

std::size_t symbol_size(const Poly& a) {
    if (a.is_zero()) return 1;
    std::size_t n = a.term_count() - 1; // the '+' separators
    for (const Monomial& m : a.terms()) n += std::max<std::size_t>(1, m.degree());
    return n;
}

namespace {

struct PolyLexer {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line;
    std::size_t col = 1;

    void skip_space() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '\n') {
                ++line;
                col = 1;
                ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col;
                ++pos;
            } else {
                break;
            }
        }
    }

    bool done() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    void advance(std::size_t n) {
        pos += n;
        col += n;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// factor := IDENT | '1' | '0'; returns the factor as a polynomial.
Poly parse_factor(PolyLexer& lx, VarTable& table) {
    char c = lx.peek();
    if (c == '\0') lx.fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = lx.pos;
        while (lx.pos < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
            lx.advance(1);
        std::string_view digits = lx.text.substr(start, lx.pos - start);
        if (digits == "1") return Poly::one();
        if (digits == "0") return Poly::zero();
        lx.col -= digits.size();
        lx.fail("constants are '0' or '1'");
    }
    if (ident_start(c)) {
        std::size_t start = lx.pos;
        while (lx.pos < lx.text.size() && ident_char(lx.text[lx.pos])) lx.advance(1);
        return Poly::var(table.intern(lx.text.substr(start, lx.pos - start)));
    }
    lx.fail(std::string("unexpected character '") + c + "'");
}

} // namespace

Poly parse_poly(std::string_view text, VarTable& table, std::size_t line) {
    PolyLexer lx{text, 0, line};
    if (lx.done()) lx.fail("empty polynomial");
    Poly sum = Poly::zero();
    for (;;) {
        Poly term = parse_factor(lx, table);
        while (lx.peek() == '*') {
            lx.advance(1);
            term = mul(term, parse_factor(lx, table));
        }
        sum = add(sum, term);
        if (lx.peek() != '+') break;
        lx.advance(1);
    }
    if (!lx.done()) lx.fail(std::string("unexpected character '") + lx.peek() + "'");
    return sum;
}

namespace {

std::vector<std::string> term_names(const Monomial& m, const VarTable& table) {
    std::vector<std::string> names;
    names.reserve(m.degree());
    for (VarId v : m.vars()) names.push_back(table.name(v));
    std::sort(names.begin(), names.end());
    return names;
}

bool named_term_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

std::vector<std::vector<std::string>> named_terms(const Poly& a, const VarTable& table) {
    std::vector<std::vector<std::string>> out;
    out.reserve(a.term_count());
    for (const Monomial& m : a.terms()) out.push_back(term_names(m, table));
    std::sort(out.begin(), out.end(), named_term_less);
    return out;
}

} // namespace

std::string print_poly(const Poly& a, const VarTable& table) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& names : named_terms(a, table)) {
        if (!first) out += '+';
        first = false;
        if (names.empty()) {
            out += '1';
            continue;
        }
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (i > 0) out += '*';
            out += names[i];
        }
    }
    return out;
}

bool print_order_less(const Poly& a, const Poly& b, const VarTable& table) {
    auto ta = named_terms(a, table);
    auto tb = named_terms(b, table);
    std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (ta[i] == tb[i]) continue;
        return named_term_less(ta[i], tb[i]);
    }
    return ta.size() < tb.size();
}

} // namespace boolforget
