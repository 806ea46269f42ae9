#include "boolforget/formula.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

#include "boolforget/errors.hpp"

namespace boolforget {

struct Formula::Node {
    Conn kind;
    VarId v{};
    Formula a{nullptr};
    Formula b{nullptr};
    std::size_t count; // unfolded tree size
    std::size_t hash;
};

namespace {

std::size_t combine(std::size_t seed, std::size_t h) {
    return seed ^ (h + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

} // namespace

Formula Formula::make(Conn kind, VarId v, Formula a, Formula b) {
    std::size_t count = 1;
    std::size_t h = combine(static_cast<std::size_t>(kind) + 1, v.value);
    if (a.n_) {
        count += a.n_->count;
        h = combine(h, a.n_->hash);
    }
    if (b.n_) {
        count += b.n_->count;
        h = combine(h, b.n_->hash);
    }
    return Formula(std::make_shared<const Node>(Node{kind, v, std::move(a), std::move(b), count, h}));
}

Formula Formula::verum() {
    static const Formula t = make(Conn::True, VarId{}, Formula(nullptr), Formula(nullptr));
    return t;
}

Formula Formula::falsum() {
    static const Formula f = make(Conn::False, VarId{}, Formula(nullptr), Formula(nullptr));
    return f;
}

Formula Formula::var(VarId v) { return make(Conn::Var, v, Formula(nullptr), Formula(nullptr)); }

Formula Formula::negation(Formula f) {
    return make(Conn::Not, VarId{}, std::move(f), Formula(nullptr));
}
Formula Formula::conjunction(Formula a, Formula b) {
    return make(Conn::And, VarId{}, std::move(a), std::move(b));
}
Formula Formula::disjunction(Formula a, Formula b) {
    return make(Conn::Or, VarId{}, std::move(a), std::move(b));
}
Formula Formula::implication(Formula a, Formula b) {
    return make(Conn::Imp, VarId{}, std::move(a), std::move(b));
}
Formula Formula::biconditional(Formula a, Formula b) {
    return make(Conn::Iff, VarId{}, std::move(a), std::move(b));
}

Conn Formula::kind() const { return n_->kind; }

VarId Formula::var() const {
    if (n_->kind != Conn::Var) throw std::logic_error("Formula::var on non-variable");
    return n_->v;
}

const Formula& Formula::lhs() const { return n_->a; }
const Formula& Formula::rhs() const { return n_->b; }

bool Formula::is_constant() const { return n_->kind == Conn::True || n_->kind == Conn::False; }

std::size_t Formula::node_count() const { return n_->count; }
std::size_t Formula::hash() const { return n_->hash; }

bool operator==(const Formula& a, const Formula& b) {
    if (a.n_ == b.n_) return true;
    const auto* x = a.n_.get();
    const auto* y = b.n_.get();
    if (x->kind != y->kind || x->hash != y->hash) return false;
    switch (x->kind) {
        case Conn::True:
        case Conn::False: return true;
        case Conn::Var: return x->v == y->v;
        case Conn::Not: return x->a == y->a;
        default: return x->a == y->a && x->b == y->b;
    }
}

std::vector<VarId> vars(const Formula& f) {
    std::set<VarId> seen;
    std::vector<Formula> todo{f};
    while (!todo.empty()) {
        Formula g = todo.back();
        todo.pop_back();
        switch (g.kind()) {
            case Conn::True:
            case Conn::False: break;
            case Conn::Var: seen.insert(g.var()); break;
            case Conn::Not: todo.push_back(g.lhs()); break;
            default:
                todo.push_back(g.lhs());
                todo.push_back(g.rhs());
        }
    }
    return std::vector<VarId>(seen.begin(), seen.end());
}

bool eval_formula(const Formula& f, const Valuation& v) {
    switch (f.kind()) {
        case Conn::True: return true;
        case Conn::False: return false;
        case Conn::Var: return v.at(f.var());
        case Conn::Not: return !eval_formula(f.lhs(), v);
        case Conn::And: return eval_formula(f.lhs(), v) && eval_formula(f.rhs(), v);
        case Conn::Or: return eval_formula(f.lhs(), v) || eval_formula(f.rhs(), v);
        case Conn::Imp: return !eval_formula(f.lhs(), v) || eval_formula(f.rhs(), v);
        case Conn::Iff: return eval_formula(f.lhs(), v) == eval_formula(f.rhs(), v);
    }
    throw std::logic_error("unreachable");
}

Formula substitute(const Formula& f, VarId p, const Formula& g) {
    switch (f.kind()) {
        case Conn::True:
        case Conn::False: return f;
        case Conn::Var: return f.var() == p ? g : f;
        case Conn::Not: {
            Formula a = substitute(f.lhs(), p, g);
            if (a == f.lhs()) return f;
            return Formula::negation(std::move(a));
        }
        default: {
            Formula a = substitute(f.lhs(), p, g);
            Formula b = substitute(f.rhs(), p, g);
            if (a == f.lhs() && b == f.rhs()) return f;
            switch (f.kind()) {
                case Conn::And: return Formula::conjunction(std::move(a), std::move(b));
                case Conn::Or: return Formula::disjunction(std::move(a), std::move(b));
                case Conn::Imp: return Formula::implication(std::move(a), std::move(b));
                default: return Formula::biconditional(std::move(a), std::move(b));
            }
        }
    }
}

namespace {

bool is_true(const Formula& f) { return f.kind() == Conn::True; }
bool is_false(const Formula& f) { return f.kind() == Conn::False; }

// Negation of an already reduced operand.
Formula reduced_not(Formula a) {
    if (is_true(a)) return Formula::falsum();
    if (is_false(a)) return Formula::verum();
    return Formula::negation(std::move(a));
}

} // namespace

Formula simplify_sigma(const Formula& f) {
    switch (f.kind()) {
        case Conn::True:
        case Conn::False:
        case Conn::Var: return f;
        case Conn::Not: {
            Formula a = simplify_sigma(f.lhs());
            if (a.is_constant()) return reduced_not(a);
            if (a == f.lhs()) return f;
            return Formula::negation(std::move(a));
        }
        default: break;
    }
    Formula a = simplify_sigma(f.lhs());
    Formula b = simplify_sigma(f.rhs());
    switch (f.kind()) {
        case Conn::And:
            if (is_false(a) || is_false(b)) return Formula::falsum();
            if (is_true(a)) return b;
            if (is_true(b)) return a;
            break;
        case Conn::Or:
            if (is_true(a) || is_true(b)) return Formula::verum();
            if (is_false(a)) return b;
            if (is_false(b)) return a;
            break;
        case Conn::Imp:
            if (is_false(a) || is_true(b)) return Formula::verum();
            if (is_true(a)) return b;
            if (is_false(b)) return reduced_not(std::move(a));
            break;
        case Conn::Iff:
            if (is_true(a)) return b;
            if (is_true(b)) return a;
            if (is_false(a)) return reduced_not(std::move(b));
            if (is_false(b)) return reduced_not(std::move(a));
            break;
        default: break;
    }
    if (a == f.lhs() && b == f.rhs()) return f;
    switch (f.kind()) {
        case Conn::And: return Formula::conjunction(std::move(a), std::move(b));
        case Conn::Or: return Formula::disjunction(std::move(a), std::move(b));
        case Conn::Imp: return Formula::implication(std::move(a), std::move(b));
        default: return Formula::biconditional(std::move(a), std::move(b));
    }
}

namespace {

enum class Tok { End, Ident, True, False, Not, And, Or, Imp, Iff, LParen, RParen };

struct FormulaLexer {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    Tok tok = Tok::End;
    std::string_view ident;
    std::size_t tok_line = 1, tok_col = 1;

    void next() {
        for (;;) {
            if (pos >= text.size()) {
                tok_line = line;
                tok_col = col;
                tok = Tok::End;
                return;
            }
            char c = text[pos];
            if (c == '\n') {
                ++line;
                col = 1;
                ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col;
                ++pos;
            } else if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
        tok_line = line;
        tok_col = col;
        char c = text[pos];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                advance(1);
            ident = text.substr(start, pos - start);
            if (ident == "T") tok = Tok::True;
            else if (ident == "F") tok = Tok::False;
            else tok = Tok::Ident;
            return;
        }
        switch (c) {
            case '~': advance(1); tok = Tok::Not; return;
            case '&': advance(1); tok = Tok::And; return;
            case '|': advance(1); tok = Tok::Or; return;
            case '(': advance(1); tok = Tok::LParen; return;
            case ')': advance(1); tok = Tok::RParen; return;
            case '-':
                if (pos + 1 < text.size() && text[pos + 1] == '>') {
                    advance(2);
                    tok = Tok::Imp;
                    return;
                }
                fail("expected '->'");
            case '<':
                if (pos + 2 < text.size() && text[pos + 1] == '-' && text[pos + 2] == '>') {
                    advance(3);
                    tok = Tok::Iff;
                    return;
                }
                fail("expected '<->'");
            default: fail(std::string("unexpected character '") + c + "'");
        }
    }

    void advance(std::size_t n) {
        pos += n;
        col += n;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, tok_line, tok_col); }
};

class FormulaParser {
public:
    FormulaParser(std::string_view text, VarTable& table, std::size_t line)
        : table_(table) {
        lx_.text = text;
        lx_.line = line;
        lx_.next();
    }

    Formula parse() {
        Formula f = parse_iff();
        if (lx_.tok != Tok::End) lx_.fail("unexpected trailing input");
        return f;
    }

private:
    FormulaLexer lx_;
    VarTable& table_;

    Formula parse_iff() {
        Formula a = parse_imp();
        if (lx_.tok == Tok::Iff) {
            lx_.next();
            return Formula::biconditional(std::move(a), parse_iff());
        }
        return a;
    }

    Formula parse_imp() {
        Formula a = parse_or();
        if (lx_.tok == Tok::Imp) {
            lx_.next();
            return Formula::implication(std::move(a), parse_imp());
        }
        return a;
    }

    Formula parse_or() {
        Formula a = parse_and();
        while (lx_.tok == Tok::Or) {
            lx_.next();
            a = Formula::disjunction(std::move(a), parse_and());
        }
        return a;
    }

    Formula parse_and() {
        Formula a = parse_unary();
        while (lx_.tok == Tok::And) {
            lx_.next();
            a = Formula::conjunction(std::move(a), parse_unary());
        }
        return a;
    }

    Formula parse_unary() {
        if (lx_.tok == Tok::Not) {
            lx_.next();
            return Formula::negation(parse_unary());
        }
        return parse_atom();
    }

    Formula parse_atom() {
        switch (lx_.tok) {
            case Tok::True: lx_.next(); return Formula::verum();
            case Tok::False: lx_.next(); return Formula::falsum();
            case Tok::Ident: {
                Formula f = Formula::var(table_.intern(lx_.ident));
                lx_.next();
                return f;
            }
            case Tok::LParen: {
                lx_.next();
                Formula f = parse_iff();
                if (lx_.tok != Tok::RParen) lx_.fail("expected ')'");
                lx_.next();
                return f;
            }
            case Tok::End: lx_.fail("unexpected end of input");
            default: lx_.fail("expected a formula");
        }
    }
};

int precedence(Conn k) {
    switch (k) {
        case Conn::Iff: return 1;
        case Conn::Imp: return 2;
        case Conn::Or: return 3;
        case Conn::And: return 4;
        case Conn::Not: return 5;
        default: return 6;
    }
}

void print_rec(const Formula& f, const VarTable& table, int min_prec, std::string& out) {
    int prec = precedence(f.kind());
    bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (f.kind()) {
        case Conn::True: out += 'T'; break;
        case Conn::False: out += 'F'; break;
        case Conn::Var: out += table.name(f.var()); break;
        case Conn::Not:
            out += '~';
            print_rec(f.lhs(), table, prec, out);
            break;
        case Conn::And:
        case Conn::Or:
            print_rec(f.lhs(), table, prec, out);
            out += f.kind() == Conn::And ? " & " : " | ";
            print_rec(f.rhs(), table, prec + 1, out);
            break;
        case Conn::Imp:
        case Conn::Iff:
            print_rec(f.lhs(), table, prec + 1, out);
            out += f.kind() == Conn::Imp ? " -> " : " <-> ";
            print_rec(f.rhs(), table, prec, out);
            break;
    }
    if (parens) out += ')';
}

} // namespace

Formula parse_formula(std::string_view text, VarTable& table, std::size_t line) {
    return FormulaParser(text, table, line).parse();
}

std::string print_formula(const Formula& f, const VarTable& table) {
    std::string out;
    print_rec(f, table, 0, out);
    return out;
}

} // namespace boolforget
