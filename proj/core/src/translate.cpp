#include "boolforget/translate.hpp"

#include <stdexcept>
#include <vector>

namespace boolforget {

RawPoly RawPoly::one() {
    RawPoly p;
    p.terms_.insert(RawMonomial{});
    return p;
}

RawPoly RawPoly::var(VarId v) {
    RawPoly p;
    p.terms_.insert(RawMonomial{{v, 1}});
    return p;
}

Poly RawPoly::reduced() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const RawMonomial& rm : terms_) {
        std::vector<VarId> vars;
        vars.reserve(rm.size());
        for (const auto& [v, e] : rm) vars.push_back(v);
        out.push_back(Monomial::from_vars(std::move(vars)));
    }
    return Poly::from_terms(std::move(out));
}

RawPoly add(const RawPoly& a, const RawPoly& b) {
    RawPoly out = a;
    for (const RawMonomial& m : b.terms_) {
        auto [it, inserted] = out.terms_.insert(m);
        if (!inserted) out.terms_.erase(it);
    }
    return out;
}

RawPoly mul(const RawPoly& a, const RawPoly& b) {
    RawPoly out;
    for (const RawMonomial& ma : a.terms_) {
        for (const RawMonomial& mb : b.terms_) {
            RawMonomial prod = ma;
            for (const auto& [v, e] : mb) prod[v] += e;
            auto [it, inserted] = out.terms_.insert(std::move(prod));
            if (!inserted) out.terms_.erase(it);
        }
    }
    return out;
}

RawPoly to_poly_P(const Formula& f) {
    switch (f.kind()) {
        case Conn::False: return RawPoly::zero();
        case Conn::True: return RawPoly::one();
        case Conn::Var: return RawPoly::var(f.var());
        case Conn::Not: return add(RawPoly::one(), to_poly_P(f.lhs()));
        case Conn::And: return mul(to_poly_P(f.lhs()), to_poly_P(f.rhs()));
        case Conn::Or: {
            RawPoly a = to_poly_P(f.lhs());
            RawPoly b = to_poly_P(f.rhs());
            return add(add(a, b), mul(a, b));
        }
        case Conn::Imp: {
            RawPoly a = to_poly_P(f.lhs());
            RawPoly b = to_poly_P(f.rhs());
            return add(RawPoly::one(), add(a, mul(a, b)));
        }
        case Conn::Iff: {
            RawPoly a = to_poly_P(f.lhs());
            RawPoly b = to_poly_P(f.rhs());
            return add(RawPoly::one(), add(a, b));
        }
    }
    throw std::logic_error("unreachable");
}

Poly project_pi(const Formula& f) {
    switch (f.kind()) {
        case Conn::False: return Poly::zero();
        case Conn::True: return Poly::one();
        case Conn::Var: return Poly::var(f.var());
        case Conn::Not: return add(Poly::one(), project_pi(f.lhs()));
        case Conn::And: return mul(project_pi(f.lhs()), project_pi(f.rhs()));
        case Conn::Or: {
            Poly a = project_pi(f.lhs());
            Poly b = project_pi(f.rhs());
            return add(add(a, b), mul(a, b));
        }
        case Conn::Imp: {
            Poly a = project_pi(f.lhs());
            Poly b = project_pi(f.rhs());
            return add(Poly::one(), add(a, mul(a, b)));
        }
        case Conn::Iff: {
            Poly a = project_pi(f.lhs());
            Poly b = project_pi(f.rhs());
            return add(Poly::one(), add(a, b));
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

Formula theta_term(const Monomial& m) {
    if (m.is_unit()) return Formula::verum();
    const auto& vs = m.vars();
    Formula out = Formula::var(vs.back());
    for (std::size_t i = vs.size() - 1; i-- > 0;)
        out = Formula::conjunction(Formula::var(vs[i]), std::move(out));
    return out;
}

} // namespace

Formula to_formula_theta(const Poly& a) {
    if (a.is_zero()) return Formula::falsum();
    const auto& terms = a.terms();
    Formula out = theta_term(terms.back());
    for (std::size_t i = terms.size() - 1; i-- > 0;) {
        out = Formula::negation(
            Formula::biconditional(theta_term(terms[i]), std::move(out)));
    }
    return out;
}

Formula formula_derivative(const Formula& f, VarId p) {
    return to_formula_theta(derivative(project_pi(f), p));
}

} // namespace boolforget
