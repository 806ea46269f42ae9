#include "doctest.h"

#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "boolforget/errors.hpp"
#include "boolforget/forget.hpp"
#include "boolforget/oracle.hpp"
#include "boolforget/translate.hpp"
#include "boolforget/vartable.hpp"

#include "testutil.hpp"

namespace bf = boolforget;
using testutil::make_vars;
using testutil::random_cnf;
using testutil::random_formula;

namespace {

struct Example1 {
    bf::VarTable table;
    bf::PolyKB kb;
    bf::VarId p, q, r, s, t;

    Example1() {
        std::vector<bf::Poly> members = {
            bf::parse_poly("p*q*r*s*t+p*q*s*t+1", table),
            bf::parse_poly("p*t+s+1", table),
            bf::parse_poly("q*s*t+q*t+1", table),
            bf::parse_poly("r*s*t+r*t+1", table),
        };
        kb = bf::PolyKB::of(members);
        p = *table.lookup("p");
        q = *table.lookup("q");
        r = *table.lookup("r");
        s = *table.lookup("s");
        t = *table.lookup("t");
    }
};

std::vector<bf::Poly> sorted_polys(std::vector<bf::Poly> polys) {
    std::sort(polys.begin(), polys.end(), bf::poly_less);
    return polys;
}

std::vector<bf::VarId> minus(std::vector<bf::VarId> language, bf::VarId v) {
    language.erase(std::remove(language.begin(), language.end(), v), language.end());
    return language;
}

} // namespace

TEST_SUITE("forget") {

TEST_CASE("poly knowledge base basics") {
    bf::VarTable table;
    bf::Poly a = bf::parse_poly("p*q+1", table);
    bf::Poly b = bf::parse_poly("q", table);
    bf::PolyKB kb = bf::PolyKB::of({b, a, a}); // dedupes and sorts
    CHECK(kb.size() == 2);
    CHECK(kb.contains(a));
    CHECK(kb.contains(b));
    CHECK_FALSE(kb.contains_zero());
    CHECK(kb.language() == std::vector<bf::VarId>{*table.lookup("p"), *table.lookup("q")});

    bf::VarId r = table.intern("r");
    bf::PolyKB wide = bf::PolyKB::of({a}, {*table.lookup("p"), *table.lookup("q"), r});
    CHECK(wide.language().size() == 3);
    CHECK_THROWS_AS(bf::PolyKB::of({a}, {r}), bf::PreconditionError);

    CHECK(bf::symbol_size(kb) == 5); // p*q+1 is 4, q is 1
}

TEST_CASE("default order is ascending by member occurrences") {
    Example1 ex;
    CHECK(bf::default_order(ex.kb) ==
          std::vector<bf::VarId>{ex.p, ex.q, ex.r, ex.s, ex.t});
}

TEST_CASE("running example trace with tautologies kept") {
    Example1 ex;
    bf::ForgetOptions keep;
    keep.drop_tautologies = false;

    bf::PolyKB after_t = bf::forget_var(ex.kb, ex.t, keep);
    CHECK(after_t.members() ==
          sorted_polys({bf::parse_poly("p*q*r*s+p*q*s+p*s+s+1", ex.table),
                        bf::parse_poly("p*s+s+1", ex.table), bf::Poly::one()}));
    CHECK(after_t.language() == minus(ex.kb.language(), ex.t));

    bf::PolyKB after_q = bf::forget_var(after_t, ex.q, keep);
    CHECK(after_q.members() ==
          sorted_polys({bf::parse_poly("p*s+s+1", ex.table), bf::Poly::one()}));

    bf::PolyKB after_p = bf::forget_var(after_q, ex.p, keep);
    CHECK(after_p.members() == std::vector<bf::Poly>{bf::Poly::one()});
}

TEST_CASE("dropping tautologies removes the constant") {
    Example1 ex;
    bf::PolyKB after_t = bf::forget_var(ex.kb, ex.t);
    CHECK(after_t.members() ==
          sorted_polys({bf::parse_poly("p*q*r*s+p*q*s+p*s+s+1", ex.table),
                        bf::parse_poly("p*s+s+1", ex.table)}));
    // a pre-existing tautology member is dropped too
    bf::PolyKB with_one = bf::PolyKB::of({bf::Poly::one(), bf::parse_poly("p*t", ex.table)});
    CHECK(bf::forget_var(with_one, *ex.table.lookup("t")).members() ==
          std::vector<bf::Poly>{bf::parse_poly("p", ex.table)});
}

TEST_CASE("forgetting an absent variable only shrinks the language") {
    Example1 ex;
    bf::VarTable& table = ex.table;
    bf::Poly a = bf::parse_poly("p*q+1", table);
    bf::PolyKB kb = bf::PolyKB::of({a}, {ex.p, ex.q, ex.r});
    bf::PolyKB after = bf::forget_var(kb, ex.r);
    CHECK(after.members() == std::vector<bf::Poly>{a});
    CHECK(after.language() == std::vector<bf::VarId>{ex.p, ex.q});
}

TEST_CASE("forgetting in a contradictory base stays contradictory") {
    bf::VarTable table;
    bf::PolyKB kb = bf::PolyKB::of({bf::Poly::zero(), bf::parse_poly("p", table)});
    bf::PolyKB after = bf::forget_var(kb, *table.lookup("p"));
    CHECK(after.contains_zero());
    CHECK(after.members() == std::vector<bf::Poly>{bf::Poly::zero()});
}

TEST_CASE("rule-base example forgetting p1") {
    bf::VarTable table;
    std::vector<std::string> rules = {"p1 -> p9",       "p1 -> p10", "~p2 -> p9",
                                      "~p2 -> p10",     "p1 & p7 -> p11",
                                      "p3 -> p7",       "p3 -> p10", "p4 -> p11",
                                      "p5 -> p8",       "p6 -> p9"};
    std::vector<bf::Poly> members;
    for (const std::string& r : rules)
        members.push_back(bf::project_pi(bf::parse_formula(r, table)));
    bf::PolyKB kb = bf::PolyKB::of(members);
    bf::VarId p1 = *table.lookup("p1");

    bf::ForgetOptions keep;
    keep.drop_tautologies = false;
    bf::PolyKB after = bf::forget_var(kb, p1, keep);
    // the three p1 members pairwise produce only the tautology
    std::vector<bf::Poly> expected;
    for (std::size_t i = 0; i < rules.size(); ++i)
        if (i != 0 && i != 1 && i != 4) expected.push_back(members[i]);
    expected.push_back(bf::Poly::one());
    CHECK(after.members() == sorted_polys(expected));
    CHECK(bf::forget_var(kb, p1).size() == 7);
}

TEST_CASE("refined retraction of the running example") {
    Example1 ex;
    bf::PolyKB onto_pqst = bf::retract(ex.kb, {ex.r}, {ex.r});
    // the refined enumeration pairs only the two members that mention r,
    // and both pair products reduce to the dropped tautology
    CHECK(onto_pqst.members() == sorted_polys({bf::parse_poly("p*t+s+1", ex.table),
                                               bf::parse_poly("q*s*t+q*t+1", ex.table)}));
    // it is a faithful retraction: the models project correctly
    bf::ModelSet projected =
        bf::project_models(bf::models_of(ex.kb), minus(ex.kb.language(), ex.r));
    CHECK(bf::models_of(onto_pqst) == projected);
    // and it is equivalent to the wider all-pairs enumeration, which also
    // includes the product of the two r-free members
    bf::PolyKB all_pairs = bf::PolyKB::of(
        {bf::parse_poly("p*q*s*t+p*q*t+p*t+q*s*t+q*t+s+1", ex.table),
         bf::parse_poly("p*t+s+1", ex.table), bf::parse_poly("q*s*t+q*t+1", ex.table)},
        onto_pqst.language());
    CHECK(bf::models_of(onto_pqst) == bf::models_of(all_pairs));
}

TEST_CASE("retraction onto r,s is the trivial base") {
    Example1 ex;
    std::set<bf::VarId> q = {ex.p, ex.q, ex.t};
    bf::PolyKB onto_rs = bf::retract(ex.kb, q, {ex.t, ex.q, ex.p});
    CHECK(onto_rs.empty());
    CHECK(onto_rs.language() == std::vector<bf::VarId>{ex.r, ex.s});

    bf::ForgetOptions keep;
    keep.drop_tautologies = false;
    CHECK(bf::retract(ex.kb, q, {ex.t, ex.q, ex.p}, keep).members() ==
          std::vector<bf::Poly>{bf::Poly::one()});
}

TEST_CASE("retracting nothing returns the base unchanged") {
    Example1 ex;
    CHECK(bf::retract(ex.kb, {}, {}) == ex.kb);
}

TEST_CASE("retraction validates its order") {
    Example1 ex;
    CHECK_THROWS_AS(bf::retract(ex.kb, {ex.p, ex.q}, {ex.p}), bf::PreconditionError);
    CHECK_THROWS_AS(bf::retract(ex.kb, {ex.p}, {ex.p, ex.q}), bf::PreconditionError);
    CHECK_THROWS_AS(bf::retract(ex.kb, {ex.p, ex.q}, {ex.p, ex.p}), bf::PreconditionError);
}

TEST_CASE("lifting lemma on random pairs") {
    bf::VarTable table;
    auto vars = make_vars(table, 6, "p");
    std::mt19937 rng(501);
    for (int i = 0; i < 500; ++i) {
        bf::Formula f = random_formula(rng, vars, 3);
        bf::Formula g = random_formula(rng, vars, 3);
        bf::VarId v = vars[rng() % vars.size()];
        bf::Poly result = bf::independence_rule(bf::project_pi(f), bf::project_pi(g), v);

        std::vector<bf::VarId> rest = minus(vars, v);
        bf::ModelSet lhs = bf::models_of(bf::PolyKB::of({result}, rest), rest);
        bf::ModelSet conj = bf::models_of(std::vector<bf::Formula>{f, g}, vars);
        CHECK(lhs == bf::project_models(conj, rest));
    }
}

TEST_CASE("single-step forgetting preserves projected models") {
    bf::VarTable table;
    auto vars = make_vars(table, 6);
    std::mt19937 rng(502);
    for (int i = 0; i < 120; ++i) {
        std::vector<bf::Formula> cnf = random_cnf(rng, vars, 3 + rng() % 8);
        std::vector<bf::Poly> members;
        for (const bf::Formula& f : cnf) members.push_back(bf::project_pi(f));
        bf::PolyKB kb = bf::PolyKB::of(members, vars);
        bf::VarId v = vars[rng() % vars.size()];

        bf::PolyKB after = bf::forget_var(kb, v);
        std::vector<bf::VarId> rest = minus(vars, v);
        CHECK(bf::models_of(after) == bf::project_models(bf::models_of(kb), rest));
    }
}

TEST_CASE("retraction model sets do not depend on the elimination order") {
    bf::VarTable table;
    auto vars = make_vars(table, 6);
    std::mt19937 rng(503);
    for (int i = 0; i < 60; ++i) {
        std::vector<bf::Formula> cnf = random_cnf(rng, vars, 4 + rng() % 6);
        std::vector<bf::Poly> members;
        for (const bf::Formula& f : cnf) members.push_back(bf::project_pi(f));
        bf::PolyKB kb = bf::PolyKB::of(members, vars);

        std::set<bf::VarId> q = {vars[0], vars[2], vars[4]};
        std::vector<bf::VarId> order1 = {vars[0], vars[2], vars[4]};
        std::vector<bf::VarId> order2 = {vars[4], vars[0], vars[2]};
        bf::ModelSet m1 = bf::models_of(bf::retract(kb, q, order1));
        bf::ModelSet m2 = bf::models_of(bf::retract(kb, q, order2));
        CHECK(m1 == m2);
    }
}

TEST_CASE("saturation decides the refutation example") {
    bf::VarTable table;
    std::vector<bf::Poly> members = {
        bf::project_pi(bf::parse_formula("p -> q", table)),
        bf::project_pi(bf::parse_formula("q | r -> s", table)),
        bf::project_pi(bf::parse_formula("~(p -> s)", table)),
    };
    bf::PolyKB kb = bf::PolyKB::of(members);
    bf::SaturationTrace trace = bf::saturate(kb, bf::default_order(kb));
    CHECK(trace.outcome == bf::Outcome::Inconsistent);
    CHECK(trace.final_kb.contains_zero());
    CHECK(trace.steps.size() <= 4); // stops as soon as 0 appears
}

TEST_CASE("saturation of the running example is consistent") {
    Example1 ex;
    bf::SaturationTrace trace = bf::saturate(ex.kb, bf::default_order(ex.kb));
    CHECK(trace.outcome == bf::Outcome::Consistent);
    CHECK(trace.final_kb.empty());
    CHECK(trace.steps.size() == 5);
    for (const bf::SaturationStep& step : trace.steps)
        CHECK(step.elapsed_ms >= 0.0);
    // once the base empties out, later steps report the empty size
    CHECK(trace.steps.back().kb_members == 0);
    CHECK(trace.steps.back().kb_size_symbols == 0);
}

TEST_CASE("saturation trace records pair counts") {
    Example1 ex;
    bf::SaturationTrace trace = bf::saturate(ex.kb, {ex.t, ex.q, ex.p, ex.r, ex.s});
    // all four members mention t: 4 actives, 10 unordered pairs with repetition
    CHECK(trace.steps.front().variable == ex.t);
    CHECK(trace.steps.front().pairs_processed == 10);
}

TEST_CASE("saturation requires a covering order") {
    Example1 ex;
    CHECK_THROWS_AS(bf::saturate(ex.kb, {ex.p, ex.q}), bf::PreconditionError);
}

TEST_CASE("size cap aborts runaway forgetting") {
    bf::VarTable table;
    auto vars = make_vars(table, 12);
    std::mt19937 rng(504);
    std::vector<bf::Formula> cnf = random_cnf(rng, vars, 30);
    std::vector<bf::Poly> members;
    for (const bf::Formula& f : cnf) members.push_back(bf::project_pi(f));
    bf::PolyKB kb = bf::PolyKB::of(members, vars);

    bf::ForgetOptions tiny;
    tiny.size_cap_symbols = 5;
    CHECK_THROWS_AS(bf::retract(kb, {vars[0], vars[1], vars[2]},
                                {vars[0], vars[1], vars[2]}, tiny),
                    bf::ResourceCapError);
}

TEST_CASE("size cap can come from the environment") {
    setenv("BOOLFORGET_SIZE_CAP", "123", 1);
    CHECK(bf::size_cap_from_env() == 123);
    setenv("BOOLFORGET_SIZE_CAP", "garbage", 1);
    CHECK_THROWS_AS(bf::size_cap_from_env(), std::invalid_argument);
    unsetenv("BOOLFORGET_SIZE_CAP");
    CHECK(bf::size_cap_from_env() == bf::kDefaultSizeCap);
    CHECK(bf::size_cap_from_env(42) == 42);
}

TEST_CASE("canonical operator goldens") {
    bf::VarTable table;
    bf::VarId p = table.intern("p");
    bf::Formula t1 = bf::parse_formula("p -> q", table);
    bf::Formula t2 = bf::parse_formula("p & r -> ~q", table);
    CHECK(bf::canonical_forget(t1, t2, p) == bf::Formula::verum());

    CHECK(bf::canonical_forget(bf::parse_formula("p", table),
                               bf::parse_formula("~p", table), p) ==
          bf::Formula::falsum());

    bf::Formula qr = bf::parse_formula("q & r", table);
    CHECK(bf::canonical_forget(bf::parse_formula("q", table),
                               bf::parse_formula("r", table), p) ==
          bf::Formula::disjunction(qr, qr));
}

TEST_CASE("canonical operator agrees with the independence rule semantically") {
    bf::VarTable table;
    auto vars = make_vars(table, 5, "p");
    std::mt19937 rng(505);
    for (int i = 0; i < 300; ++i) {
        bf::Formula f = random_formula(rng, vars, 3);
        bf::Formula g = random_formula(rng, vars, 3);
        bf::VarId v = vars[rng() % vars.size()];
        bf::Formula canon = bf::canonical_forget(f, g, v);
        bf::Poly rule = bf::independence_rule(bf::project_pi(f), bf::project_pi(g), v);
        CHECK(bf::project_pi(canon) == rule);
    }
}

TEST_CASE("formula knowledge base dedupes structurally") {
    bf::VarTable table;
    bf::Formula a = bf::parse_formula("p -> q", table);
    bf::Formula b = bf::parse_formula("p -> q", table);
    bf::Formula c = bf::parse_formula("q -> p", table);
    bf::FormulaKB kb = bf::FormulaKB::of({a, b, c});
    CHECK(kb.size() == 2);
    CHECK(kb.members().front() == a); // keeps first-seen order
    CHECK(kb.language() == std::vector<bf::VarId>{*table.lookup("p"), *table.lookup("q")});
    CHECK_FALSE(kb.contains_falsum());
    CHECK(bf::node_size(kb) > 0);
}

TEST_CASE("canonical forgetting over a base") {
    bf::VarTable table;
    bf::FormulaKB kb = bf::FormulaKB::of({bf::parse_formula("p -> q", table),
                                          bf::parse_formula("p", table),
                                          bf::parse_formula("r", table)});
    bf::VarId p = *table.lookup("p");
    bf::FormulaKB after = bf::canonical_forget_kb(kb, p);

    std::vector<bf::Poly> polys;
    for (const bf::Formula& f : after.members()) polys.push_back(bf::project_pi(f));
    bf::PolyKB as_polys = bf::PolyKB::of(polys, minus(kb.language(), p));
    bf::ModelSet projected =
        bf::project_models(bf::models_of(bf::PolyKB::of(
                               {bf::project_pi(bf::parse_formula("p -> q", table)),
                                bf::project_pi(bf::parse_formula("p", table)),
                                bf::project_pi(bf::parse_formula("r", table))})),
                           minus(kb.language(), p));
    CHECK(bf::models_of(as_polys) == projected);
}

TEST_CASE("canonical saturation decides both examples") {
    bf::VarTable table;
    bf::FormulaKB unsat = bf::FormulaKB::of({bf::parse_formula("p -> q", table),
                                             bf::parse_formula("q | r -> s", table),
                                             bf::parse_formula("~(p -> s)", table)});
    CHECK(bf::canonical_saturate(unsat, {*table.lookup("r"), *table.lookup("p"),
                                         *table.lookup("q"), *table.lookup("s")}) ==
          bf::Outcome::Inconsistent);

    bf::VarTable t2;
    bf::FormulaKB sat = bf::FormulaKB::of({bf::parse_formula("p -> q", t2)});
    std::vector<bf::VarId> order = sat.language();
    CHECK(bf::canonical_saturate(sat, order) == bf::Outcome::Consistent);
}

TEST_CASE("canonical retraction validates its order") {
    bf::VarTable table;
    bf::FormulaKB kb = bf::FormulaKB::of({bf::parse_formula("p & q", table)});
    bf::VarId p = *table.lookup("p");
    bf::VarId q = *table.lookup("q");
    CHECK_THROWS_AS(bf::canonical_retract(kb, {p, q}, {p}), bf::PreconditionError);
    CHECK_THROWS_AS(bf::canonical_saturate(kb, {p}), bf::PreconditionError);
}

TEST_CASE("canonical node cap") {
    bf::VarTable table;
    auto vars = make_vars(table, 10);
    std::mt19937 rng(506);
    bf::FormulaKB kb = bf::FormulaKB::of(random_cnf(rng, vars, 25));
    bf::ForgetOptions tiny;
    tiny.size_cap_symbols = 10;
    CHECK_THROWS_AS(bf::canonical_forget_kb(kb, kb.language().front(), tiny),
                    bf::ResourceCapError);
}

}
