// Command-line front end: satisfiability, retraction, entailment, sensitivity
// and dangerous-literal queries over knowledge bases in .cnf/.fml/.pol form,
// plus a benchmark mode comparing the two forgetting operators.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "boolforget/errors.hpp"
#include "boolforget/forget.hpp"
#include "boolforget/io.hpp"
#include "boolforget/oracle.hpp"
#include "boolforget/reason.hpp"
#include "boolforget/translate.hpp"

namespace bf = boolforget;

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitHolds = 0;
constexpr int kExitDoesNotHold = 3;
constexpr int kExitError = 1;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        std::size_t b = item.find_last_not_of(" \t");
        out.push_back(item.substr(a, b - a + 1));
    }
    return out;
}

bf::VarId known_var(const bf::VarTable& table, const std::vector<bf::VarId>& language,
                    const std::string& name) {
    auto id = table.lookup(name);
    if (id && std::binary_search(language.begin(), language.end(), *id)) return *id;
    throw std::invalid_argument("unknown variable '" + name + "'");
}

bf::Literal parse_literal(const std::string& spec, bf::VarTable& table) {
    std::string name = spec;
    bool positive = true;
    if (!name.empty() && name[0] == '~') {
        positive = false;
        name.erase(0, 1);
    }
    if (name.empty()) throw std::invalid_argument("empty literal in list");
    return {table.intern(name), positive};
}

std::string literal_text(bf::Literal l, const bf::VarTable& table) {
    return (l.positive ? "" : "~") + table.name(l.var);
}

std::string literal_list_text(std::vector<bf::Literal> lits, const bf::VarTable& table) {
    std::sort(lits.begin(), lits.end(), [&](bf::Literal a, bf::Literal b) {
        const std::string& na = table.name(a.var);
        const std::string& nb = table.name(b.var);
        if (na != nb) return na < nb;
        return a.positive && !b.positive;
    });
    std::string out;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (i > 0) out += ", ";
        out += literal_text(lits[i], table);
    }
    return out;
}

bf::ForgetOptions options_from_env() {
    bf::ForgetOptions opts;
    opts.size_cap_symbols = bf::size_cap_from_env(bf::kDefaultSizeCap);
    return opts;
}

int run_check_sat(const std::string& file) {
    bf::VarTable table;
    bf::PolyKB kb = bf::load_kb(file, table);
    auto result = bf::is_consistent(kb, options_from_env());
    std::cout << (result.consistent ? "SAT" : "UNSAT") << '\n';
    return result.consistent ? kExitSat : kExitUnsat;
}

struct RetractArgs {
    std::string file;
    std::string forget_csv;
    std::string keep_csv;
    std::string order_csv;
    std::string op = "independence";
    std::string emit = "poly";
    bool keep_tautologies = false;
};

int run_retract(const RetractArgs& args) {
    bf::ForgetOptions opts = options_from_env();
    opts.drop_tautologies = !args.keep_tautologies;

    bf::VarTable table;
    bf::PolyKB kb = bf::load_kb(args.file, table);
    const std::vector<bf::VarId>& language = kb.language();

    std::set<bf::VarId> forget_set;
    if (!args.keep_csv.empty()) {
        std::set<bf::VarId> keep;
        for (const std::string& name : split_list(args.keep_csv))
            keep.insert(known_var(table, language, name));
        for (bf::VarId v : language)
            if (keep.count(v) == 0) forget_set.insert(v);
    } else if (!args.forget_csv.empty() && args.forget_csv != "none") {
        for (const std::string& name : split_list(args.forget_csv))
            forget_set.insert(known_var(table, language, name));
    }

    std::vector<bf::VarId> order;
    if (!args.order_csv.empty()) {
        for (const std::string& name : split_list(args.order_csv))
            order.push_back(known_var(table, language, name));
    } else {
        for (bf::VarId v : bf::default_order(kb))
            if (forget_set.count(v) > 0) order.push_back(v);
    }

    // Members paired with their polynomial image, sorted for display.
    std::vector<std::pair<bf::Poly, std::optional<bf::Formula>>> rows;
    if (args.op == "independence") {
        bf::PolyKB result = bf::retract(kb, forget_set, order, opts);
        for (const bf::Poly& p : result.members()) rows.push_back({p, std::nullopt});
    } else {
        bf::FormulaKB fkb = bf::FormulaKB::of(bf::load_formulas(args.file, table));
        bf::FormulaKB result = bf::canonical_retract(fkb, forget_set, order, opts);
        for (const bf::Formula& f : result.members())
            rows.push_back({bf::project_pi(f), f});
    }
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        return bf::print_order_less(a.first, b.first, table);
    });

    for (const auto& [poly, formula] : rows) {
        if (args.emit == "poly") {
            std::cout << bf::print_poly(poly, table) << '\n';
        } else if (formula) {
            std::cout << bf::print_formula(*formula, table) << '\n';
        } else {
            std::cout << bf::print_formula(bf::to_formula_theta(poly), table) << '\n';
        }
    }
    return 0;
}

int run_entails(const std::string& file, const std::string& goal_text, bool localize) {
    bf::VarTable table;
    bf::PolyKB kb = bf::load_kb(file, table);
    bf::Formula goal = bf::parse_formula(goal_text, table);
    bf::ForgetOptions opts = options_from_env();
    bf::EntailmentVerdict verdict =
        localize ? bf::entails_localized(kb, goal, opts) : bf::entails(kb, goal, opts);
    std::cout << (verdict.holds ? "HOLDS" : "DOES NOT HOLD") << '\n';
    return verdict.holds ? kExitHolds : kExitDoesNotHold;
}

int run_sensitive(const std::string& file, const std::string& formula_text,
                  const std::string& var_name) {
    bf::VarTable table;
    bf::PolyKB kb = bf::load_kb(file, table);
    bf::Formula f = bf::parse_formula(formula_text, table);
    auto id = table.lookup(var_name);
    if (!id) throw std::invalid_argument("unknown variable '" + var_name + "'");
    bool sensitive = bf::is_sensitive(kb, f, *id, options_from_env());
    std::cout << (sensitive ? "SENSITIVE" : "NOT SENSITIVE") << '\n';
    return sensitive ? kExitHolds : kExitDoesNotHold;
}

int run_dangerous(const std::string& file, const std::string& facts_csv,
                  const std::string& state_csv, const std::string& warning_name) {
    bf::VarTable table;
    bf::PolyKB kb = bf::load_kb(file, table);
    std::vector<bf::Literal> facts;
    for (const std::string& spec : split_list(facts_csv))
        facts.push_back(parse_literal(spec, table));
    std::vector<bf::Literal> state;
    for (const std::string& spec : split_list(state_csv))
        state.push_back(parse_literal(spec, table));
    bf::VarId warning = table.intern(warning_name);

    bf::DangerousReport report =
        bf::dangerous_literals(kb, facts, state, warning, options_from_env());
    std::cout << "dangerous: " << literal_list_text(report.dangerous, table) << '\n';
    std::cout << "vacuous: " << literal_list_text(report.vacuous, table) << '\n';
    std::cout << "safe: " << literal_list_text(report.safe, table) << '\n';
    return report.dangerous.empty() ? kExitDoesNotHold : kExitHolds;
}

struct BenchArgs {
    std::string file;
    std::string op = "both";
    std::size_t steps = 0;
    unsigned seed = 0;
    std::string out;
    bool parallel = false;
};

struct BenchRow {
    std::size_t step;
    std::string variable;
    std::string op;
    std::size_t kb_members;
    std::size_t kb_size_symbols;
    double elapsed_ms;
    std::string status;
};

std::string format_ms(double ms) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << ms;
    return out.str();
}

std::vector<BenchRow> bench_independence(bf::PolyKB kb, const std::vector<bf::VarId>& seq,
                                         const bf::VarTable& table,
                                         const bf::ForgetOptions& opts, bool parallel) {
    std::vector<BenchRow> rows;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        BenchRow row{i + 1, table.name(seq[i]), "independence", 0, 0, 0.0,
                     parallel ? "ok-parallel" : "ok"};
        auto t0 = std::chrono::steady_clock::now();
        bool capped = false;
        try {
            kb = bf::forget_var(kb, seq[i], opts);
        } catch (const bf::ResourceCapError&) {
            capped = true;
        }
        auto t1 = std::chrono::steady_clock::now();
        row.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        row.kb_members = kb.size();
        row.kb_size_symbols = bf::symbol_size(kb);
        if (capped) {
            row.status = parallel ? "capped-parallel" : "capped";
            rows.push_back(std::move(row));
            break;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<BenchRow> bench_canonical(bf::FormulaKB kb, const std::vector<bf::VarId>& seq,
                                      const bf::VarTable& table,
                                      const bf::ForgetOptions& opts, bool parallel) {
    std::vector<BenchRow> rows;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        BenchRow row{i + 1, table.name(seq[i]), "canonical", 0, 0, 0.0,
                     parallel ? "ok-parallel" : "ok"};
        auto t0 = std::chrono::steady_clock::now();
        bool capped = false;
        try {
            kb = bf::canonical_forget_kb(kb, seq[i], opts);
        } catch (const bf::ResourceCapError&) {
            capped = true;
        }
        auto t1 = std::chrono::steady_clock::now();
        row.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        row.kb_members = kb.size();
        row.kb_size_symbols = bf::node_size(kb);
        if (capped) {
            row.status = parallel ? "capped-parallel" : "capped";
            rows.push_back(std::move(row));
            break;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int run_bench(const BenchArgs& args) {
    bf::ForgetOptions opts = options_from_env();
    bf::VarTable table;
    bf::PolyKB kb = bf::load_kb(args.file, table);

    if (args.steps > kb.language().size())
        throw std::invalid_argument("--steps exceeds the variable count");

    // Reproducible variable sequence: seeded shuffle, first --steps entries.
    std::vector<bf::VarId> seq = kb.language();
    std::mt19937 rng(args.seed);
    for (std::size_t i = seq.size(); i > 1; --i)
        std::swap(seq[i - 1], seq[rng() % i]);
    seq.resize(args.steps);

    bool want_indep = args.op == "independence" || args.op == "both";
    bool want_canon = args.op == "canonical" || args.op == "both";

    std::vector<BenchRow> indep_rows;
    std::vector<BenchRow> canon_rows;
    bf::FormulaKB fkb;
    if (want_canon) fkb = bf::FormulaKB::of(bf::load_formulas(args.file, table));

    if (args.parallel && want_indep && want_canon) {
        std::thread ti([&] { indep_rows = bench_independence(kb, seq, table, opts, true); });
        std::thread tc([&] { canon_rows = bench_canonical(fkb, seq, table, opts, true); });
        ti.join();
        tc.join();
    } else {
        if (want_indep)
            indep_rows = bench_independence(kb, seq, table, opts, args.parallel);
        if (want_canon)
            canon_rows = bench_canonical(fkb, seq, table, opts, args.parallel);
    }

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!args.out.empty()) {
        file_out.open(args.out, std::ios::binary);
        if (!file_out) throw bf::IoError("cannot write '" + args.out + "'");
        out = &file_out;
    }
    bf::write_csv_row(*out, {"step", "variable", "operator", "kb_members",
                             "kb_size_symbols", "elapsed_ms", "status"});
    auto emit = [&](const std::vector<BenchRow>& rows) {
        for (const BenchRow& r : rows) {
            bf::write_csv_row(*out, {std::to_string(r.step), r.variable, r.op,
                                     std::to_string(r.kb_members),
                                     std::to_string(r.kb_size_symbols),
                                     format_ms(r.elapsed_ms), r.status});
        }
    };
    emit(indep_rows);
    emit(canon_rows);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reasoning over propositional knowledge bases via their GF(2) translation"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check-sat", "decide satisfiability by saturation");
    std::string check_file;
    check->add_option("file", check_file, "knowledge base (.cnf/.fml/.pol)")->required();

    auto* retract_cmd = app.add_subcommand("retract", "forget variables from a knowledge base");
    RetractArgs retract_args;
    retract_cmd->add_option("file", retract_args.file, "knowledge base")->required();
    auto* fopt = retract_cmd->add_option("--forget", retract_args.forget_csv,
                                         "comma list of variables to forget ('none' allowed)");
    auto* kopt = retract_cmd->add_option("--keep", retract_args.keep_csv,
                                         "comma list of variables to keep");
    fopt->excludes(kopt);
    kopt->excludes(fopt);
    retract_cmd->add_option("--order", retract_args.order_csv,
                            "elimination order (permutation of the forget set)");
    retract_cmd->add_option("--op", retract_args.op, "forgetting operator")
        ->check(CLI::IsMember({"independence", "canonical"}));
    retract_cmd->add_option("--emit", retract_args.emit, "output syntax")
        ->check(CLI::IsMember({"poly", "formula"}));
    retract_cmd->add_flag("--keep-tautologies", retract_args.keep_tautologies,
                          "keep constant-1 members instead of dropping them");

    auto* entails_cmd = app.add_subcommand("entails", "does the knowledge base entail a goal");
    std::string entails_file, entails_goal;
    bool entails_localize = false;
    entails_cmd->add_option("file", entails_file, "knowledge base")->required();
    entails_cmd->add_option("--goal", entails_goal, "goal formula")->required();
    entails_cmd->add_flag("--localize", entails_localize,
                          "retract onto the goal's variables first");

    auto* sens_cmd = app.add_subcommand("sensitive", "is a formula sensitive to a variable");
    std::string sens_file, sens_formula, sens_var;
    sens_cmd->add_option("file", sens_file, "knowledge base")->required();
    sens_cmd->add_option("--formula", sens_formula, "formula under test")->required();
    sens_cmd->add_option("--var", sens_var, "variable of interest")->required();

    auto* danger_cmd = app.add_subcommand("dangerous", "which facts would trip a warning");
    std::string danger_file, danger_facts, danger_state, danger_warning;
    danger_cmd->add_option("file", danger_file, "knowledge base")->required();
    danger_cmd->add_option("--facts", danger_facts, "candidate literals, e.g. p1,~p1,p2")
        ->required();
    danger_cmd->add_option("--state", danger_state, "literals already in force");
    danger_cmd->add_option("--warning", danger_warning, "warning variable")->required();

    auto* bench_cmd = app.add_subcommand("bench", "compare the forgetting operators");
    BenchArgs bench_args;
    bench_cmd->add_option("file", bench_args.file, "knowledge base")->required();
    bench_cmd->add_option("--op", bench_args.op, "operator(s) to run")
        ->check(CLI::IsMember({"independence", "canonical", "both"}));
    bench_cmd->add_option("--steps", bench_args.steps, "number of forgetting steps")
        ->required();
    bench_cmd->add_option("--seed", bench_args.seed, "seed for the variable sequence")
        ->required();
    bench_cmd->add_option("--out", bench_args.out, "CSV output path (default stdout)");
    bench_cmd->add_flag("--parallel", bench_args.parallel,
                        "run the two operators concurrently");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*check) return run_check_sat(check_file);
        if (*retract_cmd) return run_retract(retract_args);
        if (*entails_cmd) return run_entails(entails_file, entails_goal, entails_localize);
        if (*sens_cmd) return run_sensitive(sens_file, sens_formula, sens_var);
        if (*danger_cmd) return run_dangerous(danger_file, danger_facts, danger_state,
                                              danger_warning);
        if (*bench_cmd) return run_bench(bench_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
