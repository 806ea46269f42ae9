// Shared helpers for the test suites: seeded random generators for
// polynomials, formulas and CNF instances, plus temp-file and CLI helpers.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "boolforget/formula.hpp"
#include "boolforget/poly.hpp"
#include "boolforget/vartable.hpp"

namespace testutil {

namespace bf = boolforget;

inline std::vector<bf::VarId> make_vars(bf::VarTable& table, std::size_t n,
                                        const std::string& prefix = "x") {
    std::vector<bf::VarId> vars;
    for (std::size_t i = 0; i < n; ++i)
        vars.push_back(table.intern(prefix + std::to_string(i + 1)));
    return vars;
}

inline bf::Poly random_poly(std::mt19937& rng, const std::vector<bf::VarId>& vars,
                            std::size_t max_terms) {
    std::uniform_int_distribution<std::size_t> term_count(0, max_terms);
    std::vector<bf::Monomial> terms;
    std::size_t n = term_count(rng);
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<bf::VarId> picked;
        for (bf::VarId v : vars)
            if (rng() % 2 == 0) picked.push_back(v);
        terms.push_back(bf::Monomial::from_vars(picked));
    }
    return bf::Poly::from_terms(terms);
}

inline bf::Formula random_formula(std::mt19937& rng, const std::vector<bf::VarId>& vars,
                                  int depth) {
    std::uniform_int_distribution<std::size_t> pick_var(0, vars.size() - 1);
    if (depth <= 0) {
        switch (rng() % 8) {
        case 0: return bf::Formula::verum();
        case 1: return bf::Formula::falsum();
        default: return bf::Formula::var(vars[pick_var(rng)]);
        }
    }
    switch (rng() % 6) {
    case 0: return bf::Formula::negation(random_formula(rng, vars, depth - 1));
    case 1:
        return bf::Formula::conjunction(random_formula(rng, vars, depth - 1),
                                        random_formula(rng, vars, depth - 1));
    case 2:
        return bf::Formula::disjunction(random_formula(rng, vars, depth - 1),
                                        random_formula(rng, vars, depth - 1));
    case 3:
        return bf::Formula::implication(random_formula(rng, vars, depth - 1),
                                        random_formula(rng, vars, depth - 1));
    case 4:
        return bf::Formula::biconditional(random_formula(rng, vars, depth - 1),
                                          random_formula(rng, vars, depth - 1));
    default: return random_formula(rng, vars, 0);
    }
}

// Random 3-CNF as formulas: m disjunctions of three literals over n vars.
inline std::vector<bf::Formula> random_cnf(std::mt19937& rng,
                                           const std::vector<bf::VarId>& vars,
                                           std::size_t clauses) {
    std::uniform_int_distribution<std::size_t> pick_var(0, vars.size() - 1);
    std::vector<bf::Formula> members;
    for (std::size_t c = 0; c < clauses; ++c) {
        bf::Formula clause = bf::Formula::falsum();
        for (int k = 0; k < 3; ++k) {
            bf::Formula lit = bf::Formula::var(vars[pick_var(rng)]);
            if (rng() % 2 == 0) lit = bf::Formula::negation(lit);
            clause = k == 0 ? lit : bf::Formula::disjunction(clause, lit);
        }
        members.push_back(clause);
    }
    return members;
}

class TempFile {
public:
    explicit TempFile(const std::string& suffix) {
        static int counter = 0;
        std::ostringstream name;
        name << "bf_test_" << getpid() << "_" << counter++ << suffix;
        path_ = std::string("/tmp/") + name.str();
    }
    ~TempFile() { std::remove(path_.c_str()); }

    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    const std::string& path() const { return path_; }

    void write(const std::string& content) const {
        std::ofstream out(path_, std::ios::binary);
        out << content;
    }

    std::string read() const {
        std::ifstream in(path_, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

private:
    std::string path_;
};

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

// Runs the CLI binary with the given argument string; captures combined output.
// env_prefix is prepended verbatim, e.g. "VAR=1 ".
inline CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    CliResult result;
    std::string cmd = env_prefix + std::string(BOOLFORGET_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

inline std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

} // namespace testutil
