#include "boolforget/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include "boolforget/errors.hpp"
#include "boolforget/translate.hpp"

namespace boolforget {

namespace {

struct DimacsScanner {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    void skip_space_and_comments() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '\n') {
                ++line;
                col = 1;
                ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col;
                ++pos;
            } else if (c == 'c' && col == 1) {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    bool done() {
        skip_space_and_comments();
        return pos >= text.size();
    }

    std::size_t tok_line = 1;
    std::size_t tok_col = 1;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, tok_line, tok_col); }

    std::string_view token() {
        skip_space_and_comments();
        tok_line = line;
        tok_col = col;
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++col;
        }
        return text.substr(start, pos - start);
    }
};

long parse_int(std::string_view tok, DimacsScanner& sc) {
    try {
        std::size_t used = 0;
        long v = std::stol(std::string(tok), &used);
        if (used != tok.size()) sc.fail("bad integer '" + std::string(tok) + "'");
        return v;
    } catch (const std::exception&) {
        sc.fail("bad integer '" + std::string(tok) + "'");
    }
}

} // namespace

DimacsProblem parse_dimacs(std::string_view text) {
    DimacsScanner sc{text};
    DimacsProblem problem;
    bool have_header = false;

    while (!sc.done()) {
        std::string_view tok = sc.token();
        if (tok == "p") {
            if (have_header) sc.fail("duplicate header");
            if (sc.token() != "cnf") sc.fail("expected 'cnf' after 'p'");
            long nv = parse_int(sc.token(), sc);
            if (nv < 0) sc.fail("negative counts in header");
            long nc = parse_int(sc.token(), sc);
            if (nc < 0) sc.fail("negative counts in header");
            problem.num_vars = static_cast<std::size_t>(nv);
            have_header = true;
            continue;
        }
        if (!have_header) sc.fail("missing 'p cnf' header");
        std::vector<int> clause;
        for (;;) {
            long lit = parse_int(tok, sc);
            if (lit == 0) break;
            long mag = lit < 0 ? -lit : lit;
            if (mag > static_cast<long>(problem.num_vars))
                sc.fail("literal " + std::to_string(lit) + " out of range");
            clause.push_back(static_cast<int>(lit));
            if (sc.done()) sc.fail("unterminated clause");
            tok = sc.token();
        }
        if (clause.empty()) sc.fail("empty clause");
        problem.clauses.push_back(std::move(clause));
    }
    if (!have_header) sc.fail("missing 'p cnf' header");
    return problem;
}

std::string format_dimacs(const DimacsProblem& problem) {
    std::ostringstream out;
    out << "p cnf " << problem.num_vars << ' ' << problem.clauses.size() << '\n';
    for (const auto& clause : problem.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

Poly clause_to_poly(const std::vector<Literal>& clause, const IoOptions& opts) {
    if (clause.size() > opts.clause_width_cap)
        throw PreconditionError("clause wider than the cap (" +
                                std::to_string(opts.clause_width_cap) + " literals)");
    Poly prod = Poly::one();
    for (Literal l : clause) {
        // 1 + pi(l) is x for a negative literal and 1+x for a positive one.
        Poly factor = l.positive ? add(Poly::one(), Poly::var(l.var)) : Poly::var(l.var);
        prod = mul(prod, factor);
    }
    return add(Poly::one(), prod);
}

PolyKB dimacs_to_kb(const DimacsProblem& problem, VarTable& table, const IoOptions& opts) {
    std::vector<VarId> language;
    language.reserve(problem.num_vars);
    for (std::size_t k = 1; k <= problem.num_vars; ++k)
        language.push_back(table.intern("x" + std::to_string(k)));

    std::vector<Poly> members;
    members.reserve(problem.clauses.size());
    for (const auto& clause : problem.clauses) {
        std::vector<Literal> lits;
        lits.reserve(clause.size());
        for (int lit : clause) {
            std::size_t mag = static_cast<std::size_t>(lit < 0 ? -lit : lit);
            lits.push_back({language[mag - 1], lit > 0});
        }
        members.push_back(clause_to_poly(lits, opts));
    }
    return PolyKB::of(std::move(members), std::move(language));
}

namespace {

enum class Ext { Cnf, Fml, Pol };

Ext extension_of(const std::string& path) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".cnf") return Ext::Cnf;
    if (ext == ".fml") return Ext::Fml;
    if (ext == ".pol") return Ext::Pol;
    throw IoError("unsupported extension for '" + path + "' (expected .cnf, .fml or .pol)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Non-empty payload lines with their 1-based numbers; '#' starts a comment.
std::vector<std::pair<std::size_t, std::string>> payload_lines(const std::string& text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t lineno = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
            return std::isspace(c);
        });
        if (!blank) out.push_back({lineno, line});
    }
    return out;
}

} // namespace

PolyKB load_kb(const std::string& path, VarTable& table, const IoOptions& opts) {
    Ext ext = extension_of(path);
    std::string text = read_file(path);
    switch (ext) {
        case Ext::Cnf: return dimacs_to_kb(parse_dimacs(text), table, opts);
        case Ext::Fml: {
            std::vector<Poly> members;
            for (const auto& [lineno, line] : payload_lines(text))
                members.push_back(project_pi(parse_formula(line, table, lineno)));
            return PolyKB::of(std::move(members));
        }
        case Ext::Pol: {
            std::vector<Poly> members;
            for (const auto& [lineno, line] : payload_lines(text))
                members.push_back(parse_poly(line, table, lineno));
            return PolyKB::of(std::move(members));
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<Formula> load_formulas(const std::string& path, VarTable& table,
                                   const IoOptions& opts) {
    Ext ext = extension_of(path);
    std::string text = read_file(path);
    std::vector<Formula> out;
    switch (ext) {
        case Ext::Cnf: {
            DimacsProblem problem = parse_dimacs(text);
            std::vector<VarId> language;
            language.reserve(problem.num_vars);
            for (std::size_t k = 1; k <= problem.num_vars; ++k)
                language.push_back(table.intern("x" + std::to_string(k)));
            for (const auto& clause : problem.clauses) {
                if (clause.size() > opts.clause_width_cap)
                    throw PreconditionError("clause wider than the cap (" +
                                            std::to_string(opts.clause_width_cap) +
                                            " literals)");
                Formula f = Formula::falsum();
                bool first = true;
                for (int lit : clause) {
                    std::size_t mag = static_cast<std::size_t>(lit < 0 ? -lit : lit);
                    Formula atom = Formula::var(language[mag - 1]);
                    if (lit < 0) atom = Formula::negation(std::move(atom));
                    f = first ? std::move(atom)
                              : Formula::disjunction(std::move(f), std::move(atom));
                    first = false;
                }
                out.push_back(std::move(f));
            }
            return out;
        }
        case Ext::Fml:
            for (const auto& [lineno, line] : payload_lines(text))
                out.push_back(parse_formula(line, table, lineno));
            return out;
        case Ext::Pol:
            for (const auto& [lineno, line] : payload_lines(text))
                out.push_back(to_formula_theta(parse_poly(line, table, lineno)));
            return out;
    }
    throw std::logic_error("unreachable");
}

void write_kb(const PolyKB& kb, const std::string& path, const VarTable& table,
              KbSyntax syntax) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    std::vector<Poly> members = kb.members();
    std::sort(members.begin(), members.end(),
              [&](const Poly& a, const Poly& b) { return print_order_less(a, b, table); });
    for (const Poly& p : members) {
        if (syntax == KbSyntax::Poly) {
            out << print_poly(p, table) << '\n';
        } else {
            out << print_formula(to_formula_theta(p), table) << '\n';
        }
    }
    if (!out) throw IoError("cannot write '" + path + "'");
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out << ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n") != std::string::npos) {
            out << '"';
            for (char c : f) {
                if (c == '"') out << '"';
                out << c;
            }
            out << '"';
        } else {
            out << f;
        }
    }
    out << '\n';
}

} // namespace boolforget
