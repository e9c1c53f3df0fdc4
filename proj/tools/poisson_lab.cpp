// poisson-lab: exact Poisson-bracket workbench on rational function fields.
#include <CLI11.hpp>

#include <charconv>
#include <iostream>

#include "plab/expr.hpp"
#include "plab/gallery.hpp"
#include "plab/lie.hpp"
#include "plab/series.hpp"
#include "plab/structure_io.hpp"

using namespace plab;

namespace {

struct Options {
    bool machine = false;
};

std::int64_t parse_int_arg(const std::string& s, const char* what) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw Error(std::string("invalid ") + what + " '" + s + "'");
    return v;
}

std::vector<std::int64_t> parse_index_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(parse_int_arg(s.substr(start, comma - start), "index entry"));
        start = comma + 1;
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        std::string piece = s.substr(start, comma - start);
        if (!piece.empty()) out.push_back(piece);
        start = comma + 1;
    }
    return out;
}

// "x:-4..0,y:0..3" -> per-variable bounds in the order of `names`
SeriesWindow parse_window(const std::string& text, const std::vector<std::string>& names) {
    std::vector<std::int64_t> lo(names.size()), hi(names.size());
    std::vector<bool> seen(names.size(), false);
    for (const std::string& piece : split_csv(text)) {
        auto colon = piece.find(':');
        auto dots = piece.find("..");
        if (colon == std::string::npos || dots == std::string::npos || dots < colon)
            throw Error("window entry '" + piece + "' is not NAME:LO..HI");
        std::string name = piece.substr(0, colon);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw Error("window names unknown variable '" + name + "'");
        std::size_t k = static_cast<std::size_t>(it - names.begin());
        if (seen[k]) throw Error("window repeats variable '" + name + "'");
        seen[k] = true;
        lo[k] = parse_int_arg(piece.substr(colon + 1, dots - colon - 1), "window bound");
        hi[k] = parse_int_arg(piece.substr(dots + 2), "window bound");
    }
    for (std::size_t k = 0; k < names.size(); ++k)
        if (!seen[k]) throw Error("window is missing variable '" + names[k] + "'");
    return SeriesWindow(std::move(lo), std::move(hi));
}

// adjunction order given by names, as positions into the declaration order
std::vector<std::size_t> parse_order(const std::string& text,
                                     const std::vector<std::string>& names) {
    std::vector<std::string> parts = split_csv(text);
    if (parts.size() != names.size())
        throw Error("order must list all " + std::to_string(names.size()) + " variables");
    std::vector<std::size_t> order;
    std::vector<bool> seen(names.size(), false);
    for (const auto& p : parts) {
        auto it = std::find(names.begin(), names.end(), p);
        if (it == names.end()) throw Error("order names unknown variable '" + p + "'");
        std::size_t k = static_cast<std::size_t>(it - names.begin());
        if (seen[k]) throw Error("order repeats a variable");
        seen[k] = true;
        order.push_back(k);
    }
    return order;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

struct StructureArgs {
    std::string path;
    bool skip_jacobi = false;

    PoissonStructure load() const { return load_structure(path, !skip_jacobi); }

    void attach(CLI::App* cmd) {
        cmd->add_option("--structure", path, "structure definition file")->required();
        cmd->add_flag("--skip-jacobi", skip_jacobi, "skip Jacobi validation at load time");
    }
};

void print_closure(const Options& opt, const PoissonStructure& s,
                   const LieClosureReport& report) {
    const auto& names = s.names();
    if (opt.machine) {
        std::cout << "closed " << bool_str(report.closed) << "\n";
        std::cout << "dimension " << report.dimension << "\n";
        for (std::size_t k = 0; k < report.dimension; ++k)
            std::cout << "basis " << k << " " << format_expr(report.basis[k], names) << "\n";
        for (const auto& step : report.trace)
            std::cout << "trace " << step.left << " " << step.right << " " << step.produced
                      << "\n";
        if (report.closed) {
            std::cout << "abelian " << bool_str(report.abelian) << "\n";
            for (std::size_t i = 0; i < report.dimension; ++i)
                for (std::size_t j = i + 1; j < report.dimension; ++j)
                    for (std::size_t k = 0; k < report.dimension; ++k)
                        if (!report.c(i, j, k).is_zero())
                            std::cout << "constant " << i << " " << j << " " << k << " "
                                      << report.c(i, j, k) << "\n";
        }
        return;
    }
    if (report.closed)
        std::cout << "closed: yes (dimension " << report.dimension << ")\n";
    else
        std::cout << "closed: no (budget exhausted at dimension " << report.dimension << ")\n";
    for (std::size_t k = 0; k < report.dimension; ++k)
        std::cout << "  b" << k << " = " << format_expr(report.basis[k], names) << "\n";
    for (const auto& step : report.trace)
        std::cout << "  adjoined b" << step.produced << " = {b" << step.left << ", b"
                  << step.right << "}\n";
    if (!report.closed) return;
    std::cout << "abelian: " << (report.abelian ? "yes" : "no") << "\n";
    if (report.abelian) return;
    std::cout << "nonzero brackets:\n";
    for (std::size_t i = 0; i < report.dimension; ++i)
        for (std::size_t j = i + 1; j < report.dimension; ++j) {
            bool any = false;
            for (std::size_t k = 0; k < report.dimension; ++k)
                if (!report.c(i, j, k).is_zero()) any = true;
            if (!any) continue;
            std::cout << "  {b" << i << ", b" << j << "} =";
            bool first = true;
            for (std::size_t k = 0; k < report.dimension; ++k) {
                const Rational& c = report.c(i, j, k);
                if (c.is_zero()) continue;
                std::cout << (first ? " " : " + ") << c << "*b" << k;
                first = false;
            }
            std::cout << "\n";
        }
    AbelianVerdict verdict = abelian_verdict(s, report);
    if (verdict.verdict == LieVerdict::Contradiction)
        std::cout << "verdict: CONTRADICTION - " << verdict.note << "\n";
    else
        std::cout << "verdict: nonabelian (" << verdict.note << ")\n";
    if (verdict.witness) {
        std::cout << "  witness f = " << format_expr(verdict.witness->f, names) << "\n";
        std::cout << "  witness g = " << format_expr(verdict.witness->g, names) << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"poisson-lab: exact Poisson brackets, iterated Laurent expansions, and Lie "
                 "analysis over rational function fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--machine", opt.machine, "stable machine-readable output");

    auto* bracket_cmd = app.add_subcommand("bracket", "compute {E1, E2}");
    StructureArgs bracket_structure;
    bracket_structure.attach(bracket_cmd);
    std::string bracket_order;
    bracket_cmd->add_option("--order", bracket_order,
                            "variable order to use (permutation of the declared names)");
    std::vector<std::string> bracket_exprs;
    bracket_cmd->add_option("exprs", bracket_exprs, "two expressions")->expected(2);

    auto* jacobi_cmd = app.add_subcommand(
        "jacobi", "jacobiator of a coordinate triple, or a validation summary over all triples");
    StructureArgs jacobi_structure;
    jacobi_structure.attach(jacobi_cmd);
    std::vector<std::string> jacobi_triple;
    jacobi_cmd->add_option("triple", jacobi_triple, "variable names or 1-based indices")
        ->expected(0, 3);

    auto* ct_cmd = app.add_subcommand("constant-term", "constant term [1]{E1, E2}");
    StructureArgs ct_structure;
    ct_structure.attach(ct_cmd);
    std::vector<std::string> ct_exprs;
    ct_cmd->add_option("exprs", ct_exprs, "two expressions")->expected(2);

    auto* coeff_cmd = app.add_subcommand("coeff", "coefficient [x^I]E of the iterated expansion");
    StructureArgs coeff_structure;
    coeff_structure.attach(coeff_cmd);
    std::string coeff_index;
    coeff_cmd->add_option("--index", coeff_index, "comma-separated exponents, e.g. -1,0")
        ->required();
    std::string coeff_order;
    coeff_cmd->add_option("--order", coeff_order,
                          "variable adjunction order (default: declaration order)");
    std::string coeff_expr;
    coeff_cmd->add_option("expr", coeff_expr, "expression")->required();

    auto* expand_cmd = app.add_subcommand("expand", "truncated iterated Laurent expansion");
    std::string expand_vars, expand_order, expand_window;
    expand_cmd->add_option("--vars", expand_vars, "comma-separated variable names")->required();
    expand_cmd->add_option("--order", expand_order, "variable adjunction order");
    expand_cmd->add_option("--window", expand_window, "bounds, e.g. \"x:-4..0,y:0..3\"")
        ->required();
    std::string expand_expr;
    expand_cmd->add_option("expr", expand_expr, "expression")->required();

    auto* closure_cmd =
        app.add_subcommand("closure", "Lie closure of generators under the bracket");
    StructureArgs closure_structure;
    closure_structure.attach(closure_cmd);
    std::size_t max_dim = 16;
    closure_cmd->add_option("--max-dim", max_dim, "dimension budget (default 16)");
    std::vector<std::string> closure_exprs;
    closure_cmd->add_option("exprs", closure_exprs, "generator expressions");

    auto* clc_cmd = app.add_subcommand("check-log-canonical",
                                       "test whether candidate coordinates are log-canonical");
    StructureArgs clc_structure;
    clc_structure.attach(clc_cmd);
    std::vector<std::string> clc_exprs;
    clc_cmd->add_option("exprs", clc_exprs, "candidate coordinate expressions");

    auto* cp_cmd =
        app.add_subcommand("canonical-pair", "canonical coordinates for {x,y} = x^a y^b");
    std::int64_t cp_a = 0, cp_b = 0;
    cp_cmd->add_option("a", cp_a, "exponent of x")->required();
    cp_cmd->add_option("b", cp_b, "exponent of y")->required();

    auto* witness_cmd =
        app.add_subcommand("witness", "transform between constant-bracket witnesses");
    StructureArgs witness_structure;
    witness_structure.attach(witness_cmd);
    std::vector<std::string> witness_exprs;
    witness_cmd->add_option("exprs", witness_exprs, "two expressions")->expected(2);

    auto* gallery_cmd = app.add_subcommand("gallery", "worked examples with verified identities");
    std::string gallery_name;
    gallery_cmd->add_option("name", gallery_name, "entry name, e.g. sl2, sln:3, quadratic-xyz")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (bracket_cmd->parsed()) {
        PoissonStructure s = bracket_structure.load();
        if (!bracket_order.empty())
            s = permuted_structure(s, parse_order(bracket_order, s.names()));
        auto f = parse_expr(bracket_exprs[0], s.names());
        auto g = parse_expr(bracket_exprs[1], s.names());
        std::string result = format_expr(poisson_bracket(s, f, g), s.names());
        if (opt.machine)
            std::cout << "result " << result << "\n";
        else
            std::cout << "{" << bracket_exprs[0] << ", " << bracket_exprs[1] << "} = " << result
                      << "\n";
    } else if (jacobi_cmd->parsed()) {
        PoissonStructure s = load_structure(jacobi_structure.path, false);
        const auto& names = s.names();
        if (jacobi_triple.empty()) {
            ValidationReport report = structure_validate(s);
            if (opt.machine) {
                std::cout << "jacobi_ok " << bool_str(report.valid()) << "\n";
                for (const auto& f : report.failures)
                    std::cout << "fail " << f.i << " " << f.j << " " << f.k << " "
                              << format_expr(f.value, names) << "\n";
            } else if (report.valid()) {
                std::cout << "jacobi: PASS on all coordinate triples\n";
            } else {
                std::cout << "jacobi: FAIL on " << report.failures.size() << " triple(s)\n";
                for (const auto& f : report.failures)
                    std::cout << "  (" << names[f.i] << ", " << names[f.j] << ", " << names[f.k]
                              << "): " << format_expr(f.value, names) << "\n";
            }
        } else {
            if (jacobi_triple.size() != 3)
                throw Error("jacobi expects zero or three triple arguments");
            std::vector<std::size_t> idx;
            for (const auto& t : jacobi_triple) {
                if (!t.empty() && std::isdigit(static_cast<unsigned char>(t[0]))) {
                    std::int64_t v = parse_int_arg(t, "coordinate index");
                    if (v < 1 || static_cast<std::size_t>(v) > s.size())
                        throw Error("coordinate index out of range");
                    idx.push_back(static_cast<std::size_t>(v - 1));
                } else {
                    idx.push_back(s.index_of(t));
                }
            }
            auto jac =
                jacobiator(s, s.coordinate(idx[0]), s.coordinate(idx[1]), s.coordinate(idx[2]));
            std::string result = format_expr(jac, names);
            if (opt.machine)
                std::cout << "result " << result << "\n";
            else
                std::cout << "J(" << names[idx[0]] << ", " << names[idx[1]] << ", "
                          << names[idx[2]] << ") = " << result << "\n";
        }
    } else if (ct_cmd->parsed()) {
        PoissonStructure s = ct_structure.load();
        auto f = parse_expr(ct_exprs[0], s.names());
        auto g = parse_expr(ct_exprs[1], s.names());
        Rational c = constant_term(poisson_bracket(s, f, g));
        if (opt.machine)
            std::cout << "result " << c << "\n";
        else
            std::cout << "[1]{" << ct_exprs[0] << ", " << ct_exprs[1] << "} = " << c << "\n";
    } else if (coeff_cmd->parsed()) {
        PoissonStructure s = coeff_structure.load();
        auto f = parse_expr(coeff_expr, s.names());
        std::vector<std::int64_t> entries = parse_index_list(coeff_index);
        if (entries.size() != s.size())
            throw Error("index has " + std::to_string(entries.size()) + " entries, expected " +
                        std::to_string(s.size()));
        ExponentVector idx(std::move(entries));
        Rational c = coeff_order.empty() ? coefficient(f, idx)
                                         : coefficient(f, idx, parse_order(coeff_order, s.names()));
        if (opt.machine)
            std::cout << "result " << c << "\n";
        else
            std::cout << "[x^" << idx.str() << "] " << coeff_expr << " = " << c << "\n";
    } else if (expand_cmd->parsed()) {
        std::vector<std::string> names = split_csv(expand_vars);
        if (names.empty()) throw Error("--vars must declare at least one variable");
        auto f = parse_expr(expand_expr, names);
        SeriesWindow window = parse_window(expand_window, names);
        TruncatedSeries series = expand_order.empty()
                                     ? expand_iterated(f, window)
                                     : expand_iterated(f, window, parse_order(expand_order, names));
        if (opt.machine) {
            for (const auto& [e, c] : series.terms.terms()) {
                std::cout << "term " << c;
                for (std::size_t k = 0; k < e.size(); ++k) std::cout << " " << e[k];
                std::cout << "\n";
            }
            std::cout << "count " << series.terms.term_count() << "\n";
        } else if (series.terms.is_zero()) {
            std::cout << "0\n";
        } else {
            for (const auto& [e, c] : series.terms.terms())
                std::cout << format_term(e, c, names) << "\n";
        }
    } else if (closure_cmd->parsed()) {
        PoissonStructure s = closure_structure.load();
        if (closure_exprs.empty()) throw Error("closure needs at least one generator");
        std::vector<RationalFunction> gens;
        for (const auto& e : closure_exprs) gens.push_back(parse_expr(e, s.names()));
        print_closure(opt, s, lie_closure(s, gens, max_dim));
    } else if (clc_cmd->parsed()) {
        PoissonStructure s = clc_structure.load();
        if (clc_exprs.empty()) throw Error("check-log-canonical needs candidate coordinates");
        std::vector<RationalFunction> gs;
        for (const auto& e : clc_exprs) gs.push_back(parse_expr(e, s.names()));
        LogCanonicalCheck check = check_log_canonical(s, gs);
        if (opt.machine) {
            std::cout << "log_canonical " << bool_str(check.ok) << "\n";
            if (check.ok) {
                std::cout << "dimension " << gs.size() << "\n";
                for (std::size_t i = 0; i < gs.size(); ++i)
                    for (std::size_t j = i + 1; j < gs.size(); ++j)
                        std::cout << "omega " << i << " " << j << " " << check.omega.at(i, j)
                                  << "\n";
            } else {
                std::cout << "pair " << check.bad_i << " " << check.bad_j << "\n";
                std::cout << "ratio " << format_expr(check.ratio, s.names()) << "\n";
            }
        } else if (check.ok) {
            std::cout << "log-canonical: yes\n";
            for (std::size_t i = 0; i < gs.size(); ++i)
                for (std::size_t j = i + 1; j < gs.size(); ++j)
                    std::cout << "  omega[" << i + 1 << "," << j + 1
                              << "] = " << check.omega.at(i, j) << "\n";
        } else {
            std::cout << "log-canonical: no\n";
            std::cout << "  offending pair: (" << clc_exprs[check.bad_i] << ", "
                      << clc_exprs[check.bad_j] << ")\n";
            std::cout << "  ratio {g_i,g_j}/(g_i g_j) = " << format_expr(check.ratio, s.names())
                      << "\n";
        }
    } else if (cp_cmd->parsed()) {
        auto pair = canonical_pair(cp_a, cp_b);
        std::vector<std::string> names = {"x", "y"};
        if (opt.machine) {
            std::cout << "exists " << bool_str(pair.has_value()) << "\n";
            if (pair) {
                std::cout << "u " << format_expr(pair->u, names) << "\n";
                std::cout << "v " << format_expr(pair->v, names) << "\n";
                std::cout << "constant " << pair->constant << "\n";
            }
        } else if (pair) {
            std::cout << "u = " << format_expr(pair->u, names) << "\n";
            std::cout << "v = " << format_expr(pair->v, names) << "\n";
            std::cout << "{u, v} = " << pair->constant << "\n";
        } else {
            std::cout << "no canonical pair: (1,1) is the log-canonical case, where no pair of "
                         "rational functions has a nonzero constant bracket\n";
        }
    } else if (witness_cmd->parsed()) {
        PoissonStructure s = witness_structure.load();
        auto f = parse_expr(witness_exprs[0], s.names());
        auto g = parse_expr(witness_exprs[1], s.names());
        WitnessTransform w = witness_transform(s, f, g);
        if (opt.machine) {
            std::cout << "applicable " << bool_str(w.applicable) << "\n";
            if (w.applicable) {
                const char* tag = w.hypothesis == WitnessCase::BracketOne             ? "a"
                                  : w.hypothesis == WitnessCase::BracketEqualsElement ? "b"
                                                                                      : "c";
                std::cout << "case " << tag << "\n";
                std::cout << "first " << format_expr(*w.first, s.names()) << "\n";
                std::cout << "second " << format_expr(*w.second, s.names()) << "\n";
                std::cout << "bracket " << format_expr(*w.bracket, s.names()) << "\n";
            } else {
                std::cout << "reason " << w.detail << "\n";
            }
        } else if (w.applicable) {
            std::cout << w.detail << "\n";
            std::cout << "first = " << format_expr(*w.first, s.names()) << "\n";
            std::cout << "second = " << format_expr(*w.second, s.names()) << "\n";
            std::cout << "{first, second} = " << format_expr(*w.bracket, s.names()) << "\n";
        } else {
            std::cout << w.detail << "\n";
        }
    } else if (gallery_cmd->parsed()) {
        GalleryEntry entry = gallery(gallery_name);
        if (opt.machine) {
            std::cout << "name " << entry.name << "\n";
            std::cout << "checks " << entry.identities.size() << "\n";
            for (std::size_t k = 0; k < entry.identities.size(); ++k)
                std::cout << "check " << k << " " << bool_str(entry.identities[k].passed) << " "
                          << entry.identities[k].description << "\n";
        } else {
            std::cout << "gallery " << entry.name << " (" << entry.structure.size()
                      << " variables, " << entry.identities.size() << " checks)\n";
            for (const auto& check : entry.identities)
                std::cout << "  ok " << check.description << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
