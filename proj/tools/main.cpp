// riordan: exact generation and verification of exponential Riordan array
// families, Eulerian triangles, moment sequences, continued fractions and
// Hankel transforms.
//
// Data goes to stdout, diagnostics to stderr.  Exit status: 0 on success,
// 1 on verification failure, 2 on usage errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "riordan/eulerian.hpp"
#include "riordan/json_io.hpp"
#include "riordan/presets.hpp"
#include "riordan/verify.hpp"

using namespace riordan;

namespace {

struct Caps {
    int rows = 64;      // triangle rows, moment count, production size
    int hankel = 8;     // hankel order n
    int cf_depth = 16;  // continued-fraction depth

    static Caps from_env() {
        Caps caps;
        if (const char* s = std::getenv("RIORDAN_CAP")) {
            int v = std::atoi(s);
            if (v > 0) caps = Caps{v, v, v};
        }
        return caps;
    }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "symbolic" or a rational like 7, -3/2.
std::optional<Rat> parse_binding(const std::string& text, const char* flag) {
    if (text == "symbolic") return std::nullopt;
    try {
        return Rat(text);
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + " expects 'symbolic' or a rational like -3/2");
    }
}

struct FamilyArgs {
    std::string name = "eulerian";
    std::string x = "symbolic";
    std::string alpha = "symbolic";
    bool general = false;
};

Family resolve_family(const FamilyArgs& args) {
    auto kind = Family::kind_by_name(args.name);
    if (!kind) throw UsageError("unknown family: " + args.name);
    Family fam{*kind};
    switch (*kind) {
        case Family::Kind::eulerian:
        case Family::Kind::shifted:
            if (args.general) {
                fam.alpha = Frac::variable(Var::alpha);
                fam.beta = Frac::variable(Var::beta);
            } else {
                fam.alpha = Frac(1);
                auto x = parse_binding(args.x, "--x");
                fam.beta = x ? Frac(*x) : Frac::variable(Var::x);
            }
            break;
        case Family::Kind::degenerate_plain:
        case Family::Kind::degenerate_shifted: {
            auto a = parse_binding(args.alpha, "--alpha");
            fam.alpha = a ? Frac(*a) : Frac::variable(Var::alpha);
            break;
        }
        case Family::Kind::binomial:
        case Family::Kind::laguerre_like:
            break;
    }
    return fam;
}

// Substitute a rational x into an output value when --x was given.
Frac maybe_evaluate(const Frac& f, const std::optional<Rat>& x) {
    if (!x) return f;
    return f.substitute(Var::x, Poly(*x));
}

void check_format(const std::string& fmt) {
    if (fmt != "table" && fmt != "csv" && fmt != "json")
        throw UsageError("unknown format: " + fmt + " (expected table, csv or json)");
}

void print_matrix_table(const Matrix& m) {
    std::vector<std::vector<std::string>> cells(m.size());
    std::vector<std::size_t> width(m.size(), 0);
    for (int r = 0; r < m.size(); ++r)
        for (int c = 0; c < m.size(); ++c) {
            cells[r].push_back(m.at(r, c).str());
            width[c] = std::max(width[c], cells[r].back().size());
        }
    for (int r = 0; r < m.size(); ++r) {
        std::string line;
        for (int c = 0; c < m.size(); ++c) {
            if (c) line += "  ";
            line += std::string(width[c] - cells[r][c].size(), ' ') + cells[r][c];
        }
        std::cout << line << "\n";
    }
}

void print_matrix_csv(const Matrix& m) {
    for (int r = 0; r < m.size(); ++r) {
        std::string line;
        for (int c = 0; c < m.size(); ++c) {
            if (c) line += ",";
            line += m.at(r, c).str();
        }
        std::cout << line << "\n";
    }
}

int cmd_triangle(const std::string& kind_name, int rows, const std::string& format, const Caps& caps) {
    check_format(format);
    if (rows < 0 || rows > caps.rows)
        throw UsageError("--rows must be between 0 and " + std::to_string(caps.rows));
    auto kind = eulerian::triangle_kind_by_name(kind_name);
    auto table = eulerian::triangle_rows(kind, rows);
    // Closed form and recurrence must agree on everything we print.
    for (int n = 0; n <= rows; ++n)
        for (int k = 0; k <= n; ++k)
            if (!(eulerian::triangle_closed_form(kind, n, k) == table[n][k])) {
                std::cerr << "internal cross-check failed at (" << n << "," << k << ")\n";
                return 1;
            }
    if (format == "json") {
        std::cout << triangle_to_json(table).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,k,value\n";
        for (int n = 0; n <= rows; ++n)
            for (int k = 0; k <= n; ++k)
                std::cout << n << "," << k << "," << table[n][k].to_string() << "\n";
    } else {
        std::size_t width = 0;
        for (const auto& row : table)
            for (const auto& v : row) width = std::max(width, v.to_string().size());
        for (const auto& row : table) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) line += "  ";
                std::string s = row[i].to_string();
                line += std::string(width - s.size(), ' ') + s;
            }
            std::cout << line << "\n";
        }
    }
    return 0;
}

int cmd_prodmat(const FamilyArgs& fargs, int size, const std::string& format, const Caps& caps) {
    check_format(format);
    if (size < 1 || size > caps.rows)
        throw UsageError("--size must be between 1 and " + std::to_string(caps.rows));
    Family fam = resolve_family(fargs);
    ERArray arr = fam.array(size + 1);
    ProductionData pd = production_analytic(arr, size);
    if (format == "json")
        std::cout << to_json(pd.P).dump(2) << "\n";
    else if (format == "csv")
        print_matrix_csv(pd.P.dense());
    else
        print_matrix_table(pd.P.dense());
    return 0;
}

int cmd_moments(const FamilyArgs& fargs, int n, const std::string& format, const Caps& caps) {
    check_format(format);
    if (n < 0 || n > caps.rows)
        throw UsageError("--n must be between 0 and " + std::to_string(caps.rows));
    auto xval = parse_binding(fargs.x, "--x");
    // Symbolic first; the optional numeric column comes from substitution.
    FamilyArgs symbolic = fargs;
    symbolic.x = "symbolic";
    Family sym = resolve_family(symbolic);
    MomentSeq mu = moments_from_jacobi(sym.jacobi(n + 1), n + 1);
    if (format == "json") {
        json out{{"family", fargs.name}, {"n", n}};
        json symbolic_values = json::array();
        for (const auto& v : mu.values) symbolic_values.push_back(to_json(v));
        out["symbolic"] = symbolic_values;
        if (xval) {
            json evaluated = json::array();
            for (const auto& v : mu.values) evaluated.push_back(maybe_evaluate(v, xval).str());
            out["x"] = xval->to_string();
            out["evaluated"] = evaluated;
        }
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,value\n";
        for (int i = 0; i <= n; ++i)
            std::cout << i << "," << maybe_evaluate(mu.values[i], xval).str() << "\n";
    } else {
        for (int i = 0; i <= n; ++i)
            std::cout << "mu[" << i << "] = " << maybe_evaluate(mu.values[i], xval).str() << "\n";
    }
    return 0;
}

int cmd_hankel(const FamilyArgs& fargs, int n, const std::string& format, const Caps& caps) {
    check_format(format);
    if (n < 0 || n > caps.hankel)
        throw UsageError("--n must be between 0 and " + std::to_string(caps.hankel));
    auto xval = parse_binding(fargs.x, "--x");
    FamilyArgs symbolic = fargs;
    symbolic.x = "symbolic";
    Family sym = resolve_family(symbolic);
    JacobiParams j = sym.jacobi(n + 1);
    MomentSeq mu = moments_from_jacobi(sym.jacobi(2 * n + 1), 2 * n + 1);
    std::vector<Frac> det, prod;
    for (int k = 0; k <= n; ++k) {
        det.push_back(hankel_det(mu, k));
        prod.push_back(hankel_from_jacobi(j, k));
        if (!(det.back() == prod.back())) {
            std::cerr << "hankel routes disagree at n=" << k << "\n";
            return 1;
        }
    }
    if (format == "json") {
        json out{{"family", fargs.name}, {"n", n}};
        json dj = json::array(), pj = json::array();
        for (const auto& v : det) dj.push_back(to_json(v));
        for (const auto& v : prod) pj.push_back(to_json(v));
        out["determinant"] = dj;
        out["lambda_product"] = pj;
        if (xval) {
            json evaluated = json::array();
            for (const auto& v : det) evaluated.push_back(maybe_evaluate(v, xval).str());
            out["x"] = xval->to_string();
            out["evaluated"] = evaluated;
        }
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,value\n";
        for (int k = 0; k <= n; ++k)
            std::cout << k << "," << maybe_evaluate(det[k], xval).str() << "\n";
    } else {
        for (int k = 0; k <= n; ++k)
            std::cout << "h[" << k << "] = " << maybe_evaluate(det[k], xval).str() << "\n";
    }
    return 0;
}

int cmd_cf(const FamilyArgs& fargs, int depth, const std::string& format, const Caps& caps) {
    check_format(format);
    if (format == "csv") throw UsageError("cf supports table or json output");
    if (depth < 1 || depth > caps.cf_depth)
        throw UsageError("--depth must be between 1 and " + std::to_string(caps.cf_depth));
    auto xval = parse_binding(fargs.x, "--x");
    FamilyArgs symbolic = fargs;
    symbolic.x = "symbolic";
    Family sym = resolve_family(symbolic);
    JacobiParams j = sym.jacobi(depth);
    int terms = 2 * depth - 1;
    Series ogf = jfraction_ogf(j, depth, terms);
    auto str_at = [&](const Frac& v) { return maybe_evaluate(v, xval).str(); };
    if (format == "json") {
        json out{{"family", fargs.name}, {"depth", depth}};
        json aj = json::array(), lj = json::array(), oj = json::array();
        for (const auto& v : j.a) aj.push_back(to_json(v));
        for (const auto& v : j.lam) lj.push_back(to_json(v));
        for (int i = 0; i <= terms; ++i) oj.push_back(to_json(ogf.coeff(i)));
        out["a"] = aj;
        out["lambda"] = lj;
        out["ogf"] = oj;
        if (xval) {
            json aev = json::array(), lev = json::array(), oev = json::array();
            for (const auto& v : j.a) aev.push_back(str_at(v));
            for (const auto& v : j.lam) lev.push_back(str_at(v));
            for (int i = 0; i <= terms; ++i) oev.push_back(str_at(ogf.coeff(i)));
            out["x"] = xval->to_string();
            out["a_evaluated"] = aev;
            out["lambda_evaluated"] = lev;
            out["ogf_evaluated"] = oev;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        auto join = [&](const std::vector<Frac>& vs) {
            std::string s;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (i) s += ", ";
                s += str_at(vs[i]);
            }
            return s;
        };
        std::cout << "a: " << join(j.a) << "\n";
        std::cout << "lambda: " << join(j.lam) << "\n";
        std::string ogfs;
        for (int i = 0; i <= terms; ++i) {
            if (i) ogfs += ", ";
            ogfs += str_at(ogf.coeff(i));
        }
        std::cout << "ogf: " << ogfs << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& inject) {
    FaultInjection fault = FaultInjection::parse(inject);
    Report report = run_verify_suite(suite, fault);
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry{{"id", c.id}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.pass) entry["witness"] = c.witness;
        checks.push_back(entry);
    }
    json out{{"suite", report.suite},
             {"checks", checks},
             {"status", report.ok() ? "pass" : "fail"}};
    std::cout << out.dump(2) << "\n";
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact exponential Riordan array and Eulerian polynomial toolkit"};
    app.require_subcommand(1);
    Caps caps = Caps::from_env();

    // triangle
    std::string tri_kind;
    int tri_rows = 5;
    std::string tri_format = "table";
    auto* tri = app.add_subcommand("triangle", "print an Eulerian number triangle (rows 0..N)");
    tri->add_option("kind", tri_kind, "W, A or Atilde")->required();
    tri->add_option("--rows", tri_rows, "highest row index");
    tri->add_option("--format", tri_format, "table, csv or json");

    // prodmat
    FamilyArgs pm_args;
    int pm_size = 6;
    std::string pm_format = "table";
    auto* pm = app.add_subcommand("prodmat", "print a family's production matrix");
    pm->add_option("family", pm_args.name, "family preset")->required();
    pm->add_option("--size", pm_size, "matrix size");
    pm->add_option("--x", pm_args.x, "'symbolic' (default) or a rational value for x");
    pm->add_option("--alpha", pm_args.alpha, "'symbolic' (default) or a rational, degenerate families");
    pm->add_flag("--general", pm_args.general, "keep both parameters symbolic (alpha, beta)");
    pm->add_option("--format", pm_format, "table, csv or json");

    // moments
    FamilyArgs mo_args;
    int mo_n = 6;
    std::string mo_format = "table";
    auto* mo = app.add_subcommand("moments", "print the moment sequence mu_0..mu_n");
    mo->add_option("family", mo_args.name, "family preset")->required();
    mo->add_option("--n", mo_n, "highest moment index");
    mo->add_option("--x", mo_args.x, "'symbolic' (default) or a rational value for x");
    mo->add_option("--alpha", mo_args.alpha, "'symbolic' (default) or a rational, degenerate families");
    mo->add_option("--format", mo_format, "table, csv or json");

    // hankel
    FamilyArgs ha_args;
    int ha_n = 4;
    std::string ha_format = "table";
    auto* ha = app.add_subcommand("hankel", "print the Hankel transform h_0..h_n (both routes)");
    ha->add_option("family", ha_args.name, "family preset")->required();
    ha->add_option("--n", ha_n, "highest Hankel index");
    ha->add_option("--x", ha_args.x, "'symbolic' (default) or a rational value for x");
    ha->add_option("--alpha", ha_args.alpha, "'symbolic' (default) or a rational, degenerate families");
    ha->add_option("--format", ha_format, "table, csv or json");

    // cf
    FamilyArgs cf_args;
    int cf_depth = 4;
    std::string cf_format = "table";
    auto* cf = app.add_subcommand("cf", "print J-fraction coefficients and the OGF prefix");
    cf->add_option("family", cf_args.name, "family preset")->required();
    cf->add_option("--depth", cf_depth, "continued-fraction depth");
    cf->add_option("--x", cf_args.x, "'symbolic' (default) or a rational value for x");
    cf->add_option("--alpha", cf_args.alpha, "'symbolic' (default) or a rational, degenerate families");
    cf->add_option("--format", cf_format, "table or json");

    // verify
    std::string ve_suite = "all";
    std::string ve_inject;
    auto* ve = app.add_subcommand("verify", "run a verification suite, JSON report to stdout");
    ve->add_option("suite", ve_suite, "all, riordan, eulerian, moments, hankel, ode or binomial");
    ve->add_option("--inject", ve_inject,
                   "fault site for negative testing: lambda:<n>, triangle:<K>:<n>:<k>, f-cubic");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tri->parsed()) return cmd_triangle(tri_kind, tri_rows, tri_format, caps);
        if (pm->parsed()) return cmd_prodmat(pm_args, pm_size, pm_format, caps);
        if (mo->parsed()) return cmd_moments(mo_args, mo_n, mo_format, caps);
        if (ha->parsed()) return cmd_hankel(ha_args, ha_n, ha_format, caps);
        if (cf->parsed()) return cmd_cf(cf_args, cf_depth, cf_format, caps);
        if (ve->parsed()) return cmd_verify(ve_suite, ve_inject);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
