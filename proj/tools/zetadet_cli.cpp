#include "zetadet/combinatorics.hpp"
#include "zetadet/errors.hpp"
#include "zetadet/parallel.hpp"
#include "zetadet/sphere_polynomials.hpp"
#include "zetadet/spectral.hpp"
#include "zetadet/verification.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace zetadet;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct OutputRecord {
    std::string key;
    std::string value;
    std::optional<double> err_bound;
    std::optional<std::string> path;
};

struct Output {
    bool records = false;
    std::vector<OutputRecord> rows;

    void add(std::string key, std::string value, std::optional<double> err = std::nullopt,
             std::optional<std::string> path = std::nullopt) {
        rows.push_back({std::move(key), std::move(value), err, std::move(path)});
    }

    // Rendered once, atomically, at the end of the command.
    void flush() const {
        std::ostringstream out;
        for (const auto& r : rows) {
            if (records) {
                out << r.key << '\t' << r.value << '\t';
                if (r.err_bound)
                    out << *r.err_bound;
                else
                    out << '-';
                out << '\t' << (r.path ? *r.path : "-") << '\n';
            } else {
                out << r.key << " = " << r.value;
                if (r.err_bound || r.path) {
                    out << "  [";
                    if (r.path) out << "path=" << *r.path << (r.err_bound ? ", " : "");
                    if (r.err_bound) out << "err<=" << *r.err_bound;
                    out << "]";
                }
                out << '\n';
            }
        }
        std::cout << out.str() << std::flush;
    }
};

std::string coeff_list(const std::vector<Rational>& cs) {
    std::string out;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ",";
        out += fraction_string(cs[i]);
    }
    return out;
}

std::string poly_coeff_list(const RationalPolynomial& p) {
    std::vector<Rational> cs(p.coeffs().begin(), p.coeffs().end());
    if (cs.empty()) cs.push_back(Rational(0));
    return coeff_list(cs);
}

Arg parse_shift(const std::string& text) {
    if (std::optional<Rational> q = parse_rational(text)) return Arg::of(*q);
    return Arg::of(Real::from_string(text));
}

// exp of a log-space result with first-order error propagation.
std::pair<Real, double> exp_with_err(const NumValue& log_value) {
    Real v = exp(log_value.value);
    return {v, std::fabs(v.to_double()) * log_value.err + log_value.err};
}

int run_det(const std::string& kind, int n, int digits, const std::string& path_sel, Output& out) {
    if (n < 1) throw CLI::ValidationError("det", "n must be >= 1");
    if (digits < 1 || digits > 25) throw CLI::ValidationError("det", "--digits must be in [1, 25]");
    EMConfig cfg = default_em_config();
    auto eval = [&](DetPath p) {
        return kind == "laplacian" ? det_laplacian(n, p, cfg) : det_yamabe(n, p, cfg);
    };
    const std::string key = "det_" + kind + "(" + std::to_string(n) + ")";
    std::vector<DetResult> results;
    if (path_sel == "closed" || path_sel == "both") results.push_back(eval(DetPath::closed_form_r1));
    if (path_sel == "factorized" || path_sel == "both") results.push_back(eval(DetPath::factorization));
    for (const DetResult& r : results) {
        auto [v, err] = exp_with_err(r.log_det);
        out.add(key, v.str(digits), err, to_string(r.path));
    }
    if (results.size() == 2) {
        Real diff = fabs(exp(results[0].log_det.value) - exp(results[1].log_det.value));
        out.add(key + ".path_diff", diff.str(3));
    }
    return 0;
}

int run_hdet(int n, int r, const std::string& s_text, int digits, Output& out) {
    EMConfig cfg = default_em_config();
    SphereProblem problem{n, parse_shift(s_text), r};
    DetResult res = log_higher_det(problem, cfg);
    std::string key = "hdet(" + std::to_string(n) + "," + std::to_string(r) + "," + s_text + ")";
    out.add(key + ".log", res.log_det.value.str(digits), res.log_det.err, to_string(res.path));
    auto [v, err] = exp_with_err(res.log_det);
    out.add(key, v.str(digits), err, to_string(res.path));
    out.add(key + ".prefactor", res.prefactor_active ? "active" : "off");
    return 0;
}

int run_table(const std::string& family, int n, int r, Output& out) {
    if (family == "T") {
        if (n < 1) throw CLI::ValidationError("table", "T needs --n >= 1");
        if (!out.records) {
            std::string row;
            for (int d = 0; d < n; ++d) {
                if (d) row += " | ";
                row += t_poly(n, d).str();
            }
            out.add("T(n=" + std::to_string(n) + ")", row);
        } else {
            for (int d = 0; d < n; ++d)
                out.add("T(" + std::to_string(n) + "," + std::to_string(d) + ")",
                        poly_coeff_list(t_poly(n, d)));
        }
        return 0;
    }
    if (family == "f") {
        if (n < 1 || r < 1) throw CLI::ValidationError("table", "f needs --n >= 1 and --r >= 1");
        RationalPolynomial f = f_poly(n, r);
        out.add("f(" + std::to_string(n) + "," + std::to_string(r) + ")",
                out.records ? poly_coeff_list(f) : f.str());
        return 0;
    }
    if (family == "beta") {
        if (n < 1 || r < 1) throw CLI::ValidationError("table", "beta needs --n >= 1 and --r >= 1");
        for (int l = 1; l <= n + 2 * r - 2; ++l) {
            RationalPolynomial b = beta_poly(n, r, l);
            out.add("beta(" + std::to_string(n) + "," + std::to_string(r) + ",l=" + std::to_string(l) + ")",
                    out.records ? poly_coeff_list(b) : b.str());
        }
        return 0;
    }
    if (family == "alpha") {
        if (n < 1 || r < 1) throw CLI::ValidationError("table", "alpha needs --n >= 1 and --r >= 1");
        for (int k = r; k <= 2 * r + n - 2; ++k) {
            RationalPolynomial a = alpha_poly(n, r, k);
            out.add("alpha(" + std::to_string(n) + "," + std::to_string(r) + ",k=" + std::to_string(k) + ")",
                    out.records ? poly_coeff_list(a) : a.str());
        }
        return 0;
    }
    if (family == "d") {
        if (n < 2) throw CLI::ValidationError("table", "d needs --n >= 2");
        std::vector<Rational> d = d_det_coeffs(n);
        if (out.records)
            for (int k = 0; k < n; ++k)
                out.add("d(" + std::to_string(n) + "," + std::to_string(k) + ")",
                        fraction_string(d[static_cast<size_t>(k)]));
        else
            out.add("d(" + std::to_string(n) + ")", "[" + coeff_list(d) + "]");
        return 0;
    }
    if (family == "y") {
        if (n < 3) throw CLI::ValidationError("table", "y needs --n >= 3");
        std::vector<Rational> y = y_det_coeffs(n);
        if (out.records)
            for (int k = 0; k < n; ++k)
                out.add("y(" + std::to_string(n) + "," + std::to_string(k) + ")",
                        fraction_string(y[static_cast<size_t>(k)]));
        else
            out.add("y(" + std::to_string(n) + ")", "[" + coeff_list(y) + "]");
        return 0;
    }
    throw CLI::ValidationError("table", "unknown family '" + family + "'");
}

int run_verify(const std::string& suite, Output& out) {
    EMConfig cfg = default_em_config();
    std::vector<OracleReport> reports;
    if (suite == "determinants")
        reports = verify_determinants(cfg);
    else if (suite == "phi")
        reports = verify_phi(cfg);
    else if (suite == "combinatorics")
        reports = verify_combinatorics();
    else if (suite == "polynomials")
        reports = verify_polynomials();
    else if (suite == "gammas")
        reports = verify_gammas(cfg);
    else if (suite == "all")
        reports = verify_all(cfg);
    else
        throw CLI::ValidationError("verify", "unknown suite '" + suite + "'");

    size_t passed = 0;
    for (const OracleReport& r : reports) {
        out.add(r.quantity, r.main_value, r.abs_diff, r.passed ? "pass" : "FAIL");
        if (r.passed) ++passed;
    }
    out.add("summary", std::to_string(passed) + "/" + std::to_string(reports.size()) + " checks passed");
    return passed == reports.size() ? 0 : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    using namespace zetadet;

    if (const char* env = std::getenv("ZETADET_PRECISION")) {
        char* end = nullptr;
        long digits = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || digits < 6 || digits > 10000) {
            std::cerr << "zetadet: ZETADET_PRECISION must be a digit count in [6, 10000]\n";
            return kExitUsage;
        }
        set_default_precision_digits(static_cast<int>(digits));
    }

    CLI::App app{"Zeta-regularized determinants of sphere Laplacians via multiple gamma functions"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}));

    // det
    auto* det = app.add_subcommand("det", "Determinant of the (conformal) Laplacian on S^n");
    std::string det_kind;
    int det_n = 0;
    int det_digits = 12;
    std::string det_path = "closed";
    det->add_option("kind", det_kind, "laplacian or yamabe")
        ->required()
        ->check(CLI::IsMember({"laplacian", "yamabe"}));
    det->add_option("n", det_n, "sphere dimension")->required();
    det->add_option("--digits", det_digits, "significant digits to print (<= 25)");
    det->add_option("--path", det_path, "evaluation path")
        ->check(CLI::IsMember({"closed", "factorized", "both"}));

    // hdet
    auto* hdet = app.add_subcommand("hdet", "Higher-depth determinant Det_r(L_n(s))");
    int hdet_n = 0, hdet_r = 0;
    std::string hdet_s;
    int hdet_digits = 12;
    hdet->add_option("n", hdet_n, "sphere dimension")->required();
    hdet->add_option("r", hdet_r, "depth (r >= 1)")->required();
    hdet->add_option("s", hdet_s, "shift, decimal or exact p/q")->required();
    hdet->add_option("--digits", hdet_digits, "significant digits to print");

    // table
    auto* table = app.add_subcommand("table", "Exact polynomial family tables");
    std::string fam;
    int tab_n = 0, tab_r = 1;
    table->add_option("family", fam, "T, f, beta, alpha, d or y")->required();
    table->add_option("--n", tab_n, "dimension index")->required();
    table->add_option("--r", tab_r, "depth index (f, beta, alpha)");

    // zeta
    auto* zeta = app.add_subcommand("zeta", "Hurwitz zeta kernel");
    auto* zeta_h = zeta->add_subcommand("hurwitz", "zeta(w, a) or its d/dw");
    double zh_w = 0, zh_a = 1;
    bool zh_deriv = false;
    int zh_digits = 12;
    zeta_h->add_option("--w", zh_w, "order")->required();
    zeta_h->add_option("--a", zh_a, "argument a > 0")->required();
    zeta_h->add_flag("--deriv", zh_deriv, "evaluate d zeta/dw instead");
    zeta_h->add_option("--digits", zh_digits, "significant digits");
    auto* zeta_d = zeta->add_subcommand("digamma", "digamma psi(z)");
    double zd_z = 1;
    int zd_digits = 12;
    zeta_d->add_option("--z", zd_z, "argument z > 0")->required();
    zeta_d->add_option("--digits", zd_digits, "significant digits");
    auto* zeta_r = zeta->add_subcommand("riemann-deriv", "zeta'(-k)");
    int zr_k = 0;
    int zr_digits = 12;
    zeta_r->add_option("--k", zr_k, "non-negative integer k")->required();
    zeta_r->add_option("--digits", zr_digits, "significant digits");
    zeta->require_subcommand(1);

    // gamma
    auto* gamma = app.add_subcommand("gamma", "Multiple gamma functions (log space)");
    auto* gamma_b = gamma->add_subcommand("barnes", "log Gamma_n(z)");
    int gb_n = 1;
    std::string gb_z;
    int gb_digits = 12;
    gamma_b->add_option("--n", gb_n, "depth index n >= 0")->required();
    gamma_b->add_option("--z", gb_z, "argument, decimal or exact p/q")->required();
    gamma_b->add_option("--digits", gb_digits, "significant digits");
    auto* gamma_m = gamma->add_subcommand("milnor", "log G_r(z)");
    int gm_r = 1;
    std::string gm_z;
    int gm_digits = 12;
    gamma_m->add_option("--r", gm_r, "depth r >= 1")->required();
    gamma_m->add_option("--z", gm_z, "argument, decimal or exact p/q")->required();
    gamma_m->add_option("--digits", gm_digits, "significant digits");
    gamma->require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-validation suites");
    std::string suite = "all";
    verify->add_option("--suite", suite, "determinants, phi, combinatorics, polynomials, gammas, all")
        ->check(CLI::IsMember({"determinants", "phi", "combinatorics", "polynomials", "gammas", "all"}));

    // Let global flags (--format) appear after subcommand arguments.
    for (CLI::App* sub : {det, hdet, table, zeta, zeta_h, zeta_d, zeta_r, gamma, gamma_b, gamma_m, verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Output out;
    out.records = (format == "records");
    EMConfig cfg = default_em_config();

    try {
        int rc = 0;
        if (det->parsed()) rc = run_det(det_kind, det_n, det_digits, det_path, out);
        if (hdet->parsed()) rc = run_hdet(hdet_n, hdet_r, hdet_s, hdet_digits, out);
        if (table->parsed()) rc = run_table(fam, tab_n, tab_r, out);
        if (zeta_h->parsed()) {
            NumValue v = zh_deriv ? hurwitz_zeta_dw(Real(zh_w), Real(zh_a), cfg)
                                  : hurwitz_zeta(Real(zh_w), Real(zh_a), cfg);
            std::ostringstream key;
            key << "zeta" << (zh_deriv ? "_dw" : "") << "(" << zh_w << "," << zh_a << ")";
            out.add(key.str(), v.value.str(zh_digits), v.err);
        }
        if (zeta_d->parsed()) {
            NumValue v = digamma(Real(zd_z), cfg);
            std::ostringstream key;
            key << "digamma(" << zd_z << ")";
            out.add(key.str(), v.value.str(zd_digits), v.err);
        }
        if (zeta_r->parsed()) {
            if (zr_k < 0) throw domain_error("riemann-deriv: k must be >= 0");
            NumValue v = riemann_zeta_deriv(static_cast<unsigned>(zr_k), cfg);
            out.add("zeta_deriv(-" + std::to_string(zr_k) + ")", v.value.str(zr_digits), v.err);
        }
        if (gamma_b->parsed()) {
            NumValue v = log_barnes_gamma(gb_n, parse_shift(gb_z), cfg);
            out.add("log_barnes_gamma(" + std::to_string(gb_n) + "," + gb_z + ")", v.value.str(gb_digits),
                    v.err);
        }
        if (gamma_m->parsed()) {
            NumValue v = log_milnor_gamma(gm_r, parse_shift(gm_z), cfg);
            out.add("log_milnor_gamma(" + std::to_string(gm_r) + "," + gm_z + ")", v.value.str(gm_digits),
                    v.err);
        }
        if (verify->parsed()) rc = run_verify(suite, out);
        out.flush();
        return rc;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "zetadet: " << e.what() << "\n";
        return kExitUsage;
    } catch (const domain_error& e) {
        std::cerr << "zetadet: " << e.what() << "\n";
        return kExitDomain;
    } catch (const convergence_error& e) {
        std::cerr << "zetadet: " << e.what() << " (best=" << e.best_value() << ", err<=" << e.best_err()
                  << ")\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "zetadet: " << e.what() << "\n";
        return kExitUsage;
    }
}
