// heckesum: batch front end, one subcommand per experiment.
//
// Exit codes: 0 success, 2 bad input or validation failure, 3 a property check
// failed, 1 anything else.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heckesum/arith.hpp"
#include "heckesum/expsum.hpp"
#include "heckesum/hypergeom.hpp"
#include "heckesum/kernels.hpp"
#include "heckesum/moto.hpp"
#include "heckesum/specfun.hpp"
#include "heckesum/spectral.hpp"

namespace hs = heckesum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitProperty = 3;

using Cell = std::variant<double, long long, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct OutputOptions {
    std::string path;
    std::string format = "csv";
};

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        std::ostringstream os;
        os.precision(17);
        os << *d;
        return os.str();
    }
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

void write_table(std::ostream& os, const Table& t, const std::string& format) {
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : t.rows) {
            nlohmann::json o = nlohmann::json::object();
            for (std::size_t j = 0; j < t.columns.size(); ++j)
                std::visit([&](const auto& v) { o[t.columns[j]] = v; }, r[j]);
            rows.push_back(std::move(o));
        }
        os << rows.dump(1) << '\n';
        return;
    }
    for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j];
    os << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << cell_text(r[j]);
        os << '\n';
    }
}

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("HECKESUM_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
    }
    return p;
}

void emit(const Table& t, const OutputOptions& out, const std::string& path_override = {}) {
    const std::string path = path_override.empty() ? out.path : path_override;
    if (path.empty() || path == "-") {
        write_table(std::cout, t, out.format);
        return;
    }
    const auto p = resolve_output(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p);
    if (!f) throw hs::DomainError("cannot write '" + p.string() + "'");
    write_table(f, t, out.format);
}

// "1.5", "0.5+1i", "-2i", "3-0.25i"
hs::Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.empty()) throw hs::DomainError("empty complex number");
    auto num = [&](const std::string& part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != part.size()) throw hs::DomainError("malformed complex number '" + text + "'");
        return v;
    };
    if (s.back() != 'i' && s.back() != 'j') return {num(s), 0.0};
    s.pop_back();
    // split at the last sign that is not part of an exponent
    std::size_t cut = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            cut = k;
            break;
        }
    if (cut == std::string::npos) return {0.0, num(s)};
    return {num(s.substr(0, cut)), num(s.substr(cut))};
}

struct PropertyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> x_grid(const std::vector<double>& xs, double lo, double hi, int count) {
    if (!xs.empty()) return xs;
    if (count < 1 || !(lo > 0.0) || !(hi >= lo)) throw hs::DomainError("x grid: need 0 < x-min <= x-max, x-count >= 1");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out[i] = count == 1 ? lo : lo * std::pow(hi / lo, double(i) / double(count - 1));
    return out;
}

// --- specfun ---------------------------------------------------------------

struct SpecfunArgs {
    std::string function;
    std::string s = "0.5";
    std::string a = "0.5", b = "0.5", c = "1", z = "0";
    int j = 0;
    std::string A = "0";
};

int run_specfun(const SpecfunArgs& a, const OutputOptions& out) {
    Table t{{"function", "argument", "re", "im", "abs", "error_estimate"}, {}};
    auto row = [&](const std::string& arg, hs::Complex v, double err) {
        t.rows.push_back({a.function, arg, v.real(), v.imag(), std::abs(v), err});
    };
    const hs::Complex s = parse_complex(a.s);
    if (a.function == "gamma") {
        row(a.s, std::exp(hs::log_gamma(s)), 0.0);
    } else if (a.function == "loggamma") {
        row(a.s, hs::log_gamma(s), 0.0);
    } else if (a.function == "digamma") {
        row(a.s, hs::digamma(s), 0.0);
    } else if (a.function == "trigamma") {
        row(a.s, hs::trigamma(s), 0.0);
    } else if (a.function == "zeta") {
        row(a.s, hs::riemann_zeta(s), 0.0);
    } else if (a.function == "f21") {
        const hs::F21Params p{parse_complex(a.a), parse_complex(a.b), parse_complex(a.c), parse_complex(a.z)};
        const auto r = hs::f21_series(p);
        row(a.a + ";" + a.b + ";" + a.c + ";" + a.z, r.value, r.error_estimate);
    } else if (a.function == "gauss_moment") {
        row(std::to_string(a.j) + ";" + a.A, hs::gauss_moment(a.j, parse_complex(a.A)), 0.0);
    } else {
        throw hs::DomainError("unknown function '" + a.function + "'");
    }
    emit(t, out);
    return kExitOk;
}

// --- psi -------------------------------------------------------------------

struct PsiArgs {
    std::string kind = "plus";
    double K = 0.0, G = 10.0;
    int nu = 0;
    double beta = 0.0;
    std::vector<double> x;
    double x_min = 0.0, x_max = 0.0;
    int x_count = 5;
    double tol = 0.0;
};

int run_psi(PsiArgs a, const OutputOptions& out) {
    const bool plus = a.kind == "plus";
    if (!plus && a.kind != "minus") throw hs::DomainError("--kind must be plus or minus");
    if (a.K <= 0.0) a.K = plus ? 100.0 : 20.0;
    if (a.tol <= 0.0) a.tol = plus ? 1e-6 : 1e-5;
    if (a.x.empty() && a.x_min <= 0.0) {
        a.x = plus ? std::vector<double>{0.002, 0.005, 0.01, 0.02, 0.04} : std::vector<double>{0.1, 0.2, 0.3, 0.5, 0.8};
    }
    const auto xs = x_grid(a.x, a.x_min, a.x_max > 0.0 ? a.x_max : a.x_min, a.x_count);
    const hs::SpectralWeight w{a.K, a.G, a.nu};
    w.validate();
    hs::ContourSpec c = hs::default_contour(w, plus ? hs::PsiKind::Plus : hs::PsiKind::Minus);
    if (a.beta != 0.0) c.beta = a.beta;
    hs::check_contour_beta(c.beta, plus ? hs::PsiKind::Plus : hs::PsiKind::Minus, !plus);
    // validate the whole grid before computing anything
    for (double x : xs) {
        if (!(x > 0.0)) throw hs::DomainError("x must be positive");
        if (plus && x > 0.05) throw hs::RegimeError("hypergeometric route needs x <= 0.05");
        if (!plus && x >= 1.0) throw hs::RegimeError("double-integral route needs x < 1");
    }

    Table t{{"x", "contour", "contour_error", plus ? "hypergeometric" : "double_integral", "route2_error",
             "abs_diff", "rel_diff", "agree"},
            {}};
    bool all = true;
    for (double x : xs) {
        const auto r1 = plus ? hs::psi_plus_contour_detailed(x, w, c) : hs::psi_minus_detailed(x, w, c);
        const auto r2 = plus ? hs::psi_plus_hyper_detailed(x, w) : hs::psi_minus_double_integral(x, w, c);
        const double diff = std::abs(r1.value - r2.value);
        const double scale = std::max(std::abs(r1.value), std::abs(r2.value));
        const bool ok = diff <= a.tol * scale + r1.error + r2.error;
        all = all && ok;
        t.rows.push_back({x, r1.value, r1.error, r2.value, r2.error, diff, scale > 0.0 ? diff / scale : 0.0,
                          (long long)(ok ? 1 : 0)});
    }
    emit(t, out);
    if (!all) throw PropertyFailure("Psi routes disagree beyond tolerance");
    return kExitOk;
}

// --- csum ------------------------------------------------------------------

struct CsumArgs {
    double K = 100.0, G = 10.0;
    double lambda_c = 1.0, f_max_mult = 3.0;
    std::string m_cap = "effective";
    std::string summary;
};

int run_csum(const CsumArgs& a, const OutputOptions& out, int threads) {
    const hs::SpectralWeight w{a.K, a.G, 0};
    w.validate();
    if (!(a.lambda_c > 0.0)) throw hs::DomainError("--lambda-c must be positive");
    if (!(a.f_max_mult > 0.0)) throw hs::DomainError("--f-max-mult must be positive");
    hs::MotoOptions opt;
    opt.threads = threads;
    if (a.m_cap == "full") opt.m_cap_mode = hs::MCapMode::Full;
    else if (a.m_cap != "effective") throw hs::DomainError("--m-cap must be full or effective");

    const auto r = hs::c_sum(w, a.lambda_c, a.f_max_mult, opt);

    Table t;
    t.columns = {"f"};
    for (int k = 1; k <= 7; ++k) {
        t.columns.push_back("h" + std::to_string(k) + "_re");
        t.columns.push_back("h" + std::to_string(k) + "_im");
    }
    for (int k = 1; k <= 7; ++k) t.columns.push_back("tail" + std::to_string(k));
    t.columns.insert(t.columns.end(), {"smoothing", "contribution_re", "contribution_im"});
    hs::ComplexNeumaierSum check;
    double scale = 0.0;
    for (const auto& b : r.breakdowns) {
        std::vector<Cell> row{(long long)b.f};
        for (const auto& h : b.h) {
            row.emplace_back(h.real());
            row.emplace_back(h.imag());
        }
        for (double e : b.tail) row.emplace_back(e);
        row.insert(row.end(), {b.smoothing, b.contribution.real(), b.contribution.imag()});
        t.rows.push_back(std::move(row));
        check.add(b.contribution);
        scale += std::abs(b.contribution);
    }
    emit(t, out);

    const double predictor = hs::main_term_predictor(a.K, a.G);
    Table s{{"quantity", "value"}, {}};
    s.rows = {{std::string("K"), a.K},
              {std::string("G"), a.G},
              {std::string("lambda"), r.lambda},
              {std::string("value_re"), r.value.real()},
              {std::string("value_im"), r.value.imag()},
              {std::string("tail_total"), r.tail_total},
              {std::string("nu_envelope"), r.nu_envelope},
              {std::string("unsmoothed_re"), r.unsmoothed.real()},
              {std::string("max_unsmoothed_partial"), r.max_unsmoothed_partial},
              {std::string("abel_resummed_re"), r.abel_resummed.real()},
              {std::string("main_term_predictor"), predictor},
              {std::string("ratio_to_predictor"), r.value.real() / predictor},
              {std::string("in_main_term_range"), (long long)(hs::in_main_term_range(a.K, a.G) ? 1 : 0)},
              {std::string("f_count"), (long long)r.breakdowns.size()}};
    if (!a.summary.empty()) emit(s, out, a.summary);
    else write_table(std::cerr, s, "csv");

    if (std::abs(check.value() - r.value) > 1e-12 * std::max(scale, 1.0))
        throw PropertyFailure("breakdown contributions do not sum to the total");
    return kExitOk;
}

// --- expsum ----------------------------------------------------------------

struct ExpsumArgs {
    std::string mode = "model";
    std::vector<double> M{100}, N{10000}, K{1e5};
    double C = 1.0, G = 0.0;
    double budget = hs::kDefaultWorkBudget;
    int pairs = 200;
    std::vector<double> weighted_K{50, 100, 200, 400};
    double weighted_g_exp = 0.3;
};

std::int64_t as_index(double v, const char* name) {
    if (!(v >= 1.0) || v != std::floor(v) || v > 9e15)
        throw hs::DomainError(std::string(name) + " must be a positive integer");
    return static_cast<std::int64_t>(v);
}

int run_expsum(const ExpsumArgs& a, const OutputOptions& out, int threads) {
    Table t;
    if (a.mode == "weighted") {
        t.columns = {"K", "G", "value_re", "value_im", "ratio_GK3", "terms", "damping_constant"};
        for (double K : a.weighted_K) {
            const hs::SpectralWeight w{K, std::pow(K, a.weighted_g_exp), 0};
            w.validate();
        }
        for (double K : a.weighted_K) {
            const hs::SpectralWeight w{K, std::pow(K, a.weighted_g_exp), 0};
            const auto r = hs::weighted_sum_31(w, static_cast<std::int64_t>(std::floor(3.0 * K)));
            t.rows.push_back({K, w.G, r.value.real(), r.value.imag(), std::abs(r.value) / (w.G * K * K * K),
                              (long long)r.terms, r.damping_constant});
        }
        emit(t, out);
        return kExitOk;
    }
    const std::size_t n = std::max({a.M.size(), a.N.size(), a.K.size()});
    auto pick = [&](const std::vector<double>& v, std::size_t i, const char* name) {
        if (v.size() != 1 && v.size() != n) throw hs::DomainError(std::string("--") + name + ": length mismatch");
        return v.size() == 1 ? v[0] : v[i];
    };
    std::vector<hs::PhaseGrid> grids;
    for (std::size_t i = 0; i < n; ++i) {
        auto g = hs::make_phase_grid(as_index(pick(a.M, i, "M"), "M"), as_index(pick(a.N, i, "N"), "N"),
                                     pick(a.K, i, "K"), a.C, 0, 0, a.G);
        if (a.mode == "model" && double(g.M1 - g.M) * double(g.N1 - g.N) > a.budget)
            throw hs::CapacityError("grid " + std::to_string(i) + " exceeds the work budget");
        grids.push_back(g);
    }
    if (a.mode == "model") {
        t.columns = {"K", "G", "M", "N", "N0", "blocks", "direct_abs", "bound", "constant", "per_block_max_constant",
                     "flags_ok"};
        for (const auto& g : grids) {
            const auto r = hs::model_double_sum(g, threads, a.budget);
            t.rows.push_back({g.K, g.G, (long long)g.M, (long long)g.N, (long long)g.N0, (long long)g.block_count(),
                              std::abs(r.value), r.report.bound_value, r.report.implied_constant,
                              r.report.per_block_max_constant, (long long)(g.flags.all() ? 1 : 0)});
        }
    } else if (a.mode == "premise") {
        t.columns = {"K", "M", "N", "N0", "max_block_derivative_gap", "premise_holds", "max_pair_constant"};
        for (const auto& g : grids) {
            const double gap = hs::max_block_derivative_gap(g, g.N0);
            // deterministic pair sample: n1 walks the range, n2 = n1 + 1 + (k mod N0)
            double worst = 0.0;
            for (int k = 0; k < a.pairs; ++k) {
                const std::int64_t span = std::max<std::int64_t>(1, std::min<std::int64_t>(g.N0, 1 + k % g.N0));
                const std::int64_t room = std::max<std::int64_t>(1, g.N1 - g.N - span);
                const std::int64_t n1 = g.N + 1 + (std::int64_t(k) * 7919) % room;
                const std::int64_t n2 = std::min(n1 + span, g.N1);
                if (n2 == n1 || std::min(n1, n2) <= g.M1) continue;
                worst = std::max(worst, hs::inner_difference_sum(n1, n2, g).implied_constant);
            }
            t.rows.push_back({g.K, (long long)g.M, (long long)g.N, (long long)g.N0, gap,
                              (long long)(gap <= 0.5 ? 1 : 0), worst});
        }
    } else {
        throw hs::DomainError("--mode must be model, premise or weighted");
    }
    emit(t, out);
    return kExitOk;
}

// --- spectral --------------------------------------------------------------

struct SpectralArgs {
    std::string records = "data/maass_fixture.csv";
    std::string mode = "windows";
    std::vector<double> K, G;
    int power = 3;
    double eps0 = 0.01;
    bool lenient = false;
};

int run_spectral(const SpectralArgs& a, const OutputOptions& out, int threads) {
    auto set = hs::parse_records(a.records, hs::record_format_from_path(a.records), !a.lenient);
    for (const auto& w : set.report.warnings) std::cerr << "warning: " << w << '\n';
    for (const auto& v : set.report.violations)
        std::cerr << "dropped record " << v.record << " (kappa " << v.kappa << "): " << v.kind << ": " << v.detail
                  << '\n';
    Table t;
    if (a.mode == "records") {
        hs::emit_records(std::cout, set, out.format == "json" ? hs::RecordFormat::Json : hs::RecordFormat::Csv);
        return kExitOk;
    }
    attach_central_values(set, threads);
    if (a.mode == "ratios") {
        t.columns = {"kappa", "parity", "central_value", "ratio", "ratio_convexity", "chi_half_minus_parity"};
        const auto rows = hs::subconvexity_profile(set, threads);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            const double chi = std::abs(hs::functional_equation_factor(0.5, r.kappa, r.parity) - double(r.parity));
            t.rows.push_back({r.kappa, (long long)r.parity, r.central_value, r.ratio, r.ratio_convexity, chi});
        }
        emit(t, out);
        return kExitOk;
    }
    if (a.K.empty() || (a.G.size() != 1 && a.G.size() != a.K.size()))
        throw hs::DomainError("--K is required; --G needs one value or one per K");
    for (std::size_t i = 0; i < a.K.size(); ++i) {
        const double G = a.G.size() == 1 ? a.G[0] : a.G[i];
        if (!(a.K[i] > 0.0) || !(G > 0.0)) throw hs::DomainError("K and G must be positive");
    }
    if (a.mode == "windows") {
        t.columns = {"K", "G", "power", "value", "ratio", "count", "expected_count", "density_flag",
                     "error_estimate"};
        for (std::size_t i = 0; i < a.K.size(); ++i) {
            const double G = a.G.size() == 1 ? a.G[0] : a.G[i];
            const auto r = hs::short_interval_sum(set, a.K[i], G, a.power, a.eps0);
            t.rows.push_back({a.K[i], G, (long long)a.power, r.value, r.ratio, (long long)r.count, r.expected_count,
                              (long long)(r.density_flag ? 1 : 0), r.error_estimate});
        }
    } else if (a.mode == "weighted") {
        t.columns = {"K", "G", "value", "terms", "error_estimate"};
        for (std::size_t i = 0; i < a.K.size(); ++i) {
            const double G = a.G.size() == 1 ? a.G[0] : a.G[i];
            const auto r = hs::weighted_spectral_sum(set, hs::SpectralWeight{a.K[i], G, 0});
            t.rows.push_back({a.K[i], G, r.value, (long long)r.terms, r.error_estimate});
        }
    } else {
        throw hs::DomainError("--mode must be windows, weighted, ratios or records");
    }
    emit(t, out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"heckesum: divisor-side and spectral-side computations for the cubic moment of Hecke L-values"};
    app.set_config("--config", "", "INI file with key = value lines; [subcommand] sections; flags win");
    app.require_subcommand(1);
    OutputOptions out;
    int threads = 0;
    app.add_option("--output,-o", out.path, "output file (default stdout); relative paths go under $HECKESUM_OUTPUT_DIR")
        ->configurable();
    app.add_option("--format", out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", threads, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);

    SpecfunArgs sf;
    auto* c_sf = app.add_subcommand("specfun", "point values of special functions");
    c_sf->add_option("function", sf.function, "gamma, loggamma, digamma, trigamma, zeta, f21, gauss_moment")
        ->required();
    c_sf->add_option("--s", sf.s, "complex argument, e.g. 0.5+1i");
    c_sf->add_option("--a", sf.a, "2F1 alpha");
    c_sf->add_option("--b", sf.b, "2F1 beta");
    c_sf->add_option("--c", sf.c, "2F1 gamma");
    c_sf->add_option("--z", sf.z, "2F1 argument");
    c_sf->add_option("--j", sf.j, "Gaussian moment order");
    c_sf->add_option("--A", sf.A, "Gaussian moment shift");

    PsiArgs ps;
    auto* c_ps = app.add_subcommand("psi", "Psi+ / Psi- by two independent routes");
    c_ps->add_option("--kind", ps.kind, "plus or minus");
    c_ps->add_option("--K", ps.K, "spectral centre (default 100 for plus, 20 for minus)");
    c_ps->add_option("--G", ps.G, "window width");
    c_ps->add_option("--nu", ps.nu, "weight polynomial degree");
    c_ps->add_option("--beta", ps.beta, "contour abscissa (0 = default)");
    c_ps->add_option("--x", ps.x, "x values")->delimiter(',');
    c_ps->add_option("--x-min", ps.x_min, "log-spaced grid start");
    c_ps->add_option("--x-max", ps.x_max, "log-spaced grid end");
    c_ps->add_option("--x-count", ps.x_count, "log-spaced grid size");
    c_ps->add_option("--tol", ps.tol, "relative agreement tolerance (default 1e-6 plus, 1e-5 minus)");

    CsumArgs cs;
    auto* c_cs = app.add_subcommand("csum", "divisor-side sum C(K,G) with per-f breakdown");
    c_cs->add_option("--K", cs.K, "spectral centre");
    c_cs->add_option("--G", cs.G, "window width");
    c_cs->add_option("--lambda-c", cs.lambda_c, "smoothing exponent lambda = C log K");
    c_cs->add_option("--f-max-mult", cs.f_max_mult, "f runs up to this multiple of K");
    c_cs->add_option("--m-cap", cs.m_cap, "H_2 window: effective or full");
    c_cs->add_option("--summary", cs.summary, "write the summary table here instead of stderr");

    ExpsumArgs es;
    auto* c_es = app.add_subcommand("expsum", "model double sums, block premise, weighted sum scans");
    c_es->add_option("--mode", es.mode, "model, premise or weighted");
    c_es->add_option("--M", es.M, "M values")->delimiter(',');
    c_es->add_option("--N", es.N, "N values")->delimiter(',');
    c_es->add_option("--K", es.K, "K values")->delimiter(',');
    c_es->add_option("--C", es.C, "block-size constant");
    c_es->add_option("--G", es.G, "G for the grid condition flags (0 skips them)");
    c_es->add_option("--budget", es.budget, "maximum number of (m, n) terms");
    c_es->add_option("--pairs", es.pairs, "pairs sampled in premise mode");
    c_es->add_option("--weighted-K", es.weighted_K, "K values for weighted mode")->delimiter(',');
    c_es->add_option("--weighted-g-exp", es.weighted_g_exp, "G = K^g in weighted mode");

    SpectralArgs sp;
    auto* c_sp = app.add_subcommand("spectral", "Maass-form records: window sums, weighted sums, ratios");
    c_sp->add_option("--records", sp.records, "record file (.csv or .json)");
    c_sp->add_option("--mode", sp.mode, "windows, weighted, ratios or records");
    c_sp->add_option("--K", sp.K, "window centres")->delimiter(',');
    c_sp->add_option("--G", sp.G, "window half-widths")->delimiter(',');
    c_sp->add_option("--power", sp.power, "power of H(1/2) in window sums");
    c_sp->add_option("--eps0", sp.eps0, "epsilon in the ratio normalization");
    c_sp->add_flag("--lenient", sp.lenient, "drop invalid records instead of failing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*c_sf) return run_specfun(sf, out);
        if (*c_ps) return run_psi(ps, out);
        if (*c_cs) return run_csum(cs, out, threads);
        if (*c_es) return run_expsum(es, out, threads);
        if (*c_sp) return run_spectral(sp, out, threads);
    } catch (const PropertyFailure& e) {
        std::cerr << "property check failed: " << e.what() << '\n';
        return kExitProperty;
    } catch (const hs::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
