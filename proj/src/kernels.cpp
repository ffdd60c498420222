#include "heckesum/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "heckesum/hypergeom.hpp"
#include "heckesum/specfun.hpp"
#include "heckesum/summation.hpp"

namespace heckesum {

const double kContourNormalization = 1.0;

namespace {

constexpr double kWindowSigmas = 6.0;

// Composite GK21 over [lo, hi] with panels no wider than `width`.
// Returns the Kronrod sum, and the |Kronrod - Gauss| error estimate.
template <class F>
auto fixed_panels(F&& f, double lo, double hi, double width) {
    using T = std::decay_t<decltype(f(lo))>;
    const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / width)));
    const auto rule = quad::make_panel_rule(lo, hi, panels);
    Compensated<T> kr, ga;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const T v = f(rule.nodes[i]);
        kr.add(v * rule.kronrod_weights[i]);
        if (rule.gauss_weights[i] != 0.0) ga.add(v * rule.gauss_weights[i]);
    }
    struct Out {
        T value;
        double error;
    };
    return Out{kr.value(), std::abs(kr.value() - ga.value())};
}

// Adaptive integration over a set of windows. The absolute floor is tied to
// the L1 mass of the integrand (from a first fixed-grid pass) so that
// integrals that cancel to ~0 terminate instead of chasing round-off.
template <class F>
auto adaptive_windows(F&& f, const std::vector<Interval>& windows, double init_width, double rel_tol) {
    using T = std::decay_t<decltype(f(0.0))>;
    std::vector<double> points;
    double l1 = 0.0;
    for (const auto& win : windows) {
        auto abs_f = [&](double r) { return std::abs(f(r)); };
        l1 += fixed_panels(abs_f, win.lo, win.hi, init_width).value;
    }
    quad::Options opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = std::max(1e-300, 1e-15 * l1);
    opt.max_intervals = 200000;
    Compensated<T> total;
    double err = 0.0;
    for (const auto& win : windows) {
        const int panels = std::max(1, static_cast<int>(std::ceil((win.hi - win.lo) / init_width)));
        auto res = quad::integrate(f, win.lo, win.hi, opt, panels);
        total.add(res.value);
        err += res.abs_error;
    }
    struct Out {
        T value;
        double error;
    };
    return Out{total.value(), err};
}

double distance_to(double v, double lo, double hi) {
    if (v < lo) return lo - v;
    if (v > hi) return v - hi;
    return 0.0;
}

// Bound on the rate (per unit r) at which Gamma(s+ir)/Gamma(1-s+ir) turns or
// changes modulus, over the windows, for Im s = t.
double ratio_rate(const SpectralWeight& w, double t) {
    const double R = w.window_radius();
    const double lo = std::max(0.0, w.K - R);
    const double hi = w.K + R;
    const double d = std::max(distance_to(std::abs(t), lo, hi), 0.5);
    double rate = std::log((std::abs(t) + hi + 1.0) / d) + 0.5;
    if (d < 5.0) rate += kPi;
    return rate;
}

double contour_panel_width_r(const SpectralWeight& w, double t) {
    return std::min(0.5 * w.G, 4.0 / ratio_rate(w, t));
}

// For Re s < 0 the poles r_n = i(s+n) of Gamma(s+ir) have crossed the real
// r-axis. The analytic continuation of hhat from Re s > 0 is the real-line
// integral plus 2 pi i times the residue of each crossed pole:
//   2 pi (-1)^n r_n h(r_n) / (n! Gamma(1 - 2s - n)).
// Returned in log form (log of each term) so callers can fold in other
// exponentially large factors before exponentiating.
std::vector<Complex> continuation_log_terms(Complex s, const SpectralWeight& w) {
    std::vector<Complex> out;
    double log_fact = 0.0;
    for (int n = 0; s.real() + n < 0.0; ++n) {
        if (n > 0) log_fact += std::log(double(n));
        const Complex rn = kI * (s + double(n));
        const Complex hn = weight_eval(w, rn);
        if (hn == 0.0) continue;
        const Complex arg = 1.0 - 2.0 * s - double(n);
        if (is_nonpositive_integer(arg)) continue;  // 1/Gamma vanishes
        Complex term = std::log(2.0 * kPi * rn * hn) - log_gamma(arg) - log_fact;
        if (n % 2 == 1) term += Complex(0.0, kPi);
        out.push_back(term);
    }
    return out;
}

}  // namespace

void SpectralWeight::validate() const {
    if (!(K > 0.0) || !std::isfinite(K)) throw DomainError("SpectralWeight: K must be positive and finite");
    if (!(G > 0.0) || !std::isfinite(G)) throw DomainError("SpectralWeight: G must be positive and finite");
    if (nu < 0) throw DomainError("SpectralWeight: nu must be non-negative");
}

bool SpectralWeight::in_theorem_range(double eps) const {
    return G >= std::pow(K, eps) && G <= K;
}

double SpectralWeight::window_radius() const { return G * std::max(std::log(K), kWindowSigmas); }

std::vector<Interval> weight_windows(const SpectralWeight& w) {
    const double R = w.window_radius();
    if (w.K - R <= 0.0) return {Interval{-w.K - R, w.K + R}};
    return {Interval{-w.K - R, -w.K + R}, Interval{w.K - R, w.K + R}};
}

Complex weight_eval(const SpectralWeight& w, Complex r) {
    const Complex a = (r - w.K) / w.G;
    const Complex b = (r + w.K) / w.G;
    Complex v = (r * r + 0.25) * (std::exp(-a * a) + std::exp(-b * b));
    if (w.nu > 0) v *= std::pow(1.0 - (r / w.K) * (r / w.K), w.nu);
    return v;
}

double weight_real(const SpectralWeight& w, double r) {
    const double a = (r - w.K) / w.G;
    const double b = (r + w.K) / w.G;
    double v = (r * r + 0.25) * (std::exp(-a * a) + std::exp(-b * b));
    if (w.nu > 0) v *= std::pow(1.0 - (r / w.K) * (r / w.K), w.nu);
    return v;
}

Complex weight_derivative_at_minus_i_half(const SpectralWeight& w) {
    w.validate();
    if (w.nu != 0) throw DomainError("weight_derivative_at_minus_i_half: defined for nu = 0 only");
    const Complex r(0.0, -0.5);
    const Complex a = (r - w.K) / w.G;
    const Complex b = (r + w.K) / w.G;
    // (r^2 + 1/4) vanishes at r = -i/2, so only 2r * (Gaussian sum) survives.
    return 2.0 * r * (std::exp(-a * a) + std::exp(-b * b));
}

double default_t_max(const SpectralWeight& w, PsiKind kind) {
    const double lk = std::log(std::max(w.K, 1.0));
    if (kind == PsiKind::Plus) return std::max(lk * lk, 6.0 * w.K / w.G);
    return std::max(lk * lk, 14.0);
}

ContourSpec default_contour(const SpectralWeight& w, PsiKind kind) {
    ContourSpec c;
    c.beta = kind == PsiKind::Plus ? -0.25 : -1.25;
    c.t_max = default_t_max(w, kind);
    return c;
}

void check_contour_beta(double beta, PsiKind kind, bool minus_double_integral) {
    if (!std::isfinite(beta)) throw DomainError("contour abscissa must be finite");
    const double upper = minus_double_integral ? -0.5 : 0.5;
    if (!(beta > -1.5 && beta < upper))
        throw RegimeError("contour abscissa " + std::to_string(beta) + " outside (-3/2, " +
                          (minus_double_integral ? std::string("-1/2") : std::string("1/2")) + ")");
    const double half = 2.0 * beta;
    if (std::abs(half - std::round(half)) < 2e-3)
        throw PoleError("contour abscissa " + std::to_string(beta) + " within 1e-3 of a pole line");
    (void)kind;
}

ComplexWithError h_hat_detailed(Complex s, const SpectralWeight& w, int d_order, double quad_tol) {
    w.validate();
    if (d_order < 0 || d_order > 2) throw DomainError("h_hat: d_order must be 0, 1 or 2");
    if (!is_finite(s)) throw DomainError("h_hat: non-finite s");
    auto integrand = [&](double r) -> Complex {
        const double hr = weight_real(w, r);
        if (hr == 0.0) return 0.0;
        const Complex a = s + Complex(0.0, r);
        const Complex b = 1.0 - s + Complex(0.0, r);
        const Complex ratio = gamma_ratio(s, r);
        Complex factor = 1.0;
        if (d_order >= 1) {
            const Complex d1 = digamma(a) + digamma(b);
            factor = d_order == 1 ? d1 : d1 * d1 + trigamma(a) - trigamma(b);
        }
        return r * hr * ratio * factor;
    };
    if (d_order > 0 && s.real() < 0.0)
        throw DomainError("h_hat: derivatives are provided for Re s >= 0 only");
    if (s.real() < 0.0 && std::abs(s.real() - std::round(s.real())) < 1e-3)
        throw PoleError("h_hat: Re s within 1e-3 of a non-positive integer");
    const auto res = adaptive_windows(integrand, weight_windows(w), 0.5 * w.G, quad_tol);
    Complex value = res.value;
    for (const Complex& lt : continuation_log_terms(s, w)) value += std::exp(lt);
    return {value, res.error};
}

Complex h_hat(Complex s, const SpectralWeight& w, int d_order, double quad_tol) {
    return h_hat_detailed(s, w, d_order, quad_tol).value;
}

namespace {
constexpr double kWindowSkipLog = 80.0;
}  // namespace

PsiContourTable::PsiContourTable(const SpectralWeight& w, PsiKind kind, const ContourSpec& c, double log_x_max,
                                 int threads)
    : w_(w), kind_(kind), beta_(c.beta), log_x_max_(log_x_max) {
    w.validate();
    check_contour_beta(c.beta, kind);
    if (!(log_x_max >= 0.0)) throw DomainError("PsiContourTable: log_x_max must be non-negative");
    t_max_ = c.t_max > 0.0 ? c.t_max : default_t_max(w, kind);

    // Phase rate of c(t) x^{it} in t.
    const double omega =
        log_x_max + 2.0 * std::log(w.K + w.window_radius() + t_max_ + 1.0) + 2.0 * std::log1p(t_max_) + 2.0;
    const double width = std::min(0.5, 4.0 / omega);
    const int panels = std::max(1, static_cast<int>(std::ceil(t_max_ / width)));
    rule_ = quad::make_panel_rule(0.0, t_max_, panels);
    coef_.assign(rule_.size(), Complex(0.0));
    coef_err_.assign(rule_.size(), 0.0);

    const auto windows = weight_windows(w);
    parallel_for(rule_.size(), threads, [&](std::size_t i) {
        const double t = rule_.nodes[i];
        const Complex s(beta_, t);
        Complex base = 2.0 * log_gamma(0.5 - s);
        Complex mult = 1.0;
        if (kind_ == PsiKind::Plus)
            mult = stable_tan(kPi * s);
        else
            base -= log_cos(kPi * s);
        const double width_r = contour_panel_width_r(w_, t);
        ComplexNeumaierSum total;
        double err = 0.0;
        // With separated windows and t below their inner edges, the window at -K
        // outweighs the one at +K by about e^{2 pi t}; skip whichever is negligible.
        std::vector<bool> skip(windows.size(), false);
        if (windows.size() == 2 && t < windows[1].lo) {
            double lm[2];
            for (int k = 0; k < 2; ++k) {
                const double r = k == 0 ? -w_.K : w_.K;
                lm[k] = std::real(log_gamma(s + Complex(0.0, r)) - log_gamma(1.0 - s + Complex(0.0, r)));
            }
            if (lm[1] < lm[0] - kWindowSkipLog) skip[1] = true;
            if (lm[0] < lm[1] - kWindowSkipLog) skip[0] = true;
        }
        for (std::size_t wi = 0; wi < windows.size(); ++wi) {
            if (skip[wi]) continue;
            const auto& win = windows[wi];
            auto f = [&](double r) -> Complex {
                const double hr = weight_real(w_, r);
                if (hr == 0.0) return 0.0;
                const Complex a = s + Complex(0.0, r);
                const Complex b = 1.0 - s + Complex(0.0, r);
                return r * hr * std::exp(base + log_gamma(a) - log_gamma(b));
            };
            const auto res = fixed_panels(f, win.lo, win.hi, width_r);
            total.add(res.value);
            err += res.error;
        }
        for (const Complex& lt : continuation_log_terms(s, w_)) total.add(std::exp(base + lt));
        coef_[i] = mult * total.value();
        coef_err_[i] = std::abs(mult) * err;
    });
    tail_estimate_ = std::abs(coef_.back()) * std::max(1.0, w.K / w.G);
}

ValueWithError PsiContourTable::evaluate(double x) const {
    if (!(x > 0.0)) throw DomainError("Psi: x must be positive");
    const double lx = std::log(x);
    if (std::abs(lx) > log_x_max_ * (1.0 + 1e-12) + 1e-12)
        throw RegimeError("Psi table built for |log x| <= " + std::to_string(log_x_max_) + ", got x = " +
                          std::to_string(x));
    NeumaierSum kr, ga, werr;
    const double xb = std::exp(beta_ * lx);
    for (std::size_t i = 0; i < rule_.size(); ++i) {
        const Complex xs = xb * std::exp(Complex(0.0, rule_.nodes[i] * lx));
        const double v = std::imag(coef_[i] * xs);
        kr.add(rule_.kronrod_weights[i] * v);
        if (rule_.gauss_weights[i] != 0.0) ga.add(rule_.gauss_weights[i] * v);
        werr.add(rule_.kronrod_weights[i] * coef_err_[i] * xb);
    }
    ValueWithError out;
    out.value = -2.0 * kContourNormalization * kr.value();
    out.error = 2.0 * std::abs(kContourNormalization) *
                (std::abs(kr.value() - ga.value()) + werr.value() + tail_estimate_ * xb);
    return out;
}

ValueWithError psi_plus_contour_detailed(double x, const SpectralWeight& w, const ContourSpec& c) {
    if (!(x > 0.0)) throw DomainError("psi_plus_contour: x must be positive");
    PsiContourTable table(w, PsiKind::Plus, c, std::abs(std::log(x)));
    return table.evaluate(x);
}

double psi_plus_contour(double x, const SpectralWeight& w, const ContourSpec& c) {
    return psi_plus_contour_detailed(x, w, c).value;
}

int default_k_cap(const SpectralWeight& w) {
    const double lk = std::log(std::max(w.K, 2.0));
    return static_cast<int>(std::ceil(std::sqrt(w.K) * lk * lk));
}

namespace {

void check_hyper_regime(double x) {
    if (!(x > 0.0)) throw DomainError("hypergeometric route: x must be positive");
    if (x > 0.05) throw RegimeError("hypergeometric route needs x <= 0.05, got " + std::to_string(x));
}

// log of Gamma(1/2+ir)^2 / Gamma(1+2ir) * (L/2)^{-2ir}
Complex hyper_log_prefactor(double r, double logL) {
    return 2.0 * log_gamma(Complex(0.5, r)) - log_gamma(Complex(1.0, 2.0 * r)) -
           Complex(0.0, 2.0 * r) * (logL - std::log(2.0));
}

}  // namespace

ValueWithError psi_plus_hyper_detailed(double x, const SpectralWeight& w, int k_cap) {
    w.validate();
    check_hyper_regime(x);
    if (k_cap <= 0) k_cap = default_k_cap(w);
    const double sx = std::sqrt(x);
    const double L = sx + std::sqrt(1.0 + x);
    const double logL = std::log(L);
    const double z = z_param(x);
    const auto windows = weight_windows(w);
    const bool separated = windows.size() == 2;
    double series_err = 0.0;
    auto integrand = [&](double r) -> double {
        const double hr = weight_real(w, r);
        if (hr == 0.0) return 0.0;
        const double th = (separated && r > 0.0) ? 1.0 : std::tanh(kPi * r);
        const Complex pre = std::exp(hyper_log_prefactor(r, logL));
        const F21Params p{Complex(0.5, r), Complex(0.5, 0.0), Complex(1.0, r), Complex(z, 0.0)};
        const auto F = f21_series(p, 1e-15, k_cap);
        series_err = std::max(series_err, std::abs(r * hr * th) * std::abs(pre) * F.error_estimate);
        return r * hr * th * std::real(pre * F.value);
    };
    const auto res = adaptive_windows(integrand, windows, 0.25 * w.G, 1e-12);
    double span = 0.0;
    for (const auto& win : windows) span += win.hi - win.lo;
    const double pref = 4.0 * kPi * sx / L;
    return {pref * res.value, pref * (res.error + series_err * span)};
}

double psi_plus_hyper(double x, const SpectralWeight& w) { return psi_plus_hyper_detailed(x, w).value; }

std::vector<Complex> i_k_all(int k_max, double x, const SpectralWeight& w) {
    w.validate();
    check_hyper_regime(x);
    if (k_max < 0) throw DomainError("i_k: k must be non-negative");
    const double L = std::sqrt(x) + std::sqrt(1.0 + x);
    const double logL = std::log(L);
    const double R = w.window_radius();
    const double lo = std::max(w.K - R, 0.0);
    const double hi = w.K + R;
    const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / (0.125 * w.G))));
    const auto rule = quad::make_panel_rule(lo, hi, panels);
    std::vector<ComplexNeumaierSum> acc(static_cast<std::size_t>(k_max) + 1);
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double r = rule.nodes[i];
        const double u = (r - w.K) / w.G;
        const Complex base =
            rule.kronrod_weights[i] * r * (r * r + 0.25) * std::exp(-u * u + hyper_log_prefactor(r, logL));
        Complex poch = 1.0;
        for (int k = 0; k <= k_max; ++k) {
            acc[k].add(base * poch);
            poch *= Complex(0.5 + k, r) / Complex(1.0 + k, r);
        }
    }
    std::vector<Complex> out(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) out[k] = acc[k].value();
    return out;
}

Complex i_k(int k, double x, const SpectralWeight& w) { return i_k_all(k, x, w)[static_cast<std::size_t>(k)]; }

double psi_plus_series(double x, const SpectralWeight& w, int k_cap) {
    if (k_cap <= 0) k_cap = default_k_cap(w);
    const auto I = i_k_all(k_cap, x, w);
    const auto cbw = central_binomial_weights(k_cap);
    const double z = z_param(x);
    const double L = std::sqrt(x) + std::sqrt(1.0 + x);
    NeumaierSum sum;
    double zk = 1.0;
    for (int k = 0; k <= k_cap; ++k) {
        sum.add(cbw[k] * zk * I[k].real());
        zk *= z;
    }
    return 2.0 * 4.0 * kPi * std::sqrt(x) / L * sum.value();
}

Complex i0_leading(double x, const SpectralWeight& w) {
    const double L = std::sqrt(x) + std::sqrt(1.0 + x);
    const double logL = std::log(L);
    const Complex phase = std::exp(Complex(-w.G * w.G * logL * logL, -2.0 * w.K * logL - 0.25 * kPi));
    return kPi * w.G * std::pow(w.K, 2.5) * phase;
}

Complex i0_moment_expansion(double x, const SpectralWeight& w, int order) {
    if (order < 0 || order > kMaxGaussMoment) throw UnsupportedDegreeError("i0_moment_expansion: order outside [0, 12]");
    const double L = std::sqrt(x) + std::sqrt(1.0 + x);
    const double logL = std::log(L);
    const Complex A(0.0, -2.0 * w.G * logL);
    // amplitude (K+Gu)^{5/2} + (1/4)(K+Gu)^{1/2}, Taylor coefficients in u
    ComplexNeumaierSum sum;
    double b52 = 1.0, b12 = 1.0;  // binomial(5/2, j), binomial(1/2, j)
    const double g = w.G / w.K;
    double gj = 1.0;
    for (int j = 0; j <= order; ++j) {
        const double a = (std::pow(w.K, 2.5) * b52 + 0.25 * std::sqrt(w.K) * b12) * gj;
        sum.add(a * gauss_moment_poly(j, A));
        b52 *= (2.5 - j) / (j + 1.0);
        b12 *= (0.5 - j) / (j + 1.0);
        gj *= g;
    }
    const Complex factor = std::exp(0.25 * A * A + Complex(0.0, -2.0 * w.K * logL - 0.25 * kPi));
    return kSqrtPi * w.G * factor * sum.value();
}

ValueWithError psi_minus_detailed(double x, const SpectralWeight& w, const ContourSpec& c) {
    if (!(x > 0.0)) throw DomainError("psi_minus: x must be positive");
    PsiContourTable table(w, PsiKind::Minus, c, std::abs(std::log(x)));
    return table.evaluate(x);
}

double psi_minus(double x, const SpectralWeight& w, const ContourSpec& c) {
    return psi_minus_detailed(x, w, c).value;
}

namespace {

using Poly = std::vector<double>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// r h(r)/E_+(r) at r = K + G u, as a polynomial in u.
Poly positive_window_polynomial(const SpectralWeight& w) {
    const Poly lin{w.K, w.G};
    Poly q = poly_mul(lin, poly_mul(lin, lin));
    q[0] += 0.25 * w.K;
    q[1] += 0.25 * w.G;
    if (w.nu > 0) {
        // 1 - ((K+Gu)/K)^2 = -2(G/K)u - (G/K)^2 u^2
        const double g = w.G / w.K;
        const Poly f{0.0, -2.0 * g, -g * g};
        for (int i = 0; i < w.nu; ++i) q = poly_mul(q, f);
    }
    return q;
}

}  // namespace

Complex psi_minus_r_integral(double y, const SpectralWeight& w) {
    w.validate();
    if (!(y > 0.0)) throw DomainError("psi_minus_r_integral: y must be positive");
    const Poly q = positive_window_polynomial(w);
    if (static_cast<int>(q.size()) - 1 > kMaxGaussMoment)
        throw UnsupportedDegreeError("psi_minus_r_integral: nu too large for the moment table");
    const double L = std::log(y / (y + 1.0));
    const Complex A(0.0, w.G * L);
    ComplexNeumaierSum plus, minus;
    for (std::size_t j = 0; j < q.size(); ++j) {
        const Complex m = gauss_moment_poly(static_cast<int>(j), A);
        plus.add(q[j] * m);
        minus.add((j % 2 == 0 ? 1.0 : -1.0) * q[j] * m);
    }
    const double damp = std::exp(-0.25 * w.G * w.G * L * L);
    const Complex e = std::exp(Complex(0.0, L * w.K));
    return w.G * damp * (e * plus.value() - std::conj(e) * minus.value());
}

Complex psi_minus_r_integral_positive_quadrature(double y, const SpectralWeight& w) {
    w.validate();
    const double L = std::log(y / (y + 1.0));
    const double R = w.window_radius();
    auto f = [&](double r) -> Complex {
        const double u = (r - w.K) / w.G;
        double v = r * (r * r + 0.25) * std::exp(-u * u);
        if (w.nu > 0) v *= std::pow(1.0 - (r / w.K) * (r / w.K), w.nu);
        return v * std::exp(Complex(0.0, r * L));
    };
    const double rate = std::abs(L) + 1.0 / w.G;
    const double width = std::min(0.25 * w.G, 3.0 / rate);
    return adaptive_windows(f, {Interval{w.K - R, w.K + R}}, width, 1e-13).value;
}

Complex psi_minus_r_integral_leading(double y, const SpectralWeight& w) {
    const double L = std::log(y / (y + 1.0));
    const double damp = std::exp(-0.25 * w.G * w.G * L * L);
    const Complex e = std::exp(Complex(0.0, L * w.K));
    return kSqrtPi * w.G * std::pow(w.K, 3) * e * damp * (1.0 + Complex(0.0, 1.5 * w.G * w.G * L / w.K));
}

ValueWithError psi_minus_double_integral(double x, const SpectralWeight& w, const ContourSpec& c) {
    w.validate();
    if (!(x > 0.0 && x < 1.0)) throw RegimeError("double-integral route for Psi- needs 0 < x < 1");
    check_contour_beta(c.beta, PsiKind::Minus, true);
    const double beta = c.beta;

    // y range: below y_min the damping exp(-G^2 L^2/4) is < 1e-16.
    const double Lstar = 2.0 * std::sqrt(16.0 * std::log(10.0)) / w.G;
    const double y_min = 1.0 / std::expm1(Lstar);
    const double y_max = 1e6 * std::max(1.0, w.K / 100.0);
    const double log_w_max =
        std::max(std::abs(std::log(x * y_min * (y_min + 1.0))), std::abs(std::log(x * y_max * (y_max + 1.0))));

    // Phi(w) = i * 2 int_0^T Re(k(s) w^s) dt,  k(s) = Gamma(1/2-s)^2 / (Gamma(1-2s) cos(pi s)).
    const double T = c.t_max > 0.0 ? c.t_max : default_t_max(w, PsiKind::Minus);
    const double omega = log_w_max + 2.0 * std::log1p(T) + 4.0;
    const int panels = std::max(1, static_cast<int>(std::ceil(T / std::min(0.25, 4.0 / omega))));
    const auto rule = quad::make_panel_rule(0.0, T, panels);
    std::vector<Complex> kcoef(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const Complex s(beta, rule.nodes[i]);
        kcoef[i] = std::exp(2.0 * log_gamma(0.5 - s) - log_gamma(1.0 - 2.0 * s) - log_cos(kPi * s));
    }
    auto phi_re = [&](double wv) {
        const double lw = std::log(wv);
        const double wb = std::exp(beta * lw);
        NeumaierSum sum;
        for (std::size_t i = 0; i < rule.size(); ++i)
            sum.add(rule.kronrod_weights[i] * std::real(kcoef[i] * std::exp(Complex(0.0, rule.nodes[i] * lw))));
        return 2.0 * wb * sum.value();
    };

    // integrand in v = log y:  y * (y(y+1))^{-1} * Re( i Phi_re * R(y) )
    auto integrand = [&](double v) {
        const double y = std::exp(v);
        const double yy = y * (y + 1.0);
        const Complex R = psi_minus_r_integral(y, w);
        return y / yy * phi_re(x * yy) * (-R.imag());
    };

    NeumaierSum total, err;
    double v = std::log(y_min);
    const double v_end = std::log(y_max);
    while (v < v_end) {
        const double y = std::exp(v);
        const double width = std::min(0.25, 3.0 / (w.K / (y + 1.0) + 3.0));
        const double v_next = std::min(v + width, v_end);
        auto panel = quad::gk21(integrand, v, v_next);
        total.add(panel.value);
        err.add(panel.error);
        v = v_next;
    }
    return {kContourNormalization * total.value(), std::abs(kContourNormalization) * err.value()};
}

Complex ibp_integral(double beta, double t, const SpectralWeight& w) {
    w.validate();
    const double y0 = w.G / std::log(w.K);
    const double y_max = 1e8;
    auto integrand = [&](double v) -> Complex {
        const double y = std::exp(v);
        const double yy = y * y + y;
        const double L = std::log(y / (y + 1.0));
        const double F = t * std::log(yy) + w.K * L;
        return y * std::exp((beta - 1.0) * std::log(yy) - 0.25 * w.G * w.G * L * L) *
               std::exp(Complex(0.0, F));
    };
    ComplexNeumaierSum total;
    double v = std::log(y0);
    const double v_end = std::log(y_max);
    while (v < v_end) {
        const double y = std::exp(v);
        const double rate = std::abs(t) * (1.0 + y / (y + 1.0)) + w.K / (y + 1.0);
        const double width = std::min(0.25, 3.0 / (rate + 1.0));
        const double v_next = std::min(v + width, v_end);
        total.add(quad::gk21(integrand, v, v_next).value);
        v = v_next;
    }
    return total.value();
}

}  // namespace heckesum
