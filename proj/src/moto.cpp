#include "heckesum/moto.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "heckesum/quadrature.hpp"
#include "heckesum/specfun.hpp"
#include "heckesum/summation.hpp"

namespace heckesum {

namespace {

constexpr double kPiCubed = kPi * kPi * kPi;
constexpr double kH7PanelWidth = 0.5;
constexpr long kH2TailSamples = 32;
// H_3 stops once a term drops below this fraction of max(|running total|, K^3 G).
constexpr double kH3RelativeStop = 1e-16;

double log_k(const SpectralWeight& w) { return std::log(std::max(w.K, 2.0)); }

}  // namespace

Complex HTermBreakdown::total() const {
    ComplexNeumaierSum s;
    for (const Complex& v : h) s.add(v);
    return s.value();
}

MotoContext::MotoContext(const SpectralWeight& w, long f_max, const MotoOptions& opt)
    : w_(w), f_max_(f_max), opt_(opt) {
    w.validate();
    if (f_max < 1) throw DomainError("MotoContext: f_max must be >= 1");
    if (opt.h3_max_multiple < 1) throw DomainError("MotoContext: h3_max_multiple must be >= 1");

    const auto d1 = h_hat_detailed(Complex(0.5, 0.0), w, 1, opt.quad_tol * 1e-3);
    const auto d2 = h_hat_detailed(Complex(0.5, 0.0), w, 2, opt.quad_tol * 1e-3);
    hhat_d1_ = d1.value;
    hhat_d2_ = d2.value;
    hhat_err_ = {d1.error, d2.error};
    hprime_ = weight_derivative_at_minus_i_half(w);

    const double lf = std::log(double(f_max));
    psi_plus_ = std::make_unique<PsiContourTable>(w, PsiKind::Plus, default_contour(w, PsiKind::Plus),
                                                  std::max(lf, std::log(2.0)), opt.threads);
    psi_minus_ = std::make_unique<PsiContourTable>(w, PsiKind::Minus, default_contour(w, PsiKind::Minus),
                                                   std::max(lf, std::log1p(double(opt.h3_max_multiple))),
                                                   opt.threads);

    const long sieve_limit = f_max * (opt.h3_max_multiple + 1) + 1;
    divisors_ = sieve_divisors(sieve_limit);

    // The zeta kernel of H_7 on a fixed grid over both windows.
    std::vector<double> nodes, kr, ga;
    for (const auto& win : weight_windows(w)) {
        const int panels = std::max(1, static_cast<int>(std::ceil((win.hi - win.lo) / kH7PanelWidth)));
        const auto rule = quad::make_panel_rule(win.lo, win.hi, panels);
        nodes.insert(nodes.end(), rule.nodes.begin(), rule.nodes.end());
        kr.insert(kr.end(), rule.kronrod_weights.begin(), rule.kronrod_weights.end());
        ga.insert(ga.end(), rule.gauss_weights.begin(), rule.gauss_weights.end());
    }
    std::vector<double> kernel(nodes.size(), 0.0);
    parallel_for(nodes.size(), opt.threads, [&](std::size_t i) {
        const double r = nodes[i];
        const double hr = weight_real(w, r);
        if (r == 0.0 || hr == 0.0) return;  // |zeta(1+2ir)|^{-2} vanishes at r = 0
        const double z4 = std::norm(riemann_zeta(Complex(0.5, r)));
        kernel[i] = z4 * z4 / std::norm(riemann_zeta(Complex(1.0, 2.0 * r))) * hr;
    });
    h7_nodes_ = std::move(nodes);
    h7_kronrod_.resize(kernel.size());
    h7_gauss_.resize(kernel.size());
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        h7_kronrod_[i] = kr[i] * kernel[i];
        h7_gauss_[i] = ga[i] * kernel[i];
    }
}

std::uint32_t MotoContext::d(long n) const { return divisors_.d(n); }

void MotoContext::require_f(long f) const {
    if (f < 1) throw DomainError("H term: f must be >= 1");
    if (f > f_max_)
        throw CapacityError("H term: f = " + std::to_string(f) + " exceeds context f_max = " + std::to_string(f_max_));
}

Complex MotoContext::h_term_1(long f, double* tail) const {
    require_f(f);
    const double sf = std::sqrt(double(f));
    const double c = kEulerGamma - std::log(2.0 * kPi * sf);
    const double pref = 2.0 / kPiCubed * d(f) / sf;
    if (tail) *tail = pref * (std::abs(c) * hhat_err_[0] + 0.25 * hhat_err_[1]);
    return -pref * kI * (c * hhat_d1_ + 0.25 * hhat_d2_);
}

long MotoContext::effective_m_cap(long f) const {
    const double lk = log_k(w_);
    return static_cast<long>(std::floor(double(f) * lk * lk / (w_.G * w_.G)));
}

Complex MotoContext::h_term_2(long f, MCapMode mode, double* tail) const {
    require_f(f);
    const long full = 2 * f;
    const long cap = mode == MCapMode::Full ? full : std::min(full, effective_m_cap(f));
    NeumaierSum sum, err;
    for (long m = 1; m <= cap; ++m) {
        const double a = d(m) * double(d(m + f)) / std::sqrt(double(m));
        const auto v = psi_plus_->evaluate(double(m) / double(f));
        sum.add(a * v.value);
        err.add(a * v.error);
    }
    if (tail) {
        // Discarded m in (cap, 2f]: magnitudes sampled every `stride` terms,
        // scaled by the stride, with a factor 2 for the unsampled gaps.
        const long n_dis = full - cap;
        const long stride = std::max(1L, n_dis / kH2TailSamples);
        NeumaierSum dis;
        for (long m = cap + 1; m <= full; m += stride) {
            const auto v = psi_plus_->evaluate(double(m) / double(f));
            dis.add(d(m) * double(d(m + f)) / std::sqrt(double(m)) * (std::abs(v.value) + v.error));
        }
        const double scale = stride > 1 ? 2.0 * double(stride) : 1.0;
        *tail = (err.value() + scale * dis.value()) / kPiCubed;
    }
    return sum.value() / kPiCubed;
}

Complex MotoContext::h_term_3(long f, double* tail) const {
    require_f(f);
    const double floor_scale = w_.K * w_.K * w_.K * w_.G;
    const long cap = long(opt_.h3_max_multiple) * f;
    NeumaierSum sum, err;
    double last = 0.0;
    long m = 1;
    for (; m <= cap; ++m) {
        const double a = d(m) * double(d(m + f)) / std::sqrt(double(m + f));
        const auto v = psi_minus_->evaluate(1.0 + double(m) / double(f));
        const double term = a * v.value;
        sum.add(term);
        err.add(a * v.error);
        last = std::abs(term);
        if (last < kH3RelativeStop * std::max(std::abs(sum.value()), floor_scale)) break;
    }
    if (tail) *tail = (err.value() + last * double(f)) / kPiCubed;
    return sum.value() / kPiCubed;
}

Complex MotoContext::h_term_4(long f, double* tail) const {
    require_f(f);
    NeumaierSum sum, err;
    for (long m = 1; m < f; ++m) {
        const double a = d(m) * double(d(f - m)) / std::sqrt(double(m));
        const auto v = psi_minus_->evaluate(double(m) / double(f));
        sum.add(a * v.value);
        err.add(a * v.error);
    }
    if (tail) *tail = err.value() / kPiCubed;
    return sum.value() / kPiCubed;
}

Complex MotoContext::h_term_5(long f, double* tail) const {
    require_f(f);
    const auto v = psi_minus_->evaluate(1.0);
    const double pref = d(f) / (2.0 * kPiCubed * std::sqrt(double(f)));
    if (tail) *tail = pref * v.error;
    return -pref * v.value;
}

Complex MotoContext::h_term_6(long f) const {
    require_f(f);
    const double s = divisor_sigma(Complex(-1.0, 0.0), f).real();
    return -12.0 / (kPi * kPi) * kI * s * std::sqrt(double(f)) * hprime_;
}

Complex MotoContext::h_term_7(long f, double* tail) const {
    require_f(f);
    // sigma_{2ir}(f) f^{-ir} = sum_{d | f} (d^2/f)^{ir}
    std::vector<double> logs;
    for (long q = 1; q * q <= f; ++q) {
        if (f % q) continue;
        logs.push_back(2.0 * std::log(double(q)) - std::log(double(f)));
        if (q * q != f) logs.push_back(2.0 * std::log(double(f / q)) - std::log(double(f)));
    }
    ComplexNeumaierSum kr, ga;
    for (std::size_t i = 0; i < h7_nodes_.size(); ++i) {
        if (h7_kronrod_[i] == 0.0 && h7_gauss_[i] == 0.0) continue;
        Complex sig = 0.0;
        for (double l : logs) sig += std::exp(Complex(0.0, h7_nodes_[i] * l));
        kr.add(h7_kronrod_[i] * sig);
        if (h7_gauss_[i] != 0.0) ga.add(h7_gauss_[i] * sig);
    }
    if (tail) *tail = std::abs(kr.value() - ga.value()) / kPi;
    return -kr.value() / kPi;
}

HTermBreakdown MotoContext::breakdown(long f) const {
    HTermBreakdown b;
    b.f = f;
    b.w = w_;
    b.h[0] = h_term_1(f, &b.tail[0]);
    b.h[1] = h_term_2(f, opt_.m_cap_mode, &b.tail[1]);
    b.h[2] = h_term_3(f, &b.tail[2]);
    b.h[3] = h_term_4(f, &b.tail[3]);
    b.h[4] = h_term_5(f, &b.tail[4]);
    b.h[5] = h_term_6(f);
    b.tail[5] = 0.0;
    b.h[6] = h_term_7(f, &b.tail[6]);
    return b;
}

CSumResult c_sum(const SpectralWeight& w, double lambdaC, double f_max_mult, const MotoOptions& opt) {
    if (!(f_max_mult > 0.0)) throw DomainError("c_sum: f_max_mult must be positive");
    const long f_max = std::max(1L, static_cast<long>(std::floor(f_max_mult * w.K)));
    MotoContext ctx(w, f_max, opt);
    return c_sum(ctx, lambdaC, f_max_mult);
}

CSumResult c_sum(const MotoContext& ctx, double lambdaC, double f_max_mult) {
    if (!(lambdaC > 0.0)) throw DomainError("c_sum: lambdaC must be positive");
    if (!(f_max_mult > 0.0)) throw DomainError("c_sum: f_max_mult must be positive");
    const auto& w = ctx.weight();
    const long f_max = std::max(1L, static_cast<long>(std::floor(f_max_mult * w.K)));
    if (f_max > ctx.f_max())
        throw CapacityError("c_sum: f range " + std::to_string(f_max) + " exceeds context f_max " +
                            std::to_string(ctx.f_max()));

    CSumResult out;
    out.lambda = lambdaC * log_k(w);
    out.breakdowns.resize(static_cast<std::size_t>(f_max));
    parallel_for(out.breakdowns.size(), ctx.options().threads, [&](std::size_t i) {
        const long f = static_cast<long>(i) + 1;
        HTermBreakdown b = ctx.breakdown(f);
        b.smoothing = std::exp(-std::pow(double(f) / w.K, out.lambda));
        b.contribution = b.total() * (b.smoothing / std::sqrt(double(f)));
        out.breakdowns[i] = b;
    });

    // Fixed-order reduction so the result does not depend on the thread count.
    ComplexNeumaierSum total, raw;
    NeumaierSum tails;
    for (const auto& b : out.breakdowns) {
        total.add(b.contribution);
        const double sf = std::sqrt(double(b.f));
        raw.add(b.total() / sf);
        out.max_unsmoothed_partial = std::max(out.max_unsmoothed_partial, std::abs(raw.value()));
        for (double t : b.tail) tails.add(t * b.smoothing / sf);
    }
    out.value = total.value();
    out.unsmoothed = raw.value();
    out.tail_total = tails.value();
    out.nu_envelope = w.G / w.K * std::abs(out.value);

    // Abel summation: sum a_f s_f = A(N) s_N + sum_{F<N} A(F)(s_F - s_{F+1}),
    // A(F) the unsmoothed partial sums.
    ComplexNeumaierSum partial, abel;
    const auto& bd = out.breakdowns;
    for (std::size_t i = 0; i < bd.size(); ++i) {
        partial.add(bd[i].total() / std::sqrt(double(bd[i].f)));
        const double next = i + 1 < bd.size() ? bd[i + 1].smoothing : 0.0;
        abel.add(partial.value() * (bd[i].smoothing - next));
    }
    out.abel_resummed = abel.value();
    return out;
}

double main_term_predictor(double K, double G) {
    if (!(K > 1.0) || !(G > 0.0)) throw DomainError("main_term_predictor: need K > 1, G > 0");
    const double lk = std::log(K);
    return 8.0 / 3.0 / (kPi * kSqrtPi) * K * K * K * G * lk * lk * lk;
}

bool in_main_term_range(double K, double G, double eps) {
    if (!(K > 1.0)) return false;
    const double lk = std::log(K);
    return G >= std::sqrt(K) * std::pow(lk, 5) && G <= std::pow(K, 1.0 - eps);
}

double h1_bound_shape(long f, const SpectralWeight& w) {
    const double lk = log_k(w);
    return double(divisor_count(f)) / std::sqrt(double(f)) * w.K * w.K * w.K * w.G * lk * lk;
}

double h5_bound_shape(long f) { return double(divisor_count(f)) / std::sqrt(double(f)); }

double h6_bound_shape(long f, const SpectralWeight& w) {
    return divisor_sigma(Complex(-1.0, 0.0), f).real() * std::sqrt(double(f)) * w.K;
}

void write_breakdowns_csv(std::ostream& os, const std::vector<HTermBreakdown>& rows) {
    os << "f";
    for (int j = 1; j <= 7; ++j) os << ",h" << j << "_re,h" << j << "_im";
    for (int j = 1; j <= 7; ++j) os << ",tail" << j;
    os << ",smoothing,contribution_re,contribution_im\n";
    const auto old_prec = os.precision(17);
    for (const auto& b : rows) {
        os << b.f;
        for (const auto& v : b.h) os << ',' << v.real() << ',' << v.imag();
        for (double t : b.tail) os << ',' << t;
        os << ',' << b.smoothing << ',' << b.contribution.real() << ',' << b.contribution.imag() << '\n';
    }
    os.precision(old_prec);
}

}  // namespace heckesum
