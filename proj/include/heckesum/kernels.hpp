// kernels.hpp
//
// The spectral weight h_nu(r), its transform
//   hhat(s) = int r h(r) Gamma(s+ir)/Gamma(1-s+ir) dr,
// and the oscillatory kernels
//   Psi+(x) = int_(beta) Gamma(1/2-s)^2 tan(pi s) hhat(s) x^s ds,
//   Psi-(x) = int_(beta) Gamma(1/2-s)^2 hhat(s) / cos(pi s) x^s ds,
// each computed along two independent routes: the vertical-line integral,
// and the hypergeometric (Psi+) or double-integral (Psi-) representation.
//
// Line integrals are taken with ds = i dt and no 1/(2 pi i); see
// kContourNormalization for the constant that matches the hypergeometric form.

#pragma once

#include <optional>
#include <vector>

#include "heckesum/core.hpp"
#include "heckesum/quadrature.hpp"

namespace heckesum {

struct SpectralWeight {
    double K = 100.0;
    double G = 10.0;
    int nu = 0;

    void validate() const;
    // K^eps <= G <= K
    bool in_theorem_range(double eps) const;
    // Radius of each Gaussian window around +-K that is integrated numerically.
    double window_radius() const;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};
// Integration windows around -K and +K (merged into one when they overlap).
std::vector<Interval> weight_windows(const SpectralWeight& w);

Complex weight_eval(const SpectralWeight& w, Complex r);
double weight_real(const SpectralWeight& w, double r);
Complex weight_derivative_at_minus_i_half(const SpectralWeight& w);

struct ContourSpec {
    double beta = -0.25;
    double t_max = 0.0;  // <= 0 selects the default height for the kernel
    double quad_tol = 1e-9;
};

enum class PsiKind { Plus, Minus };

// Default line and height: beta = -1/4 (Psi+) or -5/4 (Psi-);
// height max(log^2 K, 6K/G) for Psi+, max(log^2 K, 14) for Psi-.
ContourSpec default_contour(const SpectralWeight& w, PsiKind kind);
double default_t_max(const SpectralWeight& w, PsiKind kind);

// Constant c with Psi(x) = c * (integral over the line with ds = i dt).
// Chosen so that the line integral agrees with the hypergeometric form of Psi+.
extern const double kContourNormalization;

struct ValueWithError {
    double value = 0.0;
    double error = 0.0;
};
struct ComplexWithError {
    Complex value;
    double error = 0.0;
};

ComplexWithError h_hat_detailed(Complex s, const SpectralWeight& w, int d_order, double quad_tol = 1e-9);
Complex h_hat(Complex s, const SpectralWeight& w, int d_order, double quad_tol = 1e-9);

// Tabulated vertical-line integrand for Psi+ or Psi-: coefficients
// c(t) = Gamma(1/2-s)^2 {tan(pi s) | 1/cos(pi s)} hhat(s) at s = beta + i t on a
// composite Gauss-Kronrod grid in t, so that Psi(x) for many x costs one
// weighted sum each. `log_x_max` bounds |log x| for the x values to be used.
class PsiContourTable {
public:
    PsiContourTable(const SpectralWeight& w, PsiKind kind, const ContourSpec& c, double log_x_max = 10.0,
                    int threads = 1);

    ValueWithError evaluate(double x) const;
    const SpectralWeight& weight() const { return w_; }
    PsiKind kind() const { return kind_; }
    double beta() const { return beta_; }
    double t_max() const { return t_max_; }
    double log_x_max() const { return log_x_max_; }
    std::size_t size() const { return rule_.size(); }

private:
    SpectralWeight w_;
    PsiKind kind_;
    double beta_;
    double t_max_;
    double log_x_max_;
    quad::PanelRule rule_;
    std::vector<Complex> coef_;
    std::vector<double> coef_err_;
    double tail_estimate_ = 0.0;
};

// Throws PoleError when beta is within 1e-3 of an integer or half-integer,
// RegimeError when beta is outside the legal strip for `kind`.
void check_contour_beta(double beta, PsiKind kind, bool minus_double_integral = false);

double psi_plus_contour(double x, const SpectralWeight& w, const ContourSpec& c);
ValueWithError psi_plus_contour_detailed(double x, const SpectralWeight& w, const ContourSpec& c);

// Hypergeometric route; 0 < x <= 0.05. k_cap <= 0 selects ceil(sqrt(K) log^2 K).
ValueWithError psi_plus_hyper_detailed(double x, const SpectralWeight& w, int k_cap = 0);
double psi_plus_hyper(double x, const SpectralWeight& w);

int default_k_cap(const SpectralWeight& w);

// I_k over the positive window, for one k or for all k <= k_max on a shared grid.
Complex i_k(int k, double x, const SpectralWeight& w);
std::vector<Complex> i_k_all(int k_max, double x, const SpectralWeight& w);

// Series form: 2 * 4 pi sqrt(x)/(sqrt x + sqrt(1+x)) sum_k w_k z^k Re I_k, the
// factor 2 accounting for the mirrored window around -K.
double psi_plus_series(double x, const SpectralWeight& w, int k_cap = 0);

// Leading stationary term of I_0:
//   pi e^{-i pi/4} G K^{5/2} L^{-2iK} exp(-G^2 log^2 L),  L = sqrt(x)+sqrt(1+x).
Complex i0_leading(double x, const SpectralWeight& w);
// Same, with the amplitude (K+Gu)^{1/2}((K+Gu)^2+1/4) expanded to u^order and
// integrated exactly by Gaussian moments (order <= 12).
Complex i0_moment_expansion(double x, const SpectralWeight& w, int order);

// Psi-: the line integral is the primary route (0 < x, including x = 1).
double psi_minus(double x, const SpectralWeight& w, const ContourSpec& c);
ValueWithError psi_minus_detailed(double x, const SpectralWeight& w, const ContourSpec& c);

// r-integral  int r h(r) (y/(y+1))^{ir} dr  in closed form via Gaussian moments.
Complex psi_minus_r_integral(double y, const SpectralWeight& w);
// Its positive-window part by direct quadrature, and the two-term stationary
// form  sqrt(pi) G K^3 e^{iKL} e^{-G^2 L^2/4} (1 + 3 i G^2 L / (2K)),  L = log(y/(y+1)).
Complex psi_minus_r_integral_positive_quadrature(double y, const SpectralWeight& w);
Complex psi_minus_r_integral_leading(double y, const SpectralWeight& w);

// Double-integral route for 0 < x < 1 and -3/2 < beta < -1/2.
ValueWithError psi_minus_double_integral(double x, const SpectralWeight& w, const ContourSpec& c);

// int_{G/log K}^{inf} (y^2+y)^{beta-1} e^{iF(y)} e^{-G^2 log^2(y/(y+1))/4} dy with
// F(y) = t log(y(y+1)) + K log(y/(y+1)).
Complex ibp_integral(double beta, double t, const SpectralWeight& w);

}  // namespace heckesum
