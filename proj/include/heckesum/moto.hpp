// moto.hpp
//
// Divisor-side expansion of the weighted cubic moment: the seven terms
// H_1..H_7(f; h), the smoothed sum over shifts f, and the predicted main term
// (8/3) pi^{-3/2} K^3 G log^3 K.

#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <vector>

#include "heckesum/arith.hpp"
#include "heckesum/core.hpp"
#include "heckesum/kernels.hpp"

namespace heckesum {

enum class MCapMode {
    Full,       // m <= 2f
    Effective,  // m <= f G^{-2} log^2 K
};

struct HTermBreakdown {
    long f = 0;
    SpectralWeight w;
    std::array<Complex, 7> h{};
    std::array<double, 7> tail{};  // discarded-tail / error estimates, >= 0
    double smoothing = 1.0;        // exp(-(f/K)^lambda)
    Complex contribution;          // f^{-1/2} * smoothing * sum(h)

    Complex total() const;
};

struct MotoOptions {
    MCapMode m_cap_mode = MCapMode::Effective;
    int threads = 1;
    int h3_max_multiple = 50;  // H_3 sums m <= h3_max_multiple * f
    double quad_tol = 1e-9;
};

// Everything that depends only on the weight: hhat'(1/2), hhat''(1/2), h'(-i/2),
// Psi+/Psi- tables, the zeta kernel of H_7 and a divisor table.
class MotoContext {
public:
    MotoContext(const SpectralWeight& w, long f_max, const MotoOptions& opt = {});

    const SpectralWeight& weight() const { return w_; }
    const MotoOptions& options() const { return opt_; }
    long f_max() const { return f_max_; }

    Complex hhat_d1() const { return hhat_d1_; }
    Complex hhat_d2() const { return hhat_d2_; }

    Complex h_term_1(long f, double* tail = nullptr) const;
    Complex h_term_2(long f, MCapMode mode, double* tail = nullptr) const;
    Complex h_term_3(long f, double* tail = nullptr) const;
    Complex h_term_4(long f, double* tail = nullptr) const;
    Complex h_term_5(long f, double* tail = nullptr) const;
    Complex h_term_6(long f) const;
    Complex h_term_7(long f, double* tail = nullptr) const;

    HTermBreakdown breakdown(long f) const;

    double psi_plus(double x) const { return psi_plus_->evaluate(x).value; }
    double psi_minus(double x) const { return psi_minus_->evaluate(x).value; }

    // Window length of H_2 in effective mode.
    long effective_m_cap(long f) const;

private:
    std::uint32_t d(long n) const;
    void require_f(long f) const;

    SpectralWeight w_;
    long f_max_;
    MotoOptions opt_;
    Complex hhat_d1_, hhat_d2_, hprime_;
    std::array<double, 2> hhat_err_{};
    std::unique_ptr<PsiContourTable> psi_plus_, psi_minus_;
    double psi_minus_scale_ = 0.0;
    DivisorTable divisors_;
    // H_7: nodes r_i and weights times |zeta(1/2+ir)|^4 / |zeta(1+2ir)|^2 h(r)
    std::vector<double> h7_nodes_;
    std::vector<double> h7_kronrod_;
    std::vector<double> h7_gauss_;
};

struct CSumResult {
    Complex value;
    std::vector<HTermBreakdown> breakdowns;
    double tail_total = 0.0;        // sum of all per-term tail estimates, weighted as in the sum
    double nu_envelope = 0.0;       // (G/K) |value|: size of the omitted nu >= 1 terms
    Complex unsmoothed;             // the same sum without exp(-(f/K)^lambda)
    double max_unsmoothed_partial = 0.0;  // max_F |sum_{f<=F} f^{-1/2} H(f)|
    Complex abel_resummed;          // value rebuilt from the unsmoothed partial sums
    double lambda = 0.0;
};

// sum_{f <= f_max_mult K} f^{-1/2} exp(-(f/K)^lambda) H(f; h_0), lambda = lambdaC log K.
CSumResult c_sum(const SpectralWeight& w, double lambdaC = 1.0, double f_max_mult = 3.0,
                 const MotoOptions& opt = {});
CSumResult c_sum(const MotoContext& ctx, double lambdaC = 1.0, double f_max_mult = 3.0);

double main_term_predictor(double K, double G);
// K^{1/2} log^5 K <= G <= K^{1-eps}
bool in_main_term_range(double K, double G, double eps = 0.0);

// Shapes of the bounds quoted for the individual terms.
double h1_bound_shape(long f, const SpectralWeight& w);
double h5_bound_shape(long f);
double h6_bound_shape(long f, const SpectralWeight& w);

void write_breakdowns_csv(std::ostream& os, const std::vector<HTermBreakdown>& rows);

}  // namespace heckesum
