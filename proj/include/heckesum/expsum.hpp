// expsum.hpp
//
// The exponential sums behind the bound for H_2: the weighted sum over shifts,
// the model double sum
//   sum_{M<m<=M1} sum_{N<n<=N1} d(m) m^{-1/2} d(n) n^{-1/2} e^{i F(m,n)},
//   F(m,n) = 2K log(sqrt(m/(n-m)) + sqrt(n/(n-m))),
// its decomposition into n-blocks of length N0, and measured constants for the
// first-derivative and Cauchy-Schwarz estimates.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "heckesum/core.hpp"
#include "heckesum/kernels.hpp"

namespace heckesum {

inline constexpr double kDefaultWorkBudget = 1e9;

double phase(double m, double n, double K);
double phase_m_derivative(double m, double n, double K);

// max(1, ceil(C N^{3/2} M^{1/2} / K))
std::int64_t block_size(std::int64_t M, std::int64_t N, double K, double C = 1.0);

// Size conditions on (M, N) with "<<" read as "<=". The ones involving G are
// only evaluated when the grid carries G > 0.
struct GridFlags {
    bool m_small = true;        // M <= K G^-2 log^2 K
    bool n_above_m = true;      // M G^2 log^2 K <= N
    bool n_below_k = true;      // N <= K
    bool n_above_sqrt_k = true; // N >= K^{1/2}
    bool mn_above_k = true;     // M N >= K
    bool n0_fits = true;        // unclamped N0 <= N

    bool all() const { return m_small && n_above_m && n_below_k && n_above_sqrt_k && mn_above_k && n0_fits; }
    std::vector<std::string> violations() const;
};

struct PhaseGrid {
    std::int64_t M = 0, M1 = 0, N = 0, N1 = 0;
    double K = 0.0;
    std::int64_t N0 = 1;
    double C = 1.0;
    double G = 0.0;  // 0 when unknown
    GridFlags flags;

    std::int64_t block_count() const { return (N1 - N + N0 - 1) / N0; }
};

// M1 = 2M and N1 = 2N when passed as 0. Requires M1 <= N so that m < n throughout.
PhaseGrid make_phase_grid(std::int64_t M, std::int64_t N, double K, double C = 1.0, std::int64_t M1 = 0,
                          std::int64_t N1 = 0, double G = 0.0);

struct ExpSumReport {
    Complex direct_value;
    double bound_value = 0.0;
    double implied_constant = 0.0;  // |direct| / bound
    std::int64_t block_count = 0;
    double per_block_max_constant = 0.0;
    // inner_difference_sum only: max_m |F_m(m,n1) - F_m(m,n2)|
    double premise_max_delta = 0.0;
    bool premise_holds = true;  // premise_max_delta <= 1/2
};

// sum_{M<m<=M1} e^{i(F(m,n1) - F(m,n2))} against M^{1/2} N^{3/2} / (K |n1-n2|).
// Throws BlockViolationError when |n1 - n2| > N0.
ExpSumReport inner_difference_sum(std::int64_t n1, std::int64_t n2, const PhaseGrid& grid);

// max over m in (M, M1] and pairs n1 != n2 in one block with |n1-n2| <= span of
// |F_m(m,n1) - F_m(m,n2)|; by monotonicity the extreme pair is (N+1, N+1+span).
double max_block_derivative_gap(const PhaseGrid& grid, std::int64_t span);

// Sum over one n-block (N + b N0, N + (b+1) N0] intersected with (N, N1].
Complex block_sum(const PhaseGrid& grid, std::int64_t b);

struct ModelSumResult {
    Complex value;
    std::vector<Complex> block_sums;
    ExpSumReport report;  // Cauchy-Schwarz shape per block and for the total
};

// Blocks are evaluated independently (optionally in parallel) and reduced in
// block order. CapacityError when (M1-M)(N1-N) exceeds `work_budget`.
ModelSumResult model_double_sum(const PhaseGrid& grid, int threads = 1, double work_budget = kDefaultWorkBudget);
// Single serial pass over all (m, n); reference for the blocked evaluation.
Complex model_double_sum_direct(const PhaseGrid& grid, double work_budget = kDefaultWorkBudget);

// (M N0 / N + M^{1/2} N0 N^{1/2} / K)^{1/2} K^{eps}: size of one block sum.
double cauchy_schwarz_shape(const PhaseGrid& grid, double eps = 0.0);
// sum_{M<m<=M1} d(m) m^{-1/2} * sum_{N<n<=N1} d(n) n^{-1/2}
double trivial_bound(const PhaseGrid& grid);

struct WeightedSumResult {
    Complex value;
    std::int64_t terms = 0;
    // min over summed (m, f) of log^2 L / (G^2 m/f) * G^2: the C in exp(-C G^2 m/f)
    double damping_constant = 0.0;
};

// G K^{5/2} sum_{G^2/log^2 K <= f <= f_max} f^{-1/2} sum_{m <= f G^-2 log^2 K}
//   m^{-1/2} d(m) d(m+f) L^{-2iK} exp(-G^2 log^2 L),  L = sqrt(m/f) + sqrt(1+m/f).
WeightedSumResult weighted_sum_31(const SpectralWeight& w, std::int64_t f_max);

struct ScanRow {
    double K = 0.0, G = 0.0;
    std::int64_t M = 0, N = 0;
    double direct_abs = 0.0, bound = 0.0, constant = 0.0;
};
void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows);

}  // namespace heckesum
