// specfun.hpp
//
// Complex special functions: log-gamma, digamma, trigamma, gamma ratios,
// Riemann zeta, Gaussian moment integrals and the small Pochhammer/binomial
// helpers used by the hypergeometric expansions.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "heckesum/core.hpp"

namespace heckesum {

// Principal branch of log Gamma(s), continuous off the negative real axis.
Complex log_gamma(Complex s);
Complex digamma(Complex s);
Complex trigamma(Complex s);

// Gamma(s + i r) / Gamma(1 - s + i r), evaluated in log space. Returns 0 when
// the denominator sits on a pole.
Complex gamma_ratio(Complex s, double r);
// log of the same ratio (principal-branch pieces); throws PoleError if the
// denominator is at a pole.
Complex log_gamma_ratio(Complex s, double r);

// cos(s); throws OverflowError once cosh(Im s) leaves the double range.
Complex complex_cos(Complex s);
// A logarithm of cos(s) that stays finite for any Im s (branch unspecified,
// meant to be exponentiated after combining with other large exponents).
Complex log_cos(Complex s);
// tan(s) without overflow for large |Im s|.
Complex stable_tan(Complex s);

inline constexpr int kMaxGaussMoment = 12;

// Coefficients of P_j(A) = sum_k c_{j,k} A^k / sqrt(pi), from the recurrence
// P_{j+1} = P_j' + (A/2) P_j, P_0 = sqrt(pi). All entries are dyadic
// rationals and therefore exact in double precision.
struct GaussMomentTable {
    std::array<std::array<double, kMaxGaussMoment + 1>, kMaxGaussMoment + 1> c{};
};
const GaussMomentTable& gauss_moment_table();

// P_j(A) alone, and the full moment int u^j exp(A u - u^2) du = P_j(A) e^{A^2/4}.
Complex gauss_moment_poly(int j, Complex A);
Complex gauss_moment(int j, Complex A);

// (1/2 + i r)_k / (1 + i r)_k.
Complex pochhammer_ratio(int k, double r);

// (1/2)_k / k! = (2k)! / (4^k (k!)^2).
double central_binomial_weight(int k);
std::vector<double> central_binomial_weights(int k_max);

Complex riemann_zeta(Complex s);

}  // namespace heckesum
