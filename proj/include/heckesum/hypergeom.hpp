// hypergeom.hpp
//
// Gauss hypergeometric series 2F1 with a rigorous tail bound, the map
// x -> (sqrt(x) + sqrt(1+x))^{-4}, and the quadratic transformation
// F(a, b; 2b; z) = ((1+sqrt(1-z))/2)^{-2a} F(a, a-b+1/2; b+1/2; w(z)).

#pragma once

#include "heckesum/core.hpp"

namespace heckesum {

struct F21Params {
    Complex alpha;
    Complex beta;
    Complex gamma;
    Complex z;
};

struct F21Result {
    Complex value;
    double error_estimate = 0.0;  // bound on the discarded tail
    int terms = 0;                // number of terms summed
    bool bound_rigorous = true;   // false when the cap was hit before the ratio bound dropped below 1
};

inline constexpr double kF21DefaultTol = 1e-12;
inline constexpr int kF21DefaultCap = 100000;

F21Result f21_series(const F21Params& p, double tol = kF21DefaultTol, int k_cap = kF21DefaultCap);

// (sqrt(x) + sqrt(1+x))^{-4}
double z_param(double x);

// Argument of the transformed series: ((1 - sqrt(1-z)) / (1 + sqrt(1-z)))^2.
Complex quadratic_transform_argument(Complex z);

// Right-hand side of the quadratic transformation, i.e. the continuation of
// F(alpha, beta; 2 beta; z) to z off the cut [1, inf).
Complex quadratic_transform(Complex alpha, Complex beta, Complex z, double tol = kF21DefaultTol,
                            int k_cap = kF21DefaultCap);

}  // namespace heckesum
