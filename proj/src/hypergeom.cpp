#include "heckesum/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "heckesum/summation.hpp"

namespace heckesum {

namespace {

// Upper bound on |t_{m+1} / t_m| for every m >= k. Each factor
// (|a| + m)/(Re c + m) and (|b| + m)/(1 + m) is monotone in m and tends to 1,
// so its supremum over m >= k is max(1, value at k).
double ratio_sup(const F21Params& p, int k) {
    const double den_c = p.gamma.real() + k;
    if (den_c <= 0.0) return std::numeric_limits<double>::infinity();
    const double fa = std::max(1.0, (std::abs(p.alpha) + k) / den_c);
    const double fb = std::max(1.0, (std::abs(p.beta) + k) / (1.0 + k));
    return std::abs(p.z) * fa * fb;
}

}  // namespace

F21Result f21_series(const F21Params& p, double tol, int k_cap) {
    if (k_cap < 1) throw DomainError("f21_series: k_cap must be at least 1");
    if (!(tol > 0.0)) throw DomainError("f21_series: tol must be positive");
    if (is_nonpositive_integer(p.gamma)) throw PoleError("f21_series: gamma is a non-positive integer");
    const double az = std::abs(p.z);
    if (!(az < 1.0)) throw DomainError("f21_series: series needs |z| < 1, got |z| = " + std::to_string(az));

    F21Result out;
    ComplexNeumaierSum sum;
    Complex term = 1.0;
    int k = 0;
    for (; k < k_cap; ++k) {
        sum.add(term);
        const Complex next =
            term * (p.alpha + double(k)) * (p.beta + double(k)) / ((p.gamma + double(k)) * double(k + 1)) * p.z;
        term = next;
        if (term == 0.0) {  // terminating series
            out.value = sum.value();
            out.error_estimate = 0.0;
            out.terms = k + 1;
            return out;
        }
        const double q = ratio_sup(p, k + 1);
        if (q < 1.0) {
            const double tail = std::abs(term) / (1.0 - q);
            if (tail <= tol * std::abs(sum.value())) {
                ++k;
                out.value = sum.value();
                out.error_estimate = tail;
                out.terms = k;
                return out;
            }
        }
    }
    out.value = sum.value();
    out.terms = k;
    const double q = ratio_sup(p, k);
    if (q < 1.0) {
        out.error_estimate = std::abs(term) / (1.0 - q);
    } else {
        out.error_estimate = std::abs(term) / (1.0 - az);
        out.bound_rigorous = false;
    }
    return out;
}

double z_param(double x) {
    if (!(x > 0.0)) throw DomainError("z_param: x must be positive");
    const double L = std::sqrt(x) + std::sqrt(1.0 + x);
    const double L2 = L * L;
    return 1.0 / (L2 * L2);
}

Complex quadratic_transform_argument(Complex z) {
    const Complex root = std::sqrt(1.0 - z);
    const Complex w = (1.0 - root) / (1.0 + root);
    return w * w;
}

Complex quadratic_transform(Complex alpha, Complex beta, Complex z, double tol, int k_cap) {
    if (is_nonpositive_integer(2.0 * beta))
        throw PoleError("quadratic_transform: 2*beta is a non-positive integer");
    if (z.imag() == 0.0 && z.real() >= 1.0)
        throw BranchError("quadratic_transform: 1 - z lies on the branch cut of the square root");
    const Complex root = std::sqrt(1.0 - z);
    const Complex w = quadratic_transform_argument(z);
    const Complex prefactor = std::exp(-2.0 * alpha * std::log(0.5 * (1.0 + root)));
    const F21Params p{alpha, alpha - beta + 0.5, beta + 0.5, w};
    return prefactor * f21_series(p, tol, k_cap).value;
}

}  // namespace heckesum
