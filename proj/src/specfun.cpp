#include "heckesum/specfun.hpp"

#include <cmath>
#include <string>

#include "heckesum/summation.hpp"

namespace heckesum {

namespace {

// B_2 .. B_16
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0};

constexpr double kLiftRadius = 12.0;

void require_not_pole(Complex s, const char* what) {
    if (is_nonpositive_integer(s))
        throw PoleError(std::string(what) + ": argument is a non-positive integer (" +
                        std::to_string(s.real()) + ")");
}

// Number of unit steps needed before the asymptotic series is accurate.
int lift_count(Complex s) {
    int n = 0;
    Complex z = s;
    while (z.real() < 0.0 || std::abs(z) < kLiftRadius) {
        z += 1.0;
        ++n;
    }
    return n;
}

Complex stirling_log_gamma(Complex z) {
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    // sum_{k=1}^{5} B_{2k} / (2k (2k-1) z^{2k-1}), Horner in 1/z^2.
    Complex series = kBernoulli[4] / (10.0 * 9.0);
    series = series * inv2 + kBernoulli[3] / (8.0 * 7.0);
    series = series * inv2 + kBernoulli[2] / (6.0 * 5.0);
    series = series * inv2 + kBernoulli[1] / (4.0 * 3.0);
    series = series * inv2 + kBernoulli[0] / (2.0 * 1.0);
    series *= inv;
    return (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi + series;
}

}  // namespace

Complex log_gamma(Complex s) {
    require_not_pole(s, "log_gamma");
    if (!is_finite(s)) throw DomainError("log_gamma: non-finite argument");
    const int n = lift_count(s);
    Complex shift = 0.0;
    for (int k = 0; k < n; ++k) shift += std::log(s + static_cast<double>(k));
    return stirling_log_gamma(s + static_cast<double>(n)) - shift;
}

Complex digamma(Complex s) {
    require_not_pole(s, "digamma");
    const int n = lift_count(s);
    ComplexNeumaierSum shift;
    for (int k = 0; k < n; ++k) shift.add(1.0 / (s + static_cast<double>(k)));
    const Complex z = s + static_cast<double>(n);
    const Complex inv2 = 1.0 / (z * z);
    Complex series = kBernoulli[5] / 12.0;
    for (int k = 4; k >= 0; --k) series = series * inv2 + kBernoulli[k] / (2.0 * (k + 1));
    series *= inv2;
    return std::log(z) - 0.5 / z - series - shift.value();
}

Complex trigamma(Complex s) {
    require_not_pole(s, "trigamma");
    const int n = lift_count(s);
    ComplexNeumaierSum shift;
    for (int k = 0; k < n; ++k) {
        const Complex z = s + static_cast<double>(k);
        shift.add(1.0 / (z * z));
    }
    const Complex z = s + static_cast<double>(n);
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series = kBernoulli[5];
    for (int k = 4; k >= 0; --k) series = series * inv2 + kBernoulli[k];
    series *= inv2 * inv;
    return inv + 0.5 * inv2 + series + shift.value();
}

Complex log_gamma_ratio(Complex s, double r) {
    const Complex a = s + Complex(0.0, r);
    const Complex b = 1.0 - s + Complex(0.0, r);
    if (is_nonpositive_integer(b)) throw PoleError("log_gamma_ratio: denominator at a pole");
    return log_gamma(a) - log_gamma(b);
}

Complex gamma_ratio(Complex s, double r) {
    const Complex a = s + Complex(0.0, r);
    const Complex b = 1.0 - s + Complex(0.0, r);
    if (is_nonpositive_integer(a)) throw PoleError("gamma_ratio: numerator at a pole");
    if (is_nonpositive_integer(b)) return 0.0;
    if (a == b) return 1.0;
    return std::exp(log_gamma(a) - log_gamma(b));
}

Complex complex_cos(Complex s) {
    if (std::abs(s.imag()) > 709.0) throw OverflowError("complex_cos: |Im s| too large for double");
    return std::cos(s);
}

Complex log_cos(Complex s) {
    const double y = s.imag();
    if (std::abs(y) < 20.0) return std::log(std::cos(s));
    // cos s = e^{-i s}(1 + e^{2 i s})/2 for Im s > 0, mirrored below.
    if (y > 0.0) return -kI * s + std::log(1.0 + std::exp(2.0 * kI * s)) - std::log(2.0);
    return kI * s + std::log(1.0 + std::exp(-2.0 * kI * s)) - std::log(2.0);
}

Complex stable_tan(Complex s) {
    if (s.imag() >= 0.0) {
        const Complex q = std::exp(2.0 * kI * s);
        return kI * (1.0 - q) / (1.0 + q);
    }
    const Complex p = std::exp(-2.0 * kI * s);
    return -kI * (1.0 - p) / (1.0 + p);
}

namespace {
GaussMomentTable build_gauss_moment_table() {
    GaussMomentTable t;
    t.c[0][0] = 1.0;
    for (int j = 0; j < kMaxGaussMoment; ++j) {
        // derivative
        for (int k = 1; k <= j; ++k) t.c[j + 1][k - 1] += k * t.c[j][k];
        // (A/2) P_j
        for (int k = 0; k <= j; ++k) t.c[j + 1][k + 1] += 0.5 * t.c[j][k];
    }
    return t;
}
}  // namespace

const GaussMomentTable& gauss_moment_table() {
    static const GaussMomentTable table = build_gauss_moment_table();
    return table;
}

Complex gauss_moment_poly(int j, Complex A) {
    if (j < 0 || j > kMaxGaussMoment)
        throw UnsupportedDegreeError("gauss_moment: degree " + std::to_string(j) + " outside [0, 12]");
    const auto& c = gauss_moment_table().c[j];
    Complex p = c[j];
    for (int k = j - 1; k >= 0; --k) p = p * A + c[k];
    return kSqrtPi * p;
}

Complex gauss_moment(int j, Complex A) {
    return gauss_moment_poly(j, A) * std::exp(0.25 * A * A);
}

Complex pochhammer_ratio(int k, double r) {
    if (k < 0) throw DomainError("pochhammer_ratio: k must be non-negative");
    if (k <= 64) {
        Complex p = 1.0;
        for (int l = 0; l < k; ++l) p *= Complex(0.5 + l, r) / Complex(1.0 + l, r);
        return p;
    }
    ComplexNeumaierSum logp;
    for (int l = 0; l < k; ++l) logp.add(std::log(Complex(0.5 + l, r) / Complex(1.0 + l, r)));
    return std::exp(logp.value());
}

double central_binomial_weight(int k) {
    if (k < 0) throw DomainError("central_binomial_weight: k must be non-negative");
    double w = 1.0;
    for (int i = 0; i < k; ++i) w *= (2.0 * i + 1.0) / (2.0 * i + 2.0);
    return w;
}

std::vector<double> central_binomial_weights(int k_max) {
    if (k_max < 0) throw DomainError("central_binomial_weights: k_max must be non-negative");
    std::vector<double> w(static_cast<std::size_t>(k_max) + 1);
    w[0] = 1.0;
    for (int i = 0; i < k_max; ++i) w[i + 1] = w[i] * (2.0 * i + 1.0) / (2.0 * i + 2.0);
    return w;
}

namespace {

// Euler-Maclaurin for Re s >= 0 (also fine for larger Re s), Im s >= 0.
Complex zeta_euler_maclaurin(Complex s) {
    const double t = std::abs(s.imag());
    const int N = std::max(20, static_cast<int>(std::ceil(2.0 * t)));
    ComplexNeumaierSum sum;
    for (int n = 1; n < N; ++n) sum.add(std::exp(-s * std::log(static_cast<double>(n))));
    const double logN = std::log(static_cast<double>(N));
    const Complex Ns = std::exp(-s * logN);  // N^{-s}
    sum.add(Ns * static_cast<double>(N) / (s - 1.0));
    sum.add(0.5 * Ns);
    // sum_{k=1}^{8} B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
    Complex rising = s;  // s(s+1)...(s+2k-2) for k = 1
    Complex power = Ns / static_cast<double>(N);
    double factorial = 2.0;  // (2k)!
    for (int k = 1; k <= 8; ++k) {
        sum.add(kBernoulli[k - 1] / factorial * rising * power);
        rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        power /= static_cast<double>(N) * N;
        factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return sum.value();
}

}  // namespace

Complex riemann_zeta(Complex s) {
    if (s == Complex(1.0, 0.0)) throw PoleError("riemann_zeta: pole at s = 1");
    if (!is_finite(s)) throw DomainError("riemann_zeta: non-finite argument");
    if (s.imag() < 0.0) return std::conj(riemann_zeta(std::conj(s)));
    if (s.real() >= 0.0) return zeta_euler_maclaurin(s);
    // Functional equation: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s).
    if (s.imag() == 0.0 && s.real() == 2.0 * std::floor(s.real() / 2.0)) return 0.0;  // trivial zeros
    const Complex one_minus = 1.0 - s;
    const Complex log_factor = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_gamma(one_minus);
    // sin(pi s / 2) = cos(pi s/2 - pi/2)
    const Complex log_sin = log_cos(0.5 * kPi * s - 0.5 * kPi);
    return std::exp(log_factor + log_sin) * zeta_euler_maclaurin(one_minus);
}

}  // namespace heckesum
