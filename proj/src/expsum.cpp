#include "heckesum/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "heckesum/arith.hpp"
#include "heckesum/summation.hpp"

namespace heckesum {

namespace {

void check_phase_args(double m, double n, double K) {
    if (!(m >= 0.0) || !(n > m)) throw DomainError("phase: need 0 <= m < n");
    if (!is_finite(K)) throw DomainError("phase: K must be finite");
}

double term_weight(const DivisorTable& t, std::int64_t k) { return t.d(k) / std::sqrt(double(k)); }

Complex block_sum_with(const PhaseGrid& g, const DivisorTable& t, std::int64_t b) {
    const std::int64_t lo = g.N + b * g.N0;
    const std::int64_t hi = std::min(g.N1, lo + g.N0);
    ComplexNeumaierSum s;
    for (std::int64_t n = lo + 1; n <= hi; ++n) {
        const double wn = term_weight(t, n);
        for (std::int64_t m = g.M + 1; m <= g.M1; ++m)
            s.add(wn * term_weight(t, m) * std::polar(1.0, phase(double(m), double(n), g.K)));
    }
    return s.value();
}

void check_budget(const PhaseGrid& g, double budget) {
    const double work = double(g.M1 - g.M) * double(g.N1 - g.N);
    if (work > budget)
        throw CapacityError("model_double_sum: " + std::to_string(work) + " terms exceed the budget of " +
                            std::to_string(budget));
}

}  // namespace

double phase(double m, double n, double K) {
    check_phase_args(m, n, K);
    // log(sqrt(m/(n-m)) + sqrt(n/(n-m))) = asinh(sqrt(m/(n-m)))
    return 2.0 * K * std::asinh(std::sqrt(m / (n - m)));
}

double phase_m_derivative(double m, double n, double K) {
    check_phase_args(m, n, K);
    if (m == 0.0) throw DomainError("phase_m_derivative: need m > 0");
    return K * n / ((n - m) * std::sqrt(m * n));
}

std::int64_t block_size(std::int64_t M, std::int64_t N, double K, double C) {
    if (M < 1 || N < 1) throw DomainError("block_size: M, N must be >= 1");
    if (!(K > 0.0) || !(C > 0.0)) throw DomainError("block_size: K, C must be positive");
    const double v = std::ceil(C * std::pow(double(N), 1.5) * std::sqrt(double(M)) / K);
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(v));
}

std::vector<std::string> GridFlags::violations() const {
    std::vector<std::string> out;
    if (!m_small) out.emplace_back("M > K G^-2 log^2 K");
    if (!n_above_m) out.emplace_back("N < M G^2 log^2 K");
    if (!n_below_k) out.emplace_back("N > K");
    if (!n_above_sqrt_k) out.emplace_back("N < K^(1/2)");
    if (!mn_above_k) out.emplace_back("M N < K");
    if (!n0_fits) out.emplace_back("N0 > N (clamped)");
    return out;
}

PhaseGrid make_phase_grid(std::int64_t M, std::int64_t N, double K, double C, std::int64_t M1, std::int64_t N1,
                          double G) {
    PhaseGrid g;
    g.M = M;
    g.N = N;
    g.M1 = M1 > 0 ? M1 : 2 * M;
    g.N1 = N1 > 0 ? N1 : 2 * N;
    g.K = K;
    g.C = C;
    g.G = G;
    if (M < 1 || N < 1) throw DomainError("PhaseGrid: M, N must be >= 1");
    if (!(g.M1 > M && g.M1 <= 2 * M)) throw DomainError("PhaseGrid: need M < M1 <= 2M");
    if (!(g.N1 > N && g.N1 <= 2 * N)) throw DomainError("PhaseGrid: need N < N1 <= 2N");
    if (g.M1 > N) throw DomainError("PhaseGrid: need M1 <= N so that m < n");
    if (!(K > 0.0) || !is_finite(K)) throw DomainError("PhaseGrid: K must be positive");
    if (G < 0.0) throw DomainError("PhaseGrid: G must be >= 0");

    const std::int64_t raw = block_size(M, N, K, C);
    g.N0 = std::min(raw, N);
    g.flags.n0_fits = raw <= N;
    g.flags.n_below_k = double(N) <= K;
    g.flags.n_above_sqrt_k = double(N) >= std::sqrt(K);
    g.flags.mn_above_k = double(M) * double(N) >= K;
    if (G > 0.0) {
        const double l2 = std::pow(std::log(K), 2);
        g.flags.m_small = double(M) <= K * l2 / (G * G);
        g.flags.n_above_m = double(M) * G * G * l2 <= double(N);
    }
    return g;
}

ExpSumReport inner_difference_sum(std::int64_t n1, std::int64_t n2, const PhaseGrid& g) {
    if (n1 == n2) throw DomainError("inner_difference_sum: need n1 != n2");
    const std::int64_t gap = n1 > n2 ? n1 - n2 : n2 - n1;
    if (gap > g.N0)
        throw BlockViolationError("inner_difference_sum: |n1 - n2| = " + std::to_string(gap) + " exceeds N0 = " +
                                  std::to_string(g.N0));
    if (std::min(n1, n2) <= g.M1) throw DomainError("inner_difference_sum: need n > M1");
    ExpSumReport r;
    ComplexNeumaierSum s;
    for (std::int64_t m = g.M + 1; m <= g.M1; ++m) {
        const double dm = double(m);
        s.add(std::polar(1.0, phase(dm, double(n1), g.K) - phase(dm, double(n2), g.K)));
        const double delta = std::abs(phase_m_derivative(dm, double(n1), g.K) - phase_m_derivative(dm, double(n2), g.K));
        r.premise_max_delta = std::max(r.premise_max_delta, delta);
    }
    r.direct_value = s.value();
    r.bound_value = std::sqrt(double(g.M)) * std::pow(double(g.N), 1.5) / (g.K * double(gap));
    r.implied_constant = std::abs(r.direct_value) / r.bound_value;
    r.block_count = 1;
    r.per_block_max_constant = r.implied_constant;
    r.premise_holds = r.premise_max_delta <= 0.5;
    return r;
}

double max_block_derivative_gap(const PhaseGrid& g, std::int64_t span) {
    if (span < 1) throw DomainError("max_block_derivative_gap: span must be >= 1");
    const double n1 = double(g.N + 1);
    const double n2 = double(std::min(g.N + 1 + span, g.N1));
    double best = 0.0;
    for (std::int64_t m = g.M + 1; m <= g.M1; ++m)
        best = std::max(best, std::abs(phase_m_derivative(double(m), n1, g.K) -
                                       phase_m_derivative(double(m), n2, g.K)));
    return best;
}

Complex block_sum(const PhaseGrid& g, std::int64_t b) {
    if (b < 0 || b >= g.block_count()) throw DomainError("block_sum: block index out of range");
    const auto t = sieve_divisors(g.N1);
    return block_sum_with(g, t, b);
}

double cauchy_schwarz_shape(const PhaseGrid& g, double eps) {
    const double M = double(g.M), N = double(g.N), N0 = double(g.N0);
    return std::pow(g.K, eps) * std::sqrt(M * N0 / N + std::sqrt(M) * N0 * std::sqrt(N) / g.K);
}

double trivial_bound(const PhaseGrid& g) {
    const auto t = sieve_divisors(g.N1);
    NeumaierSum a, b;
    for (std::int64_t m = g.M + 1; m <= g.M1; ++m) a.add(term_weight(t, m));
    for (std::int64_t n = g.N + 1; n <= g.N1; ++n) b.add(term_weight(t, n));
    return a.value() * b.value();
}

ModelSumResult model_double_sum(const PhaseGrid& g, int threads, double work_budget) {
    check_budget(g, work_budget);
    const auto t = sieve_divisors(g.N1);
    ModelSumResult out;
    const std::int64_t nb = g.block_count();
    out.block_sums.assign(static_cast<std::size_t>(nb), Complex(0.0));
    parallel_for(out.block_sums.size(), threads,
                 [&](std::size_t b) { out.block_sums[b] = block_sum_with(g, t, std::int64_t(b)); });
    ComplexNeumaierSum total;
    const double shape = cauchy_schwarz_shape(g);
    for (const Complex& v : out.block_sums) {
        total.add(v);
        out.report.per_block_max_constant = std::max(out.report.per_block_max_constant, std::abs(v) / shape);
    }
    out.value = total.value();
    out.report.direct_value = out.value;
    out.report.block_count = nb;
    out.report.bound_value = double(nb) * shape;
    out.report.implied_constant = std::abs(out.value) / out.report.bound_value;
    return out;
}

Complex model_double_sum_direct(const PhaseGrid& g, double work_budget) {
    check_budget(g, work_budget);
    const auto t = sieve_divisors(g.N1);
    ComplexNeumaierSum s;
    for (std::int64_t n = g.N + 1; n <= g.N1; ++n) {
        const double wn = term_weight(t, n);
        for (std::int64_t m = g.M + 1; m <= g.M1; ++m)
            s.add(wn * term_weight(t, m) * std::polar(1.0, phase(double(m), double(n), g.K)));
    }
    return s.value();
}

WeightedSumResult weighted_sum_31(const SpectralWeight& w, std::int64_t f_max) {
    w.validate();
    if (f_max < 1) throw DomainError("weighted_sum_31: f_max must be >= 1");
    if (double(f_max) > 3.0 * w.K) throw DomainError("weighted_sum_31: need f_max <= 3K");
    const double l2 = std::pow(std::log(w.K), 2);
    const double G2 = w.G * w.G;
    const auto f_lo = static_cast<std::int64_t>(std::ceil(G2 / l2));
    WeightedSumResult out;
    out.damping_constant = std::numeric_limits<double>::infinity();
    if (f_lo > f_max) return out;
    const auto m_top = static_cast<std::int64_t>(std::floor(double(f_max) * l2 / G2));
    const auto t = sieve_divisors(std::max<std::int64_t>(f_max + m_top, 1));
    ComplexNeumaierSum total;
    for (std::int64_t f = std::max<std::int64_t>(f_lo, 1); f <= f_max; ++f) {
        const auto m_cap = static_cast<std::int64_t>(std::floor(double(f) * l2 / G2));
        ComplexNeumaierSum inner;
        for (std::int64_t m = 1; m <= m_cap; ++m) {
            const double x = double(m) / double(f);
            const double logL = std::asinh(std::sqrt(x));  // log(sqrt x + sqrt(1+x))
            const double amp = t.d(m) * double(t.d(m + f)) / std::sqrt(double(m)) * std::exp(-G2 * logL * logL);
            inner.add(std::polar(amp, -2.0 * w.K * logL));
            out.damping_constant = std::min(out.damping_constant, logL * logL / x);
            ++out.terms;
        }
        total.add(inner.value() / std::sqrt(double(f)));
    }
    out.value = w.G * std::pow(w.K, 2.5) * total.value();
    if (out.terms == 0) out.damping_constant = std::numeric_limits<double>::infinity();
    return out;
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
    os << "K,G,M,N,direct_abs,bound,constant\n";
    const auto old = os.precision(17);
    for (const auto& r : rows)
        os << r.K << ',' << r.G << ',' << r.M << ',' << r.N << ',' << r.direct_abs << ',' << r.bound << ','
           << r.constant << '\n';
    os.precision(old);
}

}  // namespace heckesum
