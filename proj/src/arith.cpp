#include "heckesum/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "heckesum/summation.hpp"

namespace heckesum {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    auto take = [&](std::uint64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    take(2);
    take(3);
    for (std::uint64_t p = 5; p * p <= n; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t divisor_count(std::int64_t n) {
    if (n < 1) throw DomainError("divisor_count: n must be >= 1");
    std::uint64_t d = 1;
    for (auto [p, e] : factorize(static_cast<std::uint64_t>(n))) d *= static_cast<std::uint64_t>(e + 1);
    return d;
}

namespace {
// 1 + q + ... + q^e by Horner; stays accurate when q is close to 1.
Complex prime_power_sigma(Complex q, int e) {
    Complex s = 1.0;
    for (int i = 0; i < e; ++i) s = s * q + 1.0;
    return s;
}
}  // namespace

Complex divisor_sigma(Complex a, std::int64_t n) {
    if (n < 1) throw DomainError("divisor_sigma: n must be >= 1");
    Complex s = 1.0;
    for (auto [p, e] : factorize(static_cast<std::uint64_t>(n)))
        s *= prime_power_sigma(std::exp(a * std::log(static_cast<double>(p))), e);
    return s;
}

DivisorTable sieve_divisors(std::int64_t limit, std::optional<Complex> a) {
    if (limit < 1) throw DomainError("sieve_divisors: limit must be >= 1");
    if (limit > kMaxDivisorSieve)
        throw CapacityError("sieve_divisors: limit " + std::to_string(limit) + " exceeds " +
                            std::to_string(kMaxDivisorSieve));
    if (a && limit > kMaxSigmaSieve)
        throw CapacityError("sieve_divisors: sigma table limit " + std::to_string(limit) + " exceeds " +
                            std::to_string(kMaxSigmaSieve));

    DivisorTable t;
    t.limit_ = limit;
    const auto n = static_cast<std::size_t>(limit);
    t.d_.assign(n + 1, 0);
    std::vector<std::uint8_t> exp_small(n + 1, 0);  // exponent of the smallest prime
    std::vector<std::uint32_t> primes;
    std::vector<std::uint32_t> spf;
    if (a) spf.assign(n + 1, 0);
    t.d_[1] = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        if (t.d_[i] == 0) {
            t.d_[i] = 2;
            exp_small[i] = 1;
            primes.push_back(static_cast<std::uint32_t>(i));
            if (a) spf[i] = static_cast<std::uint32_t>(i);
        }
        for (std::uint32_t p : primes) {
            const std::size_t ip = i * p;
            if (ip > n) break;
            if (a) spf[ip] = p;
            if (i % p == 0) {
                exp_small[ip] = static_cast<std::uint8_t>(exp_small[i] + 1);
                t.d_[ip] = static_cast<std::uint16_t>(t.d_[i] / (exp_small[i] + 1) * (exp_small[i] + 2));
                break;
            }
            exp_small[ip] = 1;
            t.d_[ip] = static_cast<std::uint16_t>(t.d_[i] * 2);
        }
    }
    if (a) {
        t.a_ = *a;
        t.sigma_.assign(n + 1, Complex(0.0));
        t.sigma_[1] = 1.0;
        for (std::size_t i = 2; i <= n; ++i) {
            const std::uint32_t p = spf[i];
            std::size_t m = i;
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            t.sigma_[i] = t.sigma_[m] * prime_power_sigma(std::exp(*a * std::log(double(p))), e);
        }
    }
    return t;
}

namespace {

std::vector<std::int64_t> log_spaced_points(std::int64_t lo, std::int64_t hi, int points) {
    std::vector<std::int64_t> out;
    for (int i = 0; i < points; ++i) {
        const double t = points == 1 ? 1.0 : double(i) / (points - 1);
        const auto v = static_cast<std::int64_t>(std::llround(std::exp(std::log(double(lo)) * (1 - t) +
                                                                       std::log(double(hi)) * t)));
        if (out.empty() || v > out.back()) out.push_back(std::min(v, hi));
    }
    return out;
}

}  // namespace

PerronResult perron_partial_sum(double r, std::int64_t X, int points) {
    if (X < 1) throw DomainError("perron_partial_sum: X must be >= 1");
    if (points < 8) throw DomainError("perron_partial_sum: need at least 8 sample points");
    PerronResult out;
    const auto table = sieve_divisors(X, Complex(0.0, 2.0 * r));
    std::vector<std::int64_t> samples;
    if (X >= kPerronFitMin) samples = log_spaced_points(std::max<std::int64_t>(X / 100, 1), X, points);
    ComplexNeumaierSum sum;
    std::size_t next = 0;
    for (std::int64_t f = 1; f <= X; ++f) {
        const double lf = std::log(double(f));
        sum.add(table.sigma(f) * std::exp(Complex(-0.5 * lf, -r * lf)));
        if (next < samples.size() && samples[next] == f) {
            out.sample_points.push_back(f);
            out.sample_moduli.push_back(std::abs(sum.value()));
            ++next;
        }
    }
    out.value = sum.value();
    if (out.sample_points.size() < 2) {
        out.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    // least squares slope of log|S| on log X'
    const std::size_t m = out.sample_points.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double lx = std::log(double(out.sample_points[i]));
        const double ly = std::log(out.sample_moduli[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    out.fitted_exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return out;
}

Complex dirichlet_sigma_sum(double r, double sigma, std::int64_t X) {
    if (X < 1) throw DomainError("dirichlet_sigma_sum: X must be >= 1");
    const auto table = sieve_divisors(X, Complex(0.0, 2.0 * r));
    ComplexNeumaierSum sum;
    for (std::int64_t n = 1; n <= X; ++n) {
        const double ln = std::log(double(n));
        sum.add(table.sigma(n) * std::exp(Complex(-sigma * ln, -r * ln)));
    }
    return sum.value();
}

}  // namespace heckesum
