// arith.hpp
//
// Divisor functions d(n) and sigma_a(n) for complex a, sieved tables of them,
// and the partial sums of sigma_{2ir}(f) f^{-1/2-ir}.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heckesum/core.hpp"

namespace heckesum {

inline constexpr std::int64_t kMaxDivisorSieve = 100'000'000;
// A complex sigma table costs 16 bytes per entry; cap it at ~320 MB.
inline constexpr std::int64_t kMaxSigmaSieve = 20'000'000;

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

std::uint64_t divisor_count(std::int64_t n);
Complex divisor_sigma(Complex a, std::int64_t n);

class DivisorTable {
public:
    std::int64_t limit() const { return limit_; }
    // d(n) for 1 <= n <= limit
    std::uint32_t d(std::int64_t n) const { return d_[static_cast<std::size_t>(n)]; }
    bool has_sigma() const { return !sigma_.empty(); }
    Complex sigma_exponent() const { return a_; }
    Complex sigma(std::int64_t n) const { return sigma_[static_cast<std::size_t>(n)]; }
    const std::vector<std::uint16_t>& d_values() const { return d_; }

private:
    friend DivisorTable sieve_divisors(std::int64_t limit, std::optional<Complex> a);
    std::int64_t limit_ = 0;
    std::vector<std::uint16_t> d_;  // index 0 unused
    Complex a_{};
    std::vector<Complex> sigma_;
};

// Linear sieve for d(n), n <= limit; sigma_a(n) as well when `a` is given.
DivisorTable sieve_divisors(std::int64_t limit, std::optional<Complex> a = std::nullopt);

struct PerronResult {
    Complex value;
    double fitted_exponent = 0.0;  // NaN when X < kPerronFitMin
    std::vector<std::int64_t> sample_points;
    std::vector<double> sample_moduli;
};

inline constexpr std::int64_t kPerronFitMin = 100;

// sum_{f <= X} sigma_{2ir}(f) f^{-1/2-ir}, plus the least-squares slope of
// log|partial sum| against log X' over `points` log-spaced X' in [X/100, X].
PerronResult perron_partial_sum(double r, std::int64_t X, int points = 12);

// Truncated Dirichlet series sum_{n <= X} sigma_{2ir}(n) n^{-ir-sigma}.
Complex dirichlet_sigma_sum(double r, double sigma, std::int64_t X);

}  // namespace heckesum
