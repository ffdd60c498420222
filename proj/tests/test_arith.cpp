#include <doctest.h>

#include <cmath>

#include "heckesum/arith.hpp"
#include "heckesum/specfun.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace heckesum;

namespace {
std::uint64_t brute_d(std::int64_t n) {
    std::uint64_t c = 0;
    for (std::int64_t k = 1; k * k <= n; ++k)
        if (n % k == 0) c += (k * k == n) ? 1 : 2;
    return c;
}
}  // namespace

TEST_CASE("factorize and divisor_count") {
    const auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0].first == 2);
    CHECK(f[0].second == 3);
    CHECK(divisor_count(1) == 1);
    CHECK(divisor_count(360) == 24);
    CHECK(divisor_count(999983) == 2);
    CHECK_THROWS_AS(divisor_count(0), DomainError);
}

TEST_CASE("divisor_sigma matches reference value") {
    const auto& c = oracle::sigma_minus_half_3i_n360[0];
    CHECK(rel_err(divisor_sigma(c.arg, 360), c.value) < 1e-13);
    CHECK(divisor_sigma(Complex(0.0), 360) == Complex(24.0));
}

TEST_CASE("sieve agrees with trial division") {
    const auto t = sieve_divisors(5000, Complex(0.0, 2.0));
    for (std::int64_t n = 1; n <= 5000; ++n) {
        CHECK(t.d(n) == brute_d(n));
        if (n % 97 == 0) CHECK(rel_err(t.sigma(n), divisor_sigma(Complex(0.0, 2.0), n)) < 1e-12);
    }
    CHECK_THROWS_AS(sieve_divisors(kMaxSigmaSieve + 1, Complex(0.0, 1.0)), CapacityError);
}

TEST_CASE("Dirichlet sigma sum approaches zeta product") {
    // sigma = 2.5: absolutely convergent with a tail ~ X^{-3/2} log X, so the error must shrink
    const double r = 5.0;
    const Complex want = riemann_zeta(Complex(2.5, -r)) * riemann_zeta(Complex(2.5, r));
    double prev = 1e300;
    for (std::int64_t X : {1000, 10000, 100000}) {
        const double e = rel_err(dirichlet_sigma_sum(r, 2.5, X), want);
        CHECK(e < prev);
        prev = e;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("perron_partial_sum fit needs enough points") {
    const auto small = perron_partial_sum(10.0, 50);
    CHECK(std::isnan(small.fitted_exponent));
    const auto big = perron_partial_sum(1000.0, 1000);
    CHECK(std::isfinite(big.fitted_exponent));
    CHECK(big.sample_points.size() == big.sample_moduli.size());
}
