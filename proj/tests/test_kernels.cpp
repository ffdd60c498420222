#include <doctest.h>

#include "heckesum/kernels.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace heckesum;

TEST_CASE("SpectralWeight validation") {
    CHECK_THROWS_AS((SpectralWeight{-1.0, 1.0, 0}.validate()), DomainError);
    CHECK_THROWS_AS((SpectralWeight{10.0, 0.0, 0}.validate()), DomainError);
    CHECK((SpectralWeight{100.0, 10.0, 0}.in_theorem_range(0.1)));
    CHECK_FALSE((SpectralWeight{100.0, 200.0, 0}.in_theorem_range(0.1)));
}

TEST_CASE("weight is even and peaks near K") {
    const SpectralWeight w{50.0, 5.0, 0};
    CHECK(weight_real(w, 50.0) == doctest::Approx(weight_real(w, -50.0)));
    CHECK(weight_real(w, 50.0) > weight_real(w, 45.0));
    CHECK(std::abs(weight_eval(w, Complex(50.0, 0.0)) - weight_real(w, 50.0)) < 1e-9);
}

TEST_CASE("h_hat matches direct integration") {
    for (const auto& c : oracle::h_hat) {
        const SpectralWeight w{c.K, c.G, 0};
        CHECK(rel_err(h_hat(c.s, w, 0), c.value) < 1e-8);
    }
}

TEST_CASE("h_hat vanishes at one half") {
    for (double K : {20.0, 60.0, 150.0}) {
        const SpectralWeight w{K, K / 8.0, 0};
        const double scale = std::abs(h_hat(Complex(0.75), w, 0));
        CHECK(std::abs(h_hat(Complex(0.5), w, 0)) <= 1e-9 * scale);
    }
}

TEST_CASE("contour abscissa is checked") {
    CHECK_THROWS_AS(check_contour_beta(-0.5, PsiKind::Plus), PoleError);
    CHECK_THROWS_AS(check_contour_beta(-0.5004, PsiKind::Plus), PoleError);
    CHECK_THROWS_AS(check_contour_beta(0.7, PsiKind::Plus), RegimeError);
    CHECK_NOTHROW(check_contour_beta(-0.25, PsiKind::Plus));
    CHECK_NOTHROW(check_contour_beta(-1.25, PsiKind::Minus, true));
}

TEST_CASE("Psi+ contour and hypergeometric routes agree") {
    const SpectralWeight w{40.0, 6.0, 0};
    const auto c = default_contour(w, PsiKind::Plus);
    for (double x : {0.005, 0.03}) {
        const auto a = psi_plus_contour_detailed(x, w, c);
        const auto b = psi_plus_hyper_detailed(x, w);
        CHECK(std::abs(a.value - b.value) <= 1e-8 * std::abs(b.value));
    }
    CHECK_THROWS_AS(psi_plus_hyper(0.2, w), RegimeError);
}

TEST_CASE("Psi+ table reproduces direct contour values") {
    const SpectralWeight w{20.0, 4.0, 0};
    const auto c = default_contour(w, PsiKind::Plus);
    const PsiContourTable table(w, PsiKind::Plus, c, 6.0);
    for (double x : {0.004, 0.02, 0.5}) {
        const auto direct = psi_plus_contour_detailed(x, w, c);
        const auto tab = table.evaluate(x);
        CHECK(std::abs(tab.value - direct.value) <= direct.error + tab.error);
    }
    CHECK_THROWS_AS(table.evaluate(1e-4), RegimeError);
}

TEST_CASE("Psi- contour and double-integral routes agree") {
    const SpectralWeight w{20.0, 10.0, 0};
    const auto c = default_contour(w, PsiKind::Minus);
    for (double x : {0.2, 0.7}) {
        const auto a = psi_minus_detailed(x, w, c);
        const auto b = psi_minus_double_integral(x, w, c);
        CHECK(std::abs(a.value - b.value) <= 1e-7 * std::abs(b.value));
    }
}

TEST_CASE("Psi- r-integral: closed form vs quadrature") {
    const SpectralWeight w{30.0, 5.0, 0};
    for (double y : {0.3, 2.0}) {
        const Complex closed = psi_minus_r_integral(y, w);
        const Complex quad = psi_minus_r_integral_positive_quadrature(y, w);
        // r -> -r maps the window at -K onto minus the conjugate of the one at +K
        CHECK(std::abs(closed - (quad - std::conj(quad))) <= 1e-8 * std::abs(closed));
    }
}
