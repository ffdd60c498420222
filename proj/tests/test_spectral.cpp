#include <doctest.h>

#include <sstream>

#include "heckesum/quadrature.hpp"
#include "heckesum/specfun.hpp"
#include "heckesum/spectral.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace heckesum;

namespace {

const RecordSet& fixture() {
    static const RecordSet set = [] {
        auto s = parse_records(HECKESUM_FIXTURE, RecordFormat::Csv);
        attach_central_values(s, 1);
        return s;
    }();
    return set;
}

MaassFormRecord single_term(double kappa, int parity, std::size_t n_max) {
    MaassFormRecord r;
    r.kappa = kappa;
    r.parity = parity;
    r.alpha = 1.0;
    r.hecke.assign(n_max, 0.0);
    r.hecke[0] = 1.0;
    return r;
}

}  // namespace

TEST_CASE("empty file gives empty set") {
    const auto s = parse_records_text("", RecordFormat::Csv);
    CHECK(s.records.empty());
    CHECK(s.report.ok());
    CHECK(parse_records_text("[]", RecordFormat::Json).records.empty());
}

TEST_CASE("malformed input names line and field") {
    const std::string bad = "kappa,parity,alpha,central_value,t_2\n10,1,abc,,0.5\n";
    try {
        parse_records_text(bad, RecordFormat::Csv);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 2") != std::string::npos);
        CHECK(msg.find("alpha") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_records_text("kappa,parity\n", RecordFormat::Csv), ParseError);
    CHECK_THROWS_AS(parse_records_text("{", RecordFormat::Json), ParseError);
}

TEST_CASE("constructed multiplicativity violation is flagged") {
    // t(2) = 1.5, t(3) = 0.5, t(6) = 0.2 != 0.75
    std::ostringstream os;
    os << "kappa,parity,alpha,central_value,t_2,t_3,t_4,t_5,t_6\n";
    os << "10,1,1,,1.5,0.5,1.25,0,0.2\n";
    CHECK_THROWS_AS(parse_records_text(os.str(), RecordFormat::Csv), ValidationError);
    const auto lenient = parse_records_text(os.str(), RecordFormat::Csv, false);
    CHECK(lenient.records.empty());
    REQUIRE(lenient.report.violations.size() == 1);
    CHECK(lenient.report.violations[0].kind == "multiplicativity");
}

TEST_CASE("prime relation and sign violations are flagged") {
    ValidationReport rep;
    auto r = single_term(10.0, 1, 4);  // t(2)^2 - t(4) = 0, not 1
    validate_record(r, 0, rep);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].kind == "hecke-prime");
    ValidationReport rep2;
    auto q = single_term(10.0, 2, 1);
    q.alpha = -1.0;
    q.central_value = -0.1;
    validate_record(q, 3, rep2);
    CHECK(rep2.violations.size() == 3);
}

TEST_CASE("emit then parse reproduces the fixture") {
    const auto& set = fixture();
    for (auto fmt : {RecordFormat::Csv, RecordFormat::Json}) {
        std::ostringstream os;
        emit_records(os, set, fmt);
        const auto back = parse_records_text(os.str(), fmt);
        REQUIRE(back.records.size() == set.records.size());
        CHECK(back.complete_range == set.complete_range);
        for (std::size_t i = 0; i < set.records.size(); ++i) {
            const auto& a = set.records[i];
            const auto& b = back.records[i];
            CHECK(a.kappa == b.kappa);
            CHECK(a.parity == b.parity);
            CHECK(a.alpha == b.alpha);
            CHECK(a.central_value == b.central_value);
            CHECK(a.hecke == b.hecke);
        }
    }
}

TEST_CASE("functional equation factor matches reference values") {
    for (const auto& c : oracle::chi)
        CHECK(rel_err(functional_equation_factor(c.s, c.kappa, c.parity), c.value) < 1e-11);
}

TEST_CASE("functional equation factor identities") {
    for (double kappa : {9.5, 13.78, 29.0})
        for (int eps : {1, -1}) {
            CHECK(std::abs(functional_equation_factor(0.5, kappa, eps) - double(eps)) < 1e-10);
            for (Complex s : {Complex(0.2, 3.0), Complex(0.9, -1.5), Complex(-0.4, 0.7)}) {
                const Complex prod =
                    functional_equation_factor(s, kappa, eps) * functional_equation_factor(1.0 - s, kappa, eps);
                CHECK(std::abs(prod - 1.0) < 1e-10);
                CHECK(rel_err(functional_equation_factor(s, kappa, eps),
                              functional_equation_factor_from_gamma(s, kappa, eps)) < 1e-10);
            }
        }
    CHECK_THROWS_AS(functional_equation_factor(Complex(1.0, 10.0), 10.0, 1), PoleError);
}

TEST_CASE("AFE weight matches direct integration") {
    for (const auto& c : oracle::afe_weight) {
        const AfeWeight W(c.kappa, c.parity, 6.0);
        const auto v = W(c.y);
        CHECK(std::abs(v.value - c.value) < 1e-11);
    }
}

TEST_CASE("single-term record") {
    // W(1/X') + W(X') -> 1 as X' grows, with a correction of order X'^{-1/2}
    const auto r = single_term(20.0, 1, 1000);
    const double near = std::abs(hecke_value_half(r, 50.0).value - 1.0);
    const double far = std::abs(hecke_value_half(r, 200.0).value - 1.0);
    CHECK(far < near);
    CHECK(far < 0.02);
    CHECK_THROWS_AS(hecke_value_half(single_term(20.0, 1, 50), 20.0), InsufficientDataError);
}

TEST_CASE("central values: AFE against the tabulated values") {
    for (const auto& r : fixture().records) {
        const auto cv = hecke_value_half(r);
        REQUIRE(cv.tabulated);
        CHECK(cv.deviation <= 3.0 * cv.error_estimate);
        // the result must not depend on the split point
        const auto other = hecke_value_half(r, 0.6 * r.kappa);
        CHECK(std::abs(other.computed - cv.computed) <= cv.error_estimate + other.error_estimate);
        if (r.parity < 0) CHECK(std::abs(cv.computed) <= cv.error_estimate);
    }
}

TEST_CASE("Weyl count") {
    CHECK(weyl_count(0.0) == 0.0);
    const double n = weyl_count(30.0);
    const auto& set = fixture();
    CHECK(std::abs(double(set.records.size()) - n) < 4.0);
}

TEST_CASE("short-interval sums") {
    const auto& set = fixture();
    const auto empty = short_interval_sum(set, 11.0, 0.5);
    CHECK(empty.value == 0.0);
    CHECK(empty.count == 0);
    const auto a = short_interval_sum(set, 15.0, 5.0);
    const auto b = short_interval_sum(set, 25.0, 5.0);
    const auto ab = short_interval_sum(set, 20.0, 10.0);
    CHECK(a.value >= 0.0);
    CHECK(b.value >= 0.0);
    CHECK(std::abs(a.value + b.value - ab.value) <= 1e-12 * ab.value);
    CHECK(a.count + b.count == ab.count);
    CHECK_THROWS_AS(short_interval_sum(set, 29.0, 5.0), CoverageError);
}

TEST_CASE("weighted spectral sum") {
    const auto& set = fixture();
    const SpectralWeight w{19.5, 3.0, 0};
    const auto r = weighted_spectral_sum(set, w);
    double want = 0.0;
    for (std::size_t i = 0; i < set.records.size(); ++i)
        want += set.records[i].alpha * std::pow(set.central[i], 3) * weight_real(w, set.records[i].kappa);
    CHECK(r.value == doctest::Approx(want).epsilon(1e-12));
    CHECK(r.value >= 0.0);
    CHECK_THROWS_AS(weighted_spectral_sum(set, SpectralWeight{25.0, 4.0, 0}), CoverageError);
}

TEST_CASE("subconvexity ratios") {
    const auto rows = subconvexity_profile(fixture());
    REQUIRE(rows.size() == fixture().records.size());
    for (const auto& row : rows) {
        CHECK(row.ratio <= row.ratio_convexity * std::pow(row.kappa, 1.0 / 6.0) * (1 + 1e-14) + 1e-300);
        if (row.parity < 0) CHECK(row.central_value == 0.0);
    }
}

TEST_CASE("alpha normalization: Kuznetsov formula with a window away from the edges") {
    // sum_j alpha_j h(kappa_j) + pi^{-1} int h(r) |zeta(1+2ir)|^{-2} dr = pi^{-2} int r tanh(pi r) h(r) dr
    // up to the Kloosterman terms, which are exponentially small for a window at kappa = 20.
    const double K = 20.0, G = 3.0;
    auto h = [&](double r) { return std::exp(-std::pow((r - K) / G, 2)) + std::exp(-std::pow((r + K) / G, 2)); };
    double spectral = 0.0;
    for (const auto& r : fixture().records) spectral += r.alpha * h(r.kappa);
    quad::Options opt;
    opt.rel_tol = 1e-10;
    const double top = K + 8 * G;
    const double diag =
        2.0 * quad::integrate([&](double r) { return r * std::tanh(kPi * r) * h(r); }, 0.0, top, opt, 16).value /
        (kPi * kPi);
    const double eis =
        2.0 *
        quad::integrate([&](double r) { return h(r) / std::norm(riemann_zeta(Complex(1.0, 2.0 * r))); }, 1e-9, top,
                        opt, 16)
            .value /
        kPi;
    CHECK(std::abs(spectral - (diag - eis)) <= 1e-4 * spectral);
}
