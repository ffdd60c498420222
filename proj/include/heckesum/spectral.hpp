// spectral.hpp
//
// Spectral-side sums over Maass cusp forms for SL(2,Z): record ingestion and
// validation, the functional equation of H_j(s), central values H_j(1/2) by an
// approximate functional equation, short-interval and weighted cubic sums, and
// the ratios H_j(1/2)/kappa_j^{1/3} and H_j(1/2)/kappa_j^{1/2}.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heckesum/core.hpp"
#include "heckesum/kernels.hpp"

namespace heckesum {

struct MaassFormRecord {
    double kappa = 0.0;
    int parity = 1;      // +1 even, -1 odd
    double alpha = 0.0;  // |rho(1)|^2 / cosh(pi kappa)
    std::vector<double> hecke;  // hecke[n-1] = t(n), n = 1..n_max, t(1) = 1
    std::optional<double> central_value;

    std::size_t n_max() const { return hecke.size(); }
    double t(std::size_t n) const { return hecke.at(n - 1); }
};

struct Violation {
    std::size_t record = 0;  // index in file order
    double kappa = 0.0;
    std::string kind;  // e.g. "multiplicativity", "hecke-prime", "alpha", "central-value"
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> warnings;
    bool ok() const { return violations.empty(); }
};

struct RecordSet {
    std::vector<MaassFormRecord> records;  // sorted by kappa
    ValidationReport report;
    // kappa range the data claims to list completely ("# complete-range: lo hi")
    std::optional<std::pair<double, double>> complete_range;
    // filled by attach_central_values; parallel to `records`
    std::vector<double> central;
    std::vector<double> central_error;
};

enum class RecordFormat { Csv, Json };

inline constexpr double kHeckeTolerance = 1e-8;

// Invariants of a single record; violations are appended to `report`.
void validate_record(const MaassFormRecord& r, std::size_t index, ValidationReport& report);

// Largest absolute defect of t(m)t(n) = t(mn) and of the prime-power recursion
// over the record; a measure of the noise in tabulated coefficients.
double hecke_defect(const MaassFormRecord& r);

// Parses and validates. With `strict`, any violation raises ValidationError
// naming the offending records; otherwise offending records are dropped and
// listed in the report. Malformed input raises ParseError with line/field.
RecordSet parse_records(const std::string& path, RecordFormat format, bool strict = true);
RecordSet parse_records_text(const std::string& text, RecordFormat format, bool strict = true);
void emit_records(std::ostream& os, const RecordSet& set, RecordFormat format);
RecordFormat record_format_from_path(const std::string& path);

// chi(s) with H(s) = chi(s) H(1-s):
//   2^{2s-1} pi^{2s-2} Gamma(1-s+i kappa) Gamma(1-s-i kappa) (eps cosh(pi kappa) - cos(pi s)).
Complex functional_equation_factor(Complex s, double kappa, int parity);
// The same factor as gamma(1-s)/gamma(s) (times eps for odd forms) from
// gamma(s) = pi^{-s} Gamma((s+d+i kappa)/2) Gamma((s+d-i kappa)/2), d = 0 or 1.
Complex functional_equation_factor_from_gamma(Complex s, double kappa, int parity);

// Smooth cutoff W(y) = (1/2 pi i) int_(1) gamma(1/2+u)/gamma(1/2) y^{-u} du/u.
class AfeWeight {
public:
    // y is limited to |log y| <= log_y_max.
    AfeWeight(double kappa, int parity, double log_y_max);
    ValueWithError operator()(double y) const;

private:
    double log_y_max_;
    std::vector<double> v_, kr_, ga_;
    std::vector<Complex> g_;  // gamma ratio / u at the nodes
};

struct CentralValue {
    double value = 0.0;
    double error_estimate = 0.0;
    double computed = 0.0;        // the AFE value even when a tabulated value exists
    bool tabulated = false;
    double deviation = 0.0;       // |computed - tabulated| when tabulated
};

// H(1/2) = sum_n t(n) n^{-1/2} [W(n/X') + eps W(n X')],  X' = 2 pi X / kappa.
// Exact for every X' > 0; the error estimate covers truncation at n_max,
// quadrature in W, and coefficient noise at the level of hecke_defect(rec). X <= 0 selects X = kappa. Requires n_max >= 4X.
CentralValue hecke_value_half(const MaassFormRecord& rec, double X = 0.0);

// N(T) = T^2/12 - (2T/pi) log(T/(e sqrt(pi/2))) - 131/144
double weyl_count(double T);

struct ShortIntervalResult {
    double value = 0.0;
    double ratio = 0.0;  // value / (G K^{1+eps0})
    std::size_t count = 0;
    double expected_count = 0.0;
    bool density_flag = false;  // |count - expected| > 0.5 expected
    double error_estimate = 0.0;
};

// sum_{K-G <= kappa_j <= K+G} alpha_j H_j(1/2)^power. CoverageError when the
// window leaves the data's complete range.
ShortIntervalResult short_interval_sum(const RecordSet& set, double K, double G, int power = 3, double eps0 = 0.01);

struct WeightedSpectralResult {
    double value = 0.0;
    std::size_t terms = 0;
    double error_estimate = 0.0;
};
// sum_j alpha_j H_j(1/2)^3 h(kappa_j) over the records; CoverageError when
// [K - G log K, K + G log K] leaves the complete range.
WeightedSpectralResult weighted_spectral_sum(const RecordSet& set, const SpectralWeight& w);

struct SubconvexityRow {
    double kappa = 0.0;
    int parity = 1;
    double central_value = 0.0;
    double ratio = 0.0;            // H(1/2) / kappa^{1/3}
    double ratio_convexity = 0.0;  // H(1/2) / kappa^{1/2}
};
double central_value_of(const MaassFormRecord& rec);
// Computes (or copies tabulated) central values for every record once.
void attach_central_values(RecordSet& set, int threads = 1);
SubconvexityRow subconvexity_ratio(const MaassFormRecord& rec);
std::vector<SubconvexityRow> subconvexity_profile(const RecordSet& set, int threads = 1);

// alpha from |rho(1)|^2 for the normalization u = y^{1/2} sum_{n != 0} rho(n) K_{i kappa}(2 pi |n| y) e(nx);
// other tables use other normalizations, so check before converting.
double alpha_from_rho1(double rho1_abs_sq, double kappa);

}  // namespace heckesum
