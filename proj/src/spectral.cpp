#include "heckesum/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "heckesum/quadrature.hpp"
#include "heckesum/specfun.hpp"
#include "heckesum/summation.hpp"

namespace heckesum {

namespace {

using json = nlohmann::json;

std::string fmt17(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(line);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& field, std::size_t line, const std::string& name) {
    const std::string t = trim(field);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (t.empty() || used != t.size())
        throw ParseError("line " + std::to_string(line) + ", field '" + name + "': not a number: '" + t + "'");
    return v;
}

void add_violation(ValidationReport& rep, std::size_t index, const MaassFormRecord& r, std::string kind,
                   std::string detail) {
    rep.violations.push_back({index, r.kappa, std::move(kind), std::move(detail)});
}

std::vector<std::size_t> primes_up_to(std::size_t n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<std::size_t> p;
    for (std::size_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        p.push_back(i);
        for (std::size_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return p;
}

RecordSet finish(std::vector<MaassFormRecord> records, std::optional<std::pair<double, double>> range, bool strict) {
    RecordSet set;
    set.complete_range = range;
    std::set<std::size_t> bad;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const std::size_t before = set.report.violations.size();
        validate_record(records[i], i, set.report);
        if (set.report.violations.size() > before) bad.insert(i);
    }
    if (strict && !bad.empty()) {
        std::string msg = "invalid records:";
        for (const auto& v : set.report.violations)
            msg += "\n  record " + std::to_string(v.record) + " (kappa " + fmt17(v.kappa) + "): " + v.kind + ": " +
                   v.detail;
        throw ValidationError(msg);
    }
    for (std::size_t i = 0; i < records.size(); ++i)
        if (!bad.count(i)) set.records.push_back(std::move(records[i]));
    std::stable_sort(set.records.begin(), set.records.end(),
                     [](const MaassFormRecord& a, const MaassFormRecord& b) { return a.kappa < b.kappa; });
    return set;
}

RecordSet parse_csv(const std::string& text, bool strict) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    std::optional<std::pair<double, double>> range;
    std::vector<MaassFormRecord> records;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            const std::string key = "complete-range:";
            const auto pos = t.find(key);
            if (pos != std::string::npos) {
                std::istringstream rs(t.substr(pos + key.size()));
                double lo = 0, hi = 0;
                if (!(rs >> lo >> hi) || !(hi >= lo))
                    throw ParseError("line " + std::to_string(line_no) + ": malformed complete-range");
                range = std::make_pair(lo, hi);
            }
            continue;
        }
        const auto fields = split(t, ',');
        if (header.empty()) {
            for (const auto& f : fields) header.push_back(trim(f));
            const std::vector<std::string> lead = {"kappa", "parity", "alpha", "central_value"};
            if (header.size() < lead.size() || !std::equal(lead.begin(), lead.end(), header.begin()))
                throw ParseError("line " + std::to_string(line_no) +
                                 ": header must start with kappa,parity,alpha,central_value");
            for (std::size_t j = lead.size(); j < header.size(); ++j)
                if (header[j] != "t_" + std::to_string(j - lead.size() + 2))
                    throw ParseError("line " + std::to_string(line_no) + ": expected column t_" +
                                     std::to_string(j - lead.size() + 2) + ", got '" + header[j] + "'");
            continue;
        }
        if (fields.size() != header.size())
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                             " fields, got " + std::to_string(fields.size()));
        MaassFormRecord r;
        r.kappa = parse_number(fields[0], line_no, "kappa");
        const double par = parse_number(fields[1], line_no, "parity");
        r.parity = static_cast<int>(par);
        if (double(r.parity) != par)
            throw ParseError("line " + std::to_string(line_no) + ", field 'parity': not an integer");
        r.alpha = parse_number(fields[2], line_no, "alpha");
        if (!trim(fields[3]).empty()) r.central_value = parse_number(fields[3], line_no, "central_value");
        r.hecke.push_back(1.0);
        for (std::size_t j = 4; j < fields.size(); ++j) r.hecke.push_back(parse_number(fields[j], line_no, header[j]));
        records.push_back(std::move(r));
    }
    return finish(std::move(records), range, strict);
}

RecordSet parse_json(const std::string& text, bool strict) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON: ") + e.what());
    }
    std::optional<std::pair<double, double>> range;
    if (doc.is_object() && doc.contains("complete_range")) {
        const auto& cr = doc["complete_range"];
        if (!cr.is_array() || cr.size() != 2 || !cr[0].is_number() || !cr[1].is_number())
            throw ParseError("JSON: complete_range must be [lo, hi]");
        range = std::make_pair(cr[0].get<double>(), cr[1].get<double>());
    }
    const json* list = &doc;
    if (doc.is_object()) {
        if (!doc.contains("records")) throw ParseError("JSON: missing 'records'");
        list = &doc["records"];
    }
    if (!list->is_array()) throw ParseError("JSON: records must be an array");
    std::vector<MaassFormRecord> records;
    for (std::size_t i = 0; i < list->size(); ++i) {
        const auto& o = (*list)[i];
        auto num = [&](const char* key) -> double {
            if (!o.contains(key) || !o[key].is_number())
                throw ParseError("JSON record " + std::to_string(i) + ", field '" + key + "': missing or not a number");
            return o[key].get<double>();
        };
        MaassFormRecord r;
        r.kappa = num("kappa");
        const double par = num("parity");
        r.parity = static_cast<int>(par);
        if (double(r.parity) != par)
            throw ParseError("JSON record " + std::to_string(i) + ", field 'parity': not an integer");
        r.alpha = num("alpha");
        if (o.contains("central_value") && !o["central_value"].is_null()) r.central_value = num("central_value");
        r.hecke.push_back(1.0);
        for (std::size_t n = 2;; ++n) {
            const std::string key = "t_" + std::to_string(n);
            if (!o.contains(key)) break;
            r.hecke.push_back(num(key.c_str()));
        }
        records.push_back(std::move(r));
    }
    return finish(std::move(records), range, strict);
}

constexpr double kAfeLine = 1.0;  // Re u of the integration line

Complex log_gamma_factor_ratio(Complex u, double kappa, int delta) {
    // log gamma(1/2+u) - log gamma(1/2), gamma(s) = pi^{-s} Gamma((s+d+ik)/2) Gamma((s+d-ik)/2)
    const Complex a(0.5 + delta, kappa), b(0.5 + delta, -kappa);
    return -u * std::log(kPi) + log_gamma((a + u) / 2.0) - log_gamma(a / 2.0) + log_gamma((b + u) / 2.0) -
           log_gamma(b / 2.0);
}

Complex log_gamma_factor(Complex s, double kappa, int delta) {
    return -s * std::log(kPi) + log_gamma((s + double(delta) + Complex(0.0, kappa)) / 2.0) +
           log_gamma((s + double(delta) - Complex(0.0, kappa)) / 2.0);
}

// Central value with its uncertainty. A tabulated value carries no error of its
// own, so the AFE disagreement stands in for it when the record is long enough.
std::pair<double, double> central_with_error(const MaassFormRecord& r) {
    if (r.central_value && double(r.n_max()) < 4.0 * r.kappa)
        return {*r.central_value, 0.0};
    const auto cv = hecke_value_half(r);
    return {cv.value, cv.tabulated ? std::max(cv.error_estimate, cv.deviation) : cv.error_estimate};
}

double central_for(const RecordSet& set, std::size_t i, double* err) {
    if (set.central.size() == set.records.size()) {
        if (err) *err = set.central_error[i];
        return set.central[i];
    }
    const auto [v, e] = central_with_error(set.records[i]);
    if (err) *err = e;
    return v;
}

std::pair<double, double> coverage_range(const RecordSet& set) {
    if (set.complete_range) return *set.complete_range;
    if (set.records.empty()) return {0.0, 0.0};
    return {set.records.front().kappa, set.records.back().kappa};
}

void require_coverage(const RecordSet& set, double lo, double hi, const char* what) {
    const auto [a, b] = coverage_range(set);
    if (lo < a || hi > b)
        throw CoverageError(std::string(what) + ": window [" + fmt17(lo) + ", " + fmt17(hi) +
                            "] is not inside the data's complete range [" + fmt17(a) + ", " + fmt17(b) + "]");
}

}  // namespace

void validate_record(const MaassFormRecord& r, std::size_t index, ValidationReport& rep) {
    if (!(r.kappa > 0.0) || !std::isfinite(r.kappa)) add_violation(rep, index, r, "kappa", "kappa must be > 0");
    if (r.parity != 1 && r.parity != -1) add_violation(rep, index, r, "parity", "parity must be +1 or -1");
    if (!(r.alpha > 0.0) || !std::isfinite(r.alpha)) add_violation(rep, index, r, "alpha", "alpha must be > 0");
    else if (r.kappa > 0.0 && r.alpha < 1e-2 * std::pow(r.kappa, -0.5))
        rep.warnings.push_back("record " + std::to_string(index) + ": alpha " + fmt17(r.alpha) +
                               " is unusually small for kappa " + fmt17(r.kappa));
    if (r.hecke.empty() || r.hecke[0] != 1.0) add_violation(rep, index, r, "coefficients", "t(1) must be 1");
    for (std::size_t n = 1; n <= r.hecke.size(); ++n)
        if (!std::isfinite(r.hecke[n - 1])) {
            add_violation(rep, index, r, "coefficients", "t(" + std::to_string(n) + ") is not finite");
            return;
        }
    if (r.central_value && !(*r.central_value >= -kHeckeTolerance))
        add_violation(rep, index, r, "central-value", "H(1/2) = " + fmt17(*r.central_value) + " is negative");

    const std::size_t N = r.hecke.size();
    // t(m) t(n) = t(mn) for coprime m, n
    double worst = 0.0;
    std::string where;
    for (std::size_t m = 2; m * m <= N; ++m)
        for (std::size_t n = m + 1; m * n <= N; ++n) {
            if (std::gcd(m, n) != 1) continue;
            const double prod = r.t(m) * r.t(n);
            const double dev = std::abs(prod - r.t(m * n)) / std::max(1.0, std::abs(prod));
            if (dev > worst) {
                worst = dev;
                where = "t(" + std::to_string(m) + ")t(" + std::to_string(n) + ") - t(" + std::to_string(m * n) + ")";
            }
        }
    if (worst > kHeckeTolerance) add_violation(rep, index, r, "multiplicativity", where + " off by " + fmt17(worst));
    // t(p) t(p^k) = t(p^{k+1}) + t(p^{k-1}); k = 1 is t(p)^2 - t(p^2) = 1
    worst = 0.0;
    for (std::size_t p : primes_up_to(N)) {
        for (std::size_t pk = p, prev = 1; pk * p <= N; prev = pk, pk *= p) {
            const double lhs = r.t(p) * r.t(pk);
            const double dev = std::abs(lhs - r.t(pk * p) - r.t(prev)) / std::max(1.0, std::abs(lhs));
            if (dev > worst) {
                worst = dev;
                where = "t(" + std::to_string(p) + ")t(" + std::to_string(pk) + ") - t(" + std::to_string(pk * p) +
                        ") - t(" + std::to_string(prev) + ")";
            }
        }
    }
    if (worst > kHeckeTolerance) add_violation(rep, index, r, "hecke-prime", where + " off by " + fmt17(worst));
}

double hecke_defect(const MaassFormRecord& r) {
    const std::size_t N = r.hecke.size();
    double worst = 0.0;
    for (std::size_t m = 2; m * m <= N; ++m)
        for (std::size_t n = m + 1; m * n <= N; ++n)
            if (std::gcd(m, n) == 1) worst = std::max(worst, std::abs(r.t(m) * r.t(n) - r.t(m * n)));
    for (std::size_t p : primes_up_to(N))
        for (std::size_t pk = p, prev = 1; pk * p <= N; prev = pk, pk *= p)
            worst = std::max(worst, std::abs(r.t(p) * r.t(pk) - r.t(pk * p) - r.t(prev)));
    return worst;
}

RecordSet parse_records_text(const std::string& text, RecordFormat format, bool strict) {
    return format == RecordFormat::Json ? parse_json(text, strict) : parse_csv(text, strict);
}

RecordSet parse_records(const std::string& path, RecordFormat format, bool strict) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open record file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_records_text(buf.str(), format, strict);
}

RecordFormat record_format_from_path(const std::string& path) {
    const auto dot = path.rfind('.');
    if (dot != std::string::npos && path.substr(dot) == ".json") return RecordFormat::Json;
    return RecordFormat::Csv;
}

void emit_records(std::ostream& os, const RecordSet& set, RecordFormat format) {
    std::size_t n_max = 1;
    for (const auto& r : set.records) n_max = std::max(n_max, r.n_max());
    if (format == RecordFormat::Json) {
        json doc = json::object();
        if (set.complete_range) doc["complete_range"] = {set.complete_range->first, set.complete_range->second};
        doc["records"] = json::array();
        for (const auto& r : set.records) {
            json o = json::object();
            o["kappa"] = r.kappa;
            o["parity"] = r.parity;
            o["alpha"] = r.alpha;
            o["central_value"] = r.central_value ? json(*r.central_value) : json(nullptr);
            for (std::size_t n = 2; n <= r.n_max(); ++n) o["t_" + std::to_string(n)] = r.t(n);
            doc["records"].push_back(o);
        }
        os << doc.dump(1) << '\n';
        return;
    }
    if (set.complete_range)
        os << "# complete-range: " << fmt17(set.complete_range->first) << ' ' << fmt17(set.complete_range->second)
           << '\n';
    os << "kappa,parity,alpha,central_value";
    for (std::size_t n = 2; n <= n_max; ++n) os << ",t_" << n;
    os << '\n';
    for (const auto& r : set.records) {
        if (r.n_max() != n_max) throw ValidationError("emit_records: CSV needs equal n_max for all records");
        os << fmt17(r.kappa) << ',' << r.parity << ',' << fmt17(r.alpha) << ','
           << (r.central_value ? fmt17(*r.central_value) : std::string());
        for (std::size_t n = 2; n <= n_max; ++n) os << ',' << fmt17(r.t(n));
        os << '\n';
    }
}

Complex functional_equation_factor(Complex s, double kappa, int parity) {
    if (parity != 1 && parity != -1) throw DomainError("functional_equation_factor: parity must be +-1");
    if (!(kappa > 0.0)) throw DomainError("functional_equation_factor: kappa must be positive");
    const Complex a = 1.0 - s + Complex(0.0, kappa), b = 1.0 - s - Complex(0.0, kappa);
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
        throw PoleError("functional_equation_factor: Gamma pole at s = " + fmt17(s.real()) + "+" + fmt17(s.imag()) + "i");
    // eps cosh(pi kappa) - cos(pi s) = e^{pi kappa} [eps (1 + e^{-2 pi kappa})/2 - cos(pi s) e^{-pi kappa}]
    const double ek = std::exp(-kPi * kappa);
    const Complex bracket = double(parity) * 0.5 * (1.0 + ek * ek) - complex_cos(kPi * s) * ek;
    const Complex lg = (2.0 * s - 1.0) * std::log(2.0) + (2.0 * s - 2.0) * std::log(kPi) + log_gamma(a) +
                       log_gamma(b) + kPi * kappa;
    return std::exp(lg) * bracket;
}

Complex functional_equation_factor_from_gamma(Complex s, double kappa, int parity) {
    if (parity != 1 && parity != -1) throw DomainError("functional_equation_factor_from_gamma: parity must be +-1");
    const int delta = parity == 1 ? 0 : 1;
    return double(parity) * std::exp(log_gamma_factor(1.0 - s, kappa, delta) - log_gamma_factor(s, kappa, delta));
}

AfeWeight::AfeWeight(double kappa, int parity, double log_y_max) : log_y_max_(log_y_max) {
    if (!(kappa > 0.0)) throw DomainError("AfeWeight: kappa must be positive");
    if (parity != 1 && parity != -1) throw DomainError("AfeWeight: parity must be +-1");
    const int delta = parity == 1 ? 0 : 1;
    // |gamma(1/2+u)/gamma(1/2)| falls off like e^{-pi (|v| - kappa)/2} beyond |v| = kappa.
    const double v_max = kappa + 40.0;
    const double rate = log_y_max + std::log(2.0 * kappa + 40.0) + 1.0;
    const double width = std::min(0.5, 3.0 / rate);
    const int panels = std::max(1, static_cast<int>(std::ceil(v_max / width)));
    const auto rule = quad::make_panel_rule(0.0, v_max, panels);
    v_ = rule.nodes;
    kr_ = rule.kronrod_weights;
    ga_ = rule.gauss_weights;
    g_.resize(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const Complex u(kAfeLine, v_[i]);
        g_[i] = std::exp(log_gamma_factor_ratio(u, kappa, delta)) / u;
    }
}

ValueWithError AfeWeight::operator()(double y) const {
    if (!(y > 0.0)) throw DomainError("AfeWeight: y must be positive");
    const double ly = std::log(y);
    if (std::abs(ly) > log_y_max_ * (1.0 + 1e-12))
        throw RegimeError("AfeWeight: |log y| exceeds the tabulated range");
    // W(y) = (1/pi) Re int_0^inf g(1+iv) y^{-1-iv} dv
    NeumaierSum kr, ga;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const double v = std::real(g_[i] * std::exp(Complex(-kAfeLine * ly, -v_[i] * ly)));
        kr.add(kr_[i] * v);
        if (ga_[i] != 0.0) ga.add(ga_[i] * v);
    }
    return {kr.value() / kPi, std::abs(kr.value() - ga.value()) / kPi};
}

CentralValue hecke_value_half(const MaassFormRecord& rec, double X) {
    if (X <= 0.0) X = rec.kappa;
    const std::size_t n_max = rec.n_max();
    if (double(n_max) < 4.0 * X)
        throw InsufficientDataError("hecke_value_half: need n_max >= 4X = " + fmt17(4.0 * X) + ", record has " +
                                    std::to_string(n_max));
    const double Xp = 2.0 * kPi * X / rec.kappa;
    const double log_y_max = std::max(std::abs(std::log(Xp)), std::log(double(n_max) * std::max(Xp, 1.0 / Xp))) + 1.0;
    const AfeWeight W(rec.kappa, rec.parity, log_y_max);
    const double noise = hecke_defect(rec);
    NeumaierSum sum, err;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const double a = rec.t(n) / std::sqrt(double(n));
        const auto w1 = W(double(n) / Xp);
        const auto w2 = W(double(n) * Xp);
        sum.add(a * (w1.value + rec.parity * w2.value));
        err.add(std::abs(a) * (w1.error + w2.error));
        if (n > 1) err.add(noise / std::sqrt(double(n)) * (std::abs(w1.value) + std::abs(w2.value)));
    }
    // Truncation: |t(n)| <= d(n) n^{7/64}, W decays at least geometrically past n_max.
    const double N = double(n_max);
    const auto w_last = W(N / Xp);
    const double tail = 4.0 * std::abs(w_last.value) * std::pow(N, 7.0 / 64.0 - 0.5) * 2.0 * std::log(N) *
                        std::max(1.0, Xp);
    CentralValue out;
    out.computed = sum.value();
    out.error_estimate = err.value() + tail + 1e-14 * std::abs(out.computed);
    out.value = out.computed;
    if (rec.central_value) {
        out.tabulated = true;
        out.value = *rec.central_value;
        out.deviation = std::abs(out.computed - *rec.central_value);
    }
    return out;
}

double weyl_count(double T) {
    if (!(T > 0.0)) return 0.0;
    return std::max(0.0, T * T / 12.0 - 2.0 * T / kPi * std::log(T / (std::exp(1.0) * std::sqrt(kPi / 2.0))) -
                             131.0 / 144.0);
}

double central_value_of(const MaassFormRecord& rec) { return hecke_value_half(rec).value; }

void attach_central_values(RecordSet& set, int threads) {
    std::vector<double> c(set.records.size()), e(set.records.size());
    parallel_for(set.records.size(), threads, [&](std::size_t i) {
        std::tie(c[i], e[i]) = central_with_error(set.records[i]);
    });
    set.central = std::move(c);
    set.central_error = std::move(e);
}

ShortIntervalResult short_interval_sum(const RecordSet& set, double K, double G, int power, double eps0) {
    if (!(K > 0.0) || !(G > 0.0)) throw DomainError("short_interval_sum: K and G must be positive");
    if (power < 1) throw DomainError("short_interval_sum: power must be >= 1");
    const double lo = std::max(0.0, K - G), hi = K + G;
    require_coverage(set, lo, hi, "short_interval_sum");
    ShortIntervalResult out;
    NeumaierSum sum, err;
    for (std::size_t i = 0; i < set.records.size(); ++i) {
        const auto& r = set.records[i];
        if (r.kappa < lo || r.kappa > hi) continue;
        double e = 0.0;
        const double h = central_for(set, i, &e);
        sum.add(r.alpha * std::pow(h, power));
        err.add(r.alpha * power * std::pow(std::abs(h) + e, power - 1) * e);
        ++out.count;
    }
    out.value = sum.value();
    out.error_estimate = err.value();
    out.ratio = out.value / (G * std::pow(K, 1.0 + eps0));
    out.expected_count = weyl_count(hi) - weyl_count(lo);
    out.density_flag = out.expected_count > 0.0 && std::abs(double(out.count) - out.expected_count) >
                                                       0.5 * out.expected_count;
    return out;
}

WeightedSpectralResult weighted_spectral_sum(const RecordSet& set, const SpectralWeight& w) {
    w.validate();
    const double reach = w.G * std::log(std::max(w.K, 2.0));
    require_coverage(set, std::max(0.0, w.K - reach), w.K + reach, "weighted_spectral_sum");
    WeightedSpectralResult out;
    NeumaierSum sum, err;
    for (std::size_t i = 0; i < set.records.size(); ++i) {
        const auto& r = set.records[i];
        const double h0 = weight_real(w, r.kappa);
        if (h0 == 0.0) continue;
        double e = 0.0;
        const double h = central_for(set, i, &e);
        sum.add(r.alpha * h * h * h * h0);
        err.add(r.alpha * 3.0 * (h * h + e) * e * std::abs(h0));
        ++out.terms;
    }
    out.value = sum.value();
    out.error_estimate = err.value();
    return out;
}

SubconvexityRow subconvexity_ratio(const MaassFormRecord& rec) {
    SubconvexityRow row;
    row.kappa = rec.kappa;
    row.parity = rec.parity;
    row.central_value = central_value_of(rec);
    row.ratio = row.central_value / std::cbrt(rec.kappa);
    row.ratio_convexity = row.central_value / std::sqrt(rec.kappa);
    return row;
}

std::vector<SubconvexityRow> subconvexity_profile(const RecordSet& set, int threads) {
    std::vector<SubconvexityRow> rows(set.records.size());
    parallel_for(rows.size(), threads, [&](std::size_t i) {
        const auto& r = set.records[i];
        SubconvexityRow row;
        row.kappa = r.kappa;
        row.parity = r.parity;
        row.central_value = central_for(set, i, nullptr);
        row.ratio = row.central_value / std::cbrt(r.kappa);
        row.ratio_convexity = row.central_value / std::sqrt(r.kappa);
        rows[i] = row;
    });
    return rows;
}

double alpha_from_rho1(double rho1_abs_sq, double kappa) {
    if (!(rho1_abs_sq > 0.0) || !(kappa > 0.0)) throw DomainError("alpha_from_rho1: arguments must be positive");
    return rho1_abs_sq / std::cosh(kPi * kappa);
}

}  // namespace heckesum
