// Python bindings: thin wrappers over the C++ library. Library errors map to
// ValueError (bad input) or RuntimeError (numerical failure).

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heckesum/arith.hpp"
#include "heckesum/expsum.hpp"
#include "heckesum/hypergeom.hpp"
#include "heckesum/kernels.hpp"
#include "heckesum/moto.hpp"
#include "heckesum/specfun.hpp"
#include "heckesum/spectral.hpp"

namespace py = pybind11;
namespace hs = heckesum;
using hs::Complex;

namespace {

hs::SpectralWeight weight(double K, double G, int nu) {
    hs::SpectralWeight w{K, G, nu};
    w.validate();
    return w;
}

hs::PsiKind kind_of(const std::string& k) {
    if (k == "plus") return hs::PsiKind::Plus;
    if (k == "minus") return hs::PsiKind::Minus;
    throw hs::DomainError("kind must be 'plus' or 'minus'");
}

}  // namespace

PYBIND11_MODULE(_heckesum, m) {
    m.doc() = "Divisor-side and spectral-side sums for the cubic moment of Hecke L-values";

    // translators are tried last-registered first, so the base class goes first
    py::register_exception<hs::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<hs::DomainError>(m, "DomainError", PyExc_ValueError);

    // special functions
    m.def("log_gamma", &hs::log_gamma, py::arg("s"));
    m.def("digamma", &hs::digamma, py::arg("s"));
    m.def("trigamma", &hs::trigamma, py::arg("s"));
    m.def("riemann_zeta", &hs::riemann_zeta, py::arg("s"));
    m.def("gauss_moment", &hs::gauss_moment, py::arg("j"), py::arg("A"),
          "int u^j exp(A u - u^2) du over the real line");
    m.def(
        "f21",
        [](Complex a, Complex b, Complex c, Complex z) {
            const auto r = hs::f21_series({a, b, c, z});
            return py::make_tuple(r.value, r.error_estimate, r.terms);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"), "(value, error_estimate, terms)");
    m.def(
        "quadratic_transform", [](Complex a, Complex b, Complex z) { return hs::quadratic_transform(a, b, z); },
        py::arg("a"), py::arg("b"), py::arg("z"), "F(a, b; 2b; z)");

    // arithmetic
    m.def("divisor_count", &hs::divisor_count, py::arg("n"));
    m.def("divisor_sigma", &hs::divisor_sigma, py::arg("a"), py::arg("n"));
    m.def(
        "divisor_counts",
        [](std::int64_t limit) {
            const auto t = hs::sieve_divisors(limit);
            std::vector<std::uint64_t> d(static_cast<std::size_t>(limit));
            for (std::int64_t n = 1; n <= limit; ++n) d[n - 1] = t.d(n);
            return d;
        },
        py::arg("limit"), "[d(1), ..., d(limit)]");
    m.def("dirichlet_sigma_sum", &hs::dirichlet_sigma_sum, py::arg("r"), py::arg("sigma"), py::arg("X"));

    // kernels
    m.def(
        "h_hat",
        [](Complex s, double K, double G, int d_order) { return hs::h_hat(s, weight(K, G, 0), d_order); },
        py::arg("s"), py::arg("K"), py::arg("G"), py::arg("d_order") = 0);
    m.def(
        "psi",
        [](double x, double K, double G, const std::string& kind) {
            const auto w = weight(K, G, 0);
            const auto k = kind_of(kind);
            py::gil_scoped_release nogil;
            const auto c = hs::default_contour(w, k);
            return k == hs::PsiKind::Plus ? hs::psi_plus_contour(x, w, c) : hs::psi_minus(x, w, c);
        },
        py::arg("x"), py::arg("K"), py::arg("G"), py::arg("kind") = "plus", "Psi by the contour route");
    m.def(
        "psi_plus_hyper",
        [](double x, double K, double G) {
            const auto w = weight(K, G, 0);
            py::gil_scoped_release nogil;
            return hs::psi_plus_hyper(x, w);
        },
        py::arg("x"), py::arg("K"), py::arg("G"));
    m.def(
        "psi_minus_double_integral",
        [](double x, double K, double G) {
            const auto w = weight(K, G, 0);
            py::gil_scoped_release nogil;
            return hs::psi_minus_double_integral(x, w, hs::default_contour(w, hs::PsiKind::Minus)).value;
        },
        py::arg("x"), py::arg("K"), py::arg("G"));

    // divisor-side sum
    m.def(
        "c_sum",
        [](double K, double G, double lambda_c, double f_max_mult, int threads) {
            const auto w = weight(K, G, 0);
            hs::MotoOptions opt;
            opt.threads = threads;
            hs::CSumResult r;
            {
                py::gil_scoped_release nogil;
                r = hs::c_sum(w, lambda_c, f_max_mult, opt);
            }
            py::list rows;
            for (const auto& b : r.breakdowns) {
                py::dict d;
                d["f"] = b.f;
                d["h"] = std::vector<Complex>(b.h.begin(), b.h.end());
                d["tail"] = std::vector<double>(b.tail.begin(), b.tail.end());
                d["contribution"] = b.contribution;
                rows.append(d);
            }
            py::dict out;
            out["value"] = r.value;
            out["tail_total"] = r.tail_total;
            out["rows"] = rows;
            return out;
        },
        py::arg("K"), py::arg("G"), py::arg("lambda_c") = 1.0, py::arg("f_max_mult") = 3.0, py::arg("threads") = 1);

    // exponential sums
    m.def("phase", &hs::phase, py::arg("m"), py::arg("n"), py::arg("K"));
    m.def("phase_m_derivative", &hs::phase_m_derivative, py::arg("m"), py::arg("n"), py::arg("K"));
    m.def("block_size", &hs::block_size, py::arg("M"), py::arg("N"), py::arg("K"), py::arg("C") = 1.0);
    m.def(
        "model_double_sum",
        [](std::int64_t M, std::int64_t N, double K, double C, int threads) {
            const auto g = hs::make_phase_grid(M, N, K, C);
            py::gil_scoped_release nogil;
            return hs::model_double_sum(g, threads).value;
        },
        py::arg("M"), py::arg("N"), py::arg("K"), py::arg("C") = 1.0, py::arg("threads") = 1);

    // spectral side
    m.def("weyl_count", &hs::weyl_count, py::arg("T"));
    m.def(
        "functional_equation_factor",
        [](Complex s, double kappa, int parity) { return hs::functional_equation_factor(s, kappa, parity); },
        py::arg("s"), py::arg("kappa"), py::arg("parity"));
    m.def(
        "central_values",
        [](const std::string& path, bool strict) {
            auto set = hs::parse_records(path, hs::record_format_from_path(path), strict);
            py::list rows;
            for (const auto& r : set.records) {
                const auto cv = hs::hecke_value_half(r);
                py::dict d;
                d["kappa"] = r.kappa;
                d["parity"] = r.parity;
                d["alpha"] = r.alpha;
                d["central_value"] = cv.value;
                d["computed"] = cv.computed;
                d["error_estimate"] = cv.error_estimate;
                rows.append(d);
            }
            return rows;
        },
        py::arg("path"), py::arg("strict") = true, "one dict per record, H(1/2) by the approximate functional equation");
    m.def(
        "short_interval_sum",
        [](const std::string& path, double K, double G, int power) {
            auto set = hs::parse_records(path, hs::record_format_from_path(path), true);
            hs::attach_central_values(set, 1);
            const auto r = hs::short_interval_sum(set, K, G, power);
            py::dict d;
            d["value"] = r.value;
            d["ratio"] = r.ratio;
            d["count"] = r.count;
            d["expected_count"] = r.expected_count;
            d["density_flag"] = r.density_flag;
            return d;
        },
        py::arg("path"), py::arg("K"), py::arg("G"), py::arg("power") = 3);
}
