// quadrature.hpp
//
// Globally adaptive Gauss-Kronrod (10/21) quadrature for real- or
// complex-valued integrands, plus the fixed panel rule used to tabulate
// contour integrands once and re-weight them for many parameters.
//
// The error estimate of a panel is |K21 - G10| without the QUADPACK
// rescaling, which keeps it an honest (if pessimistic) bound for the smooth
// integrands seen here. Panels are always summed in left-to-right order with
// compensation, so results are reproducible bit for bit.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <span>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "heckesum/core.hpp"
#include "heckesum/summation.hpp"

namespace heckesum::quad {

namespace detail {
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525452000, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights attached to kXgk[1], kXgk[3], ..., kXgk[9].
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};
}  // namespace detail

struct Options {
    double rel_tol = 1e-9;
    double abs_tol = 1e-16;
    int max_intervals = 20000;
    bool throw_on_failure = true;
};

template <class T>
struct Result {
    T value{};
    double abs_error = 0.0;
    int evaluations = 0;
    bool converged = true;
};

template <class T>
struct Panel {
    double a = 0.0;
    double b = 0.0;
    T value{};
    double error = 0.0;
};

template <class F>
auto gk21(F& f, double a, double b) {
    using T = std::decay_t<decltype(f(a))>;
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const T fc = f(c);
    T kronrod = fc * detail::kWgk[10];
    T gauss{};
    for (int j = 0; j < 10; ++j) {
        const double dx = h * detail::kXgk[j];
        const T sum = f(c - dx) + f(c + dx);
        kronrod += sum * detail::kWgk[j];
        if (j % 2 == 1) gauss += sum * detail::kWg[j / 2];
    }
    Panel<T> p{a, b, kronrod * h, 0.0};
    p.error = std::abs((kronrod - gauss) * h);
    return p;
}

// Adaptive integration over [a, b] with the given initial breakpoints
// (must be sorted and include the end points).
template <class F>
auto integrate_breakpoints(F&& f, std::span<const double> points, const Options& opt = {}) {
    using T = std::decay_t<decltype(f(points[0]))>;
    using P = Panel<T>;
    auto worse = [](const P& x, const P& y) { return x.error < y.error; };
    std::priority_queue<P, std::vector<P>, decltype(worse)> heap(worse);
    Result<T> out;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (points[i + 1] == points[i]) continue;
        heap.push(gk21(f, points[i], points[i + 1]));
        out.evaluations += 21;
    }

    auto totals = [&heap] {
        auto copy = heap;
        Compensated<T> v;
        NeumaierSum e;
        while (!copy.empty()) {
            v.add(copy.top().value);
            e.add(copy.top().error);
            copy.pop();
        }
        return std::pair{v.value(), e.value()};
    };

    // Running totals are only used for the stopping test; the final value is
    // recomputed in panel order below.
    auto [value, error] = totals();
    int since_refresh = 0;
    while (!heap.empty()) {
        if (error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(value))) break;
        if (static_cast<int>(heap.size()) >= opt.max_intervals) {
            out.converged = false;
            break;
        }
        P worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {  // cannot bisect further
            out.converged = false;
            heap.push(worst);
            break;
        }
        P left = gk21(f, worst.a, mid);
        P right = gk21(f, mid, worst.b);
        out.evaluations += 42;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        if (++since_refresh == 64) {
            std::tie(value, error) = totals();
            since_refresh = 0;
        }
    }

    std::vector<P> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const P& x, const P& y) { return x.a < y.a; });
    Compensated<T> v;
    NeumaierSum e;
    for (const auto& p : panels) {
        v.add(p.value);
        e.add(p.error);
    }
    out.value = v.value();
    out.abs_error = e.value();
    if (!out.converged && opt.throw_on_failure)
        throw ConvergenceError("adaptive quadrature did not converge: error estimate " +
                               std::to_string(out.abs_error) + " for value magnitude " +
                               std::to_string(std::abs(out.value)));
    return out;
}

// Adaptive integration over [a, b], pre-split into `initial_panels` equal pieces.
template <class F>
auto integrate(F&& f, double a, double b, const Options& opt = {}, int initial_panels = 1) {
    initial_panels = std::max(initial_panels, 1);
    std::vector<double> pts(static_cast<std::size_t>(initial_panels) + 1);
    for (int i = 0; i <= initial_panels; ++i) pts[i] = a + (b - a) * i / initial_panels;
    pts.back() = b;
    return integrate_breakpoints(std::forward<F>(f), std::span<const double>(pts), opt);
}

// Fixed composite GK21 rule on [a, b] with equal panels. Each node carries the
// Kronrod weight and the embedded Gauss weight (zero off the Gauss nodes), so
// one pass over a tabulated integrand yields a value and an error estimate.
struct PanelRule {
    std::vector<double> nodes;
    std::vector<double> kronrod_weights;
    std::vector<double> gauss_weights;

    std::size_t size() const { return nodes.size(); }
};

inline PanelRule make_panel_rule(double a, double b, int panels) {
    if (panels < 1) throw DomainError("panel rule needs at least one panel");
    PanelRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(panels) * 21);
    rule.kronrod_weights.reserve(rule.nodes.capacity());
    rule.gauss_weights.reserve(rule.nodes.capacity());
    const double width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + width * p;
        const double hi = (p + 1 == panels) ? b : lo + width;
        const double c = 0.5 * (lo + hi);
        const double h = 0.5 * (hi - lo);
        for (int j = 0; j < 10; ++j) {
            const double g = (j % 2 == 1) ? detail::kWg[j / 2] * h : 0.0;
            rule.nodes.push_back(c - h * detail::kXgk[j]);
            rule.kronrod_weights.push_back(detail::kWgk[j] * h);
            rule.gauss_weights.push_back(g);
        }
        rule.nodes.push_back(c);
        rule.kronrod_weights.push_back(detail::kWgk[10] * h);
        rule.gauss_weights.push_back(0.0);
        for (int j = 9; j >= 0; --j) {
            const double g = (j % 2 == 1) ? detail::kWg[j / 2] * h : 0.0;
            rule.nodes.push_back(c + h * detail::kXgk[j]);
            rule.kronrod_weights.push_back(detail::kWgk[j] * h);
            rule.gauss_weights.push_back(g);
        }
    }
    return rule;
}

}  // namespace heckesum::quad
