#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "superzeta/errors.hpp"

namespace superzeta {

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double est_error = 0.0;
    int panels = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1,1].
struct GK15 {
    static constexpr double xk[8] = {
        0.0,
        0.2077849550078985, 0.4058451513773972, 0.5860872354676911,
        0.7415311855993945, 0.8648644233597691, 0.9491079123427585,
        0.9914553711208126};
    static constexpr double wk[8] = {
        0.2094821410847278,
        0.2044329400752989, 0.1903505780647854, 0.1690047266392679,
        0.1406532597155259, 0.1047900103222502, 0.0630920926299786,
        0.0229353220105292};
    static constexpr double wg[4] = {
        0.4179591836734694, 0.3818300505051189, 0.2797053914892767,
        0.1294849661688697};
};

template <typename F>
std::pair<std::complex<double>, double> gk15_panel(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::complex<double> fc = f(mid);
    std::complex<double> k = GK15::wk[0] * fc;
    std::complex<double> g = GK15::wg[0] * fc;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * GK15::xk[i];
        std::complex<double> s = f(mid + dx) + f(mid - dx);
        k += GK15::wk[i] * s;
        if (i % 2 == 0) g += GK15::wg[i / 2] * s;
    }
    k *= half;
    g *= half;
    double err = std::abs(k - g);
    err = 200.0 * err * std::sqrt(200.0 * err > 1.0 ? 1.0 : 200.0 * err);
    return {k, err};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod on [a,b] for a complex-valued integrand that is
/// smooth in the interior (integrable endpoint behavior is better served by
/// integrate_power_endpoint below).
template <typename F>
QuadResult integrate_adaptive(F&& f, double a, double b, double tol,
                              int max_panels = 4000) {
    QuadResult out;
    if (a == b) return out;
    struct Seg { double a, b; std::complex<double> v; double e; };
    auto [v0, e0] = detail::gk15_panel(f, a, b);
    std::vector<Seg> work{{a, b, v0, e0}};
    out.panels = 1;
    while (true) {
        // split the worst segment
        int worst = -1;
        double worst_err = 0.0;
        std::complex<double> total = 0.0;
        double err_sum = 0.0;
        for (int i = 0; i < static_cast<int>(work.size()); ++i) {
            total += work[i].v;
            err_sum += work[i].e;
            if (work[i].e > worst_err) { worst_err = work[i].e; worst = i; }
        }
        if (err_sum <= tol * std::max(1.0, std::abs(total)) ||
            static_cast<int>(work.size()) >= max_panels) {
            out.value = total;
            out.est_error = err_sum;
            return out;
        }
        Seg s = work[worst];
        double m = 0.5 * (s.a + s.b);
        auto [v1, e1] = detail::gk15_panel(f, s.a, m);
        auto [v2, e2] = detail::gk15_panel(f, m, s.b);
        work[worst] = {s.a, m, v1, e1};
        work.push_back({m, s.b, v2, e2});
        ++out.panels;
    }
}

/// Tanh-sinh evaluation of int_0^delta g(y) y^{-s} dy for complex s with
/// Re(s) < 1.  The node positions are tracked as distances from the left
/// endpoint so the power weight can be formed from log(y) without underflow.
template <typename G>
QuadResult integrate_power_endpoint(G&& g, std::complex<double> s, double delta,
                                    double tol, int max_level = 10) {
    QuadResult out;
    if (delta <= 0.0) return out;
    const double pi_half = 1.5707963267948966;
    const double t_max = 6.0;
    const double log_delta = std::log(delta);

    auto node = [&](double t) -> std::complex<double> {
        const double u = pi_half * std::sinh(t);
        // y = delta * sigma(2u) via the stable branch for each sign of u
        double y, log_sigma;
        if (u >= 0.0) {
            const double e = std::exp(-2.0 * u);
            y = delta / (1.0 + e);
            log_sigma = -std::log1p(e);
        } else {
            const double e = std::exp(2.0 * u);
            y = delta * e / (1.0 + e);
            log_sigma = 2.0 * u - std::log1p(e);
        }
        const double ch = std::cosh(u);
        const double w = delta * pi_half * std::cosh(t) / (2.0 * ch * ch);
        if (w == 0.0 || !std::isfinite(w)) return {0.0, 0.0};
        const std::complex<double> power = std::exp(-s * (log_delta + log_sigma));
        return w * power * g(y);
    };

    double h = 0.5;
    std::complex<double> sum = node(0.0);
    for (double t = h; t <= t_max; t += h) sum += node(t) + node(-t);
    std::complex<double> integral = sum * h;
    out.est_error = std::abs(integral);
    for (int level = 1; level <= max_level; ++level) {
        std::complex<double> mid_sum = 0.0;
        for (double t = h / 2.0; t <= t_max; t += h) mid_sum += node(t) + node(-t);
        h /= 2.0;
        sum += mid_sum;
        std::complex<double> next = sum * h;
        out.est_error = std::abs(next - integral);
        integral = next;
        ++out.panels;
        if (level >= 3 && out.est_error <= tol * std::max(1.0, std::abs(integral)))
            break;
    }
    out.value = integral;
    return out;
}

}  // namespace superzeta
