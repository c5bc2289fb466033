#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "superzeta/errors.hpp"
#include "superzeta/eval_context.hpp"
#include "superzeta/gamma.hpp"
#include "superzeta/numdiff.hpp"
#include "superzeta/quadrature.hpp"
#include "superzeta/result.hpp"
#include "superzeta/zero_sequence.hpp"
#include "superzeta/zeta_type.hpp"

namespace superzeta {

/// z is admissible when z - rho avoids (-inf,0] for every divisor point.
/// With no oracle attached this falls back to Re(z) > sigma, which contains
/// the divisor of every zeta-type function.
inline bool admissible_for(const FunctionModel& model, const complex& z) {
    if (auto oracle = model.zero_oracle()) return oracle->admissible(z);
    return z.real() > model.sigma();
}

/// Direct superzeta sum Z_f(s,z) = sum ord(rho) (z-rho)^{-s}, Re(s) > kappa.
inline SuperzetaResult superzeta_direct(const ZeroSequence& zeros, const complex& s,
                                        const complex& z, const EvalContext& ctx = {}) {
    ctx.validate();
    SuperzetaResult out;
    if (zeros.empty()) return out;
    if (!zeros.admissible(z))
        throw domain_error("superzeta_direct: z is not admissible for the divisor");
    if (!(s.real() > zeros.kappa()))
        throw convergence_error("superzeta_direct: Re(s) <= kappa, series diverges");
    double est = 0.0;
    long long used = 0;
    out.value = detail::zero_sequence_power_sum(zeros, s, z, ctx, &est, &used);
    out.est_error = est;
    out.branch_flags.truncation = used;
    out.branch_flags.tail_bound = est;
    return out;
}

namespace detail {

inline complex sinc(const complex& x) {
    if (std::abs(x) < 1e-4) {
        const complex x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// sin(pi s) / (pi (s - p)) for integer p, stable through s = p.
inline complex sin_over_pole(const complex& s, int p) {
    const complex t = kPi * (s - static_cast<double>(p));
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    return sign * sinc(t);
}

// Assembled data for the Mellin-transform evaluation of I(s,z) and
// Z_f(s,z) = sin(pi s)/pi * I(s,z) at one point z.
struct MellinCore {
    const FunctionModel* model = nullptr;
    complex z;
    int n = 0;           // requested Taylor split order; 0 = plain strip form
    double delta = 1.0;
    // c_j = (log f)^(j)(z)/(j-1)!.  Extended past n so the [0,delta] remainder
    // vanishes fast enough for plain Gauss-Kronrod; extra terms are never
    // singular because their poles sit at j > mu.
    std::vector<complex> c;
    double y_numeric_end = 0.0;
    bool asym_tail = false;      // reciprocal-gamma: digamma expansion beyond Y
    std::vector<complex> a;      // tail coefficients a_1..a_M of psi(z+y)
    double zeta_tail_bound = 0.0;
    EvalContext ctx;
};

inline MellinCore make_mellin_core(const FunctionModel& model, double re_s,
                                   const complex& z, int n, const EvalContext& ctx) {
    if (model.kind() == FunctionModel::Kind::sine_quotient)
        throw convergence_error("superzeta integral: model is not of zeta type");
    if (!admissible_for(model, z))
        throw domain_error("superzeta integral: z is not admissible");
    if (model.kind() != FunctionModel::Kind::reciprocal_gamma)
        require_in_half_plane(model, z, "superzeta integral");

    MellinCore core;
    core.model = &model;
    core.z = z;
    core.n = n;
    core.ctx = ctx;

    // Split point: 1 by default, kept inside the Taylor disc of f'/f at z.
    double dist;
    if (model.kind() == FunctionModel::Kind::reciprocal_gamma) {
        dist = std::abs(z - std::round(std::min(z.real(), 0.0)));
        for (int l = 0; l < 4; ++l)
            dist = std::min(dist, std::abs(z + static_cast<double>(l)));
    } else {
        dist = z.real() - model.sigma();
    }
    core.delta = std::min(1.0, 0.5 * dist);

    const int n_ext = (n == 0) ? 0 : std::min(FunctionModel::kMaxDerivativeOrder, n + 3);
    for (int j = 1; j <= n_ext; ++j)
        core.c.push_back(log_f_derivative(model, j, z, ctx) / factorial(j - 1));

    if (model.kind() == FunctionModel::Kind::reciprocal_gamma) {
        core.asym_tail = true;
        core.y_numeric_end = std::max(30.0, 2.5 * std::abs(z) + 10.0);
        // psi(z+y) ~ log y + sum_i a_i y^{-i}: expand log(z+y), -1/(2(z+y)) and
        // the Bernoulli terms of Stirling's series in inverse powers of y.
        const int M = 14;
        core.a.assign(M + 1, 0.0);
        std::vector<complex> zpow(M + 1, 1.0);
        for (int i = 1; i <= M; ++i) zpow[i] = zpow[i - 1] * z;
        for (int i = 1; i <= M; ++i) {
            complex ai = ((i % 2 == 1) ? 1.0 : -1.0) * zpow[i] / static_cast<double>(i);
            ai -= 0.5 * ((i % 2 == 1) ? 1.0 : -1.0) * zpow[i - 1];
            for (int k = 1; 2 * k <= i; ++k) {
                double sgn = ((i - 2 * k) % 2 == 0) ? 1.0 : -1.0;
                ai -= bernoulli_even(2 * k) / (2.0 * k) * sgn *
                      static_cast<double>(binomial(i - 1, i - 2 * k)) * zpow[i - 2 * k];
            }
            core.a[static_cast<size_t>(i)] = ai;
        }
    } else {
        // exponential tail: q_1^{-y} decay beyond the numeric range; an empty
        // series means f == 1 and any nominal rate works
        const double q1 = (model.kind() == FunctionModel::Kind::dirichlet_polynomial)
                              ? model.poly_base()
                              : (model.series().terms.empty()
                                     ? 2.0
                                     : model.series().terms.front().q);
        const double decay = std::log(q1);
        const double tol = 0.1 * ctx.target_rel_error;
        const double amp =
            std::abs(log_f_derivative(model, 1, z + complex(1.0), ctx)) * q1 * 4.0 + 1.0;
        double y = (std::log(amp / tol)) / decay + 2.0;
        for (int it = 0; it < 3; ++it)
            y = (std::log(amp / tol) + std::max(0.0, -re_s) * std::log(std::max(y, 2.0))) /
                    decay + 2.0;
        core.y_numeric_end = std::min(std::max(10.0, y), 2000.0);
        core.zeta_tail_bound = amp * std::exp(-decay * core.y_numeric_end) *
                               std::pow(core.y_numeric_end, std::max(0.0, -re_s)) / decay;
    }
    return core;
}

inline complex fp_at(const MellinCore& core, double y) {
    return log_f_derivative(*core.model, 1, core.z + y, core.ctx);
}

inline complex taylor_remainder(const MellinCore& core, double y) {
    complex r = fp_at(core, y);
    double yp = 1.0;
    for (const complex& cj : core.c) {
        r -= cj * yp;
        yp *= y;
    }
    return r;
}

// Quadrature pieces:  int_0^delta R y^{-s} dy  +  int_delta^Y (f'/f) y^{-s} dy.
inline complex quad_parts(const MellinCore& core, const complex& s, double* est,
                          int* panels) {
    const double tol = 0.25 * core.ctx.target_rel_error;
    const int max_panels = 100 * core.ctx.quadrature_nodes;
    complex total = 0.0;
    if (core.c.empty() && s.real() > 0.25) {
        // genuinely singular endpoint: tanh-sinh with the y^{-s} weight
        QuadResult q = integrate_power_endpoint(
            [&](double y) { return fp_at(core, y); }, s, core.delta, tol);
        total += q.value;
        *est += q.est_error;
        *panels += q.panels;
    } else if (core.c.empty()) {
        QuadResult q = integrate_adaptive(
            [&](double y) { return fp_at(core, y) * std::pow(complex(y), -s); }, 0.0,
            core.delta, tol, max_panels);
        total += q.value;
        *est += q.est_error;
        *panels += q.panels;
    } else {
        // The remainder vanishes like y^{n_ext}, but evaluating it by
        // subtraction is noise near 0; cut where the noise contribution
        // under the y^{-s} weight stays below the target and bound the
        // dropped head analytically.
        double y_floor = core.delta * 1e-3;
        if (s.real() > 1.0) {
            const double noise = 1e-15 * (1.0 + std::abs(core.c.front()));
            const double from_noise = std::pow(
                noise / (0.05 * tol * (s.real() - 1.0)), 1.0 / (s.real() - 1.0));
            y_floor = std::min(std::max(y_floor, from_noise), core.delta / 4.0);
        }
        const double head = std::abs(taylor_remainder(core, y_floor)) *
                            std::pow(y_floor, 1.0 - s.real()) /
                            std::max(0.5, static_cast<double>(core.c.size()) + 1.0 - s.real());
        QuadResult q = integrate_adaptive(
            [&](double y) { return taylor_remainder(core, y) * std::pow(complex(y), -s); },
            y_floor, core.delta, tol, max_panels);
        total += q.value;
        *est += q.est_error + head;
        *panels += q.panels;
    }
    QuadResult q2 = integrate_adaptive(
        [&](double y) { return fp_at(core, y) * std::pow(complex(y), -s); }, core.delta,
        core.y_numeric_end, tol, max_panels);
    total += q2.value;
    *est += q2.est_error + core.zeta_tail_bound;
    *panels += q2.panels;
    return total;
}

// I(s,z): meromorphic bracket with simple poles at s = 1..n (Taylor block)
// and, for the digamma tail, at s = 1 (double) and s = 1 - i.
inline complex mellin_i(const MellinCore& core, const complex& s, double* est,
                        int* panels) {
    for (int j = 1; j <= static_cast<int>(core.c.size()); ++j)
        if (std::abs(s - static_cast<double>(j)) < 1e-8)
            throw pole_error("I(s,z): evaluation at a pole of the continuation");
    complex value = quad_parts(core, s, est, panels);
    for (int j = 1; j <= static_cast<int>(core.c.size()); ++j)
        value += core.c[static_cast<size_t>(j - 1)] *
                 std::pow(complex(core.delta), static_cast<double>(j) - s) /
                 (static_cast<double>(j) - s);
    if (core.asym_tail) {
        if (std::abs(s - 1.0) < 1e-8)
            throw pole_error("I(s,z): pole at s=1");
        const double Y = core.y_numeric_end;
        const complex y1s = std::pow(complex(Y), 1.0 - s);
        value -= y1s * std::log(Y) / (s - 1.0) + y1s / ((s - 1.0) * (s - 1.0));
        for (int i = 1; i < static_cast<int>(core.a.size()); ++i) {
            const complex denom = s + static_cast<double>(i) - 1.0;
            if (std::abs(denom) < 1e-8)
                throw pole_error("I(s,z): pole at a non-positive integer");
            value -= core.a[static_cast<size_t>(i)] *
                     std::pow(complex(Y), 1.0 - s - static_cast<double>(i)) / denom;
        }
    }
    return value;
}

// Z(s,z) = sin(pi s)/pi * I(s,z), with each pole of the bracket paired
// against the sine zero analytically so near-integer s stay accurate.
inline complex mellin_z(const MellinCore& core, const complex& s, double* est,
                        int* panels) {
    const complex sin_factor = std::sin(kPi * s) / kPi;
    complex value = sin_factor * quad_parts(core, s, est, panels);
    *est *= std::abs(sin_factor) + 1e-3;
    for (int j = 1; j <= static_cast<int>(core.c.size()); ++j)
        value -= core.c[static_cast<size_t>(j - 1)] *
                 std::pow(complex(core.delta), static_cast<double>(j) - s) *
                 sin_over_pole(s, j);
    if (core.asym_tail) {
        const double Y = core.y_numeric_end;
        const complex y1s = std::pow(complex(Y), 1.0 - s);
        if (std::abs(s - 1.0) < 1e-8)
            throw pole_error("superzeta: simple pole at s=1");
        value -= y1s * (std::log(Y) * sin_over_pole(s, 1) +
                        sin_over_pole(s, 1) / (s - 1.0));
        for (int i = 1; i < static_cast<int>(core.a.size()); ++i)
            value -= core.a[static_cast<size_t>(i)] *
                     std::pow(complex(Y), 1.0 - s - static_cast<double>(i)) *
                     sin_over_pole(s, 1 - i);
    }
    return value;
}

}  // namespace detail

/// Strip representation Z_f(s,z) = (sin(pi s)/pi) int_0^inf (f'/f)(z+y) y^{-s} dy,
/// valid for Re(s) < 1.
inline SuperzetaResult superzeta_integral_rep(const FunctionModel& model, const complex& s,
                                              const complex& z, const EvalContext& ctx = {}) {
    ctx.validate();
    if (!(s.real() < 1.0))
        throw convergence_error("superzeta_integral_rep: requires Re(s) < 1");
    SuperzetaResult out;
    if (s == complex(0.0)) {
        // sin factor is an exact zero
        if (!admissible_for(model, z))
            throw domain_error("superzeta integral: z is not admissible");
        return out;
    }
    detail::MellinCore core = detail::make_mellin_core(model, s.real(), z, 0, ctx);
    double est = 0.0;
    int panels = 0;
    out.value = detail::mellin_z(core, s, &est, &panels);
    out.est_error = est;
    out.branch_flags.delta = core.delta;
    out.branch_flags.y_max = core.y_numeric_end;
    out.branch_flags.quad_panels = panels;
    out.branch_flags.tail_bound = core.zeta_tail_bound;
    if (out.est_error > 100.0 * ctx.target_rel_error * std::max(1.0, std::abs(out.value)))
        throw accuracy_error("superzeta_integral_rep: quadrature failed the accuracy target");
    return out;
}

/// Entire continuation of Z_f(s,z) for Re(s) < mu via the Taylor-split form
/// of the Mellin bracket; removable singularities at positive integers are
/// evaluated analytically.
inline SuperzetaResult superzeta_continued(const FunctionModel& model, const complex& s,
                                           const complex& z, double mu = 0.0,
                                           const EvalContext& ctx = {}) {
    ctx.validate();
    if (mu == 0.0) mu = std::max(1.5, s.real() + 1.5);
    if (!(s.real() < mu))
        throw convergence_error("superzeta_continued: requires Re(s) < mu");
    int n = static_cast<int>(std::floor(mu));
    if (n < 1) n = 1;
    if (n > FunctionModel::kMaxDerivativeOrder)
        throw domain_error("superzeta_continued: mu exceeds the supported derivative order");
    detail::MellinCore core = detail::make_mellin_core(model, s.real(), z, n, ctx);
    SuperzetaResult out;
    double est = 0.0;
    int panels = 0;
    out.value = detail::mellin_z(core, s, &est, &panels);
    out.est_error = est;
    out.branch_flags.delta = core.delta;
    out.branch_flags.y_max = core.y_numeric_end;
    out.branch_flags.quad_panels = panels;
    out.branch_flags.tail_bound = core.zeta_tail_bound;
    out.branch_flags.k0 = n;
    if (out.est_error > 100.0 * ctx.target_rel_error * std::max(1.0, std::abs(out.value)))
        throw accuracy_error("superzeta_continued: quadrature failed the accuracy target");
    return out;
}

/// Residue of I(s,z) at s = n: -(log f)^{(n)}(z)/(n-1)!.
inline complex i_residue(const FunctionModel& model, int n, const complex& z,
                         const EvalContext& ctx = {}) {
    if (n < 1 || n > FunctionModel::kMaxDerivativeOrder)
        throw domain_error("i_residue: n out of range [1,8]");
    return -log_f_derivative(model, n, z, ctx) / factorial(n - 1);
}

/// Verification mode: the same residue extracted numerically from I(s,z) by
/// a trapezoid contour integral on a small circle around s = n.
inline complex i_residue_numeric(const FunctionModel& model, int n, const complex& z,
                                 const EvalContext& ctx = {}, double radius = 0.25,
                                 int nodes = 32) {
    if (n < 1 || n > FunctionModel::kMaxDerivativeOrder)
        throw domain_error("i_residue_numeric: n out of range [1,8]");
    detail::MellinCore core =
        detail::make_mellin_core(model, static_cast<double>(n), z, n + 1, ctx);
    complex acc = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double theta = 2.0 * kPi * k / nodes;
        const complex w = radius * std::exp(complex(0.0, theta));
        double est = 0.0;
        int panels = 0;
        acc += detail::mellin_i(core, static_cast<double>(n) + w, &est, &panels) * w;
    }
    return acc / static_cast<double>(nodes);
}

/// D_f(z) through a numeric s-derivative of the continuation; exposed next to
/// the analytic shortcut below so the two routes can be checked against each
/// other.
inline complex regularized_det_via_derivative(const FunctionModel& model, const complex& z,
                                              const EvalContext& ctx = {}) {
    ctx.validate();
    complex ds = richardson_derivative(
        [&](complex s) {
            return superzeta_continued(model, s, z, 1.75, ctx).value;
        },
        complex(0.0), ctx.derivative_step);
    return std::exp(-ds);
}

/// Zeta-regularized determinant D_f(z) = exp(-dZ/ds|_{s=0}).  For zeta-type f
/// the derivative equals I(0,z) = -log f(z), so D_f(z) = f(z); the shortcut
/// evaluates I(0,z) by quadrature.
inline complex regularized_det(const FunctionModel& model, const complex& z,
                               const EvalContext& ctx = {}) {
    ctx.validate();
    if (model.kind() == FunctionModel::Kind::reciprocal_gamma)
        return regularized_det_via_derivative(model, z, ctx);
    detail::MellinCore core = detail::make_mellin_core(model, 0.0, z, 0, ctx);
    double est = 0.0;
    int panels = 0;
    complex i0 = detail::mellin_i(core, complex(0.0), &est, &panels);
    return std::exp(-i0);
}

}  // namespace superzeta
