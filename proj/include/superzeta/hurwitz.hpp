#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "superzeta/combinatorics.hpp"
#include "superzeta/errors.hpp"
#include "superzeta/eval_context.hpp"
#include "superzeta/gamma.hpp"
#include "superzeta/numdiff.hpp"

namespace superzeta {

namespace detail {

// z acceptable for Hurwitz-type series: principal powers of z+l must stay off
// the cut for every l >= 0, which means z off (-inf, 0] when real.
inline void check_hurwitz_argument(const complex& z, const char* who) {
    if (std::abs(z.imag()) < 1e-300 && z.real() <= 1e-300)
        throw domain_error(std::string(who) + ": z on the branch cut (-inf,0]");
}

}  // namespace detail

/// Hurwitz zeta: analytic continuation of sum_{l>=0} (z+l)^{-s}.
///
/// Euler-Maclaurin with an adaptive shift: direct terms until |z+N| is large
/// enough, then the integral term, the half term and Bernoulli corrections.
/// Relative accuracy is near machine precision for moderate |s|.
inline complex hurwitz_zeta(const complex& s, const complex& z,
                            const EvalContext& ctx = {}) {
    detail::check_hurwitz_argument(z, "hurwitz_zeta");
    if (std::abs(s - 1.0) < 1e-13)
        throw pole_error("hurwitz_zeta: pole at s=1");
    const double want = std::max(25.0, 1.6 * std::abs(s));
    int shift = 0;
    if (std::abs(z) < want) {
        shift = static_cast<int>(std::ceil(want - std::min(z.real(), want)));
        while (std::abs(z + static_cast<double>(shift)) < want) ++shift;
    }
    complex sum = 0.0;
    for (int l = 0; l < shift; ++l) sum += std::pow(z + static_cast<double>(l), -s);
    const complex w = z + static_cast<double>(shift);
    sum += std::pow(w, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(w, -s);
    // Bernoulli tail: B_2k/(2k)! * (s)_{2k-1} * w^{-s-2k+1}
    complex rising = s;  // (s)_1
    const complex w2 = w * w;
    complex wpow = std::pow(w, -s - 1.0);
    for (int k = 1; k <= 12; ++k) {
        sum += bernoulli_even(2 * k) / factorial(2 * k) * rising * wpow;
        rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        wpow /= w2;
    }
    (void)ctx;
    return sum;
}

/// d/ds zeta_H(s,z) at s = 0, computed as a numeric derivative of the
/// continuation (independent of the log Gamma closed form, so the two can be
/// tested against each other).
inline complex hurwitz_zeta_ds0(const complex& z, const EvalContext& ctx = {}) {
    detail::check_hurwitz_argument(z, "hurwitz_zeta_ds0");
    return richardson_derivative(
        [&](complex s) { return hurwitz_zeta(s, z, ctx); }, complex(0.0),
        ctx.derivative_step);
}

/// p_{m,j}(z): the reduction polynomials of the multiple Hurwitz zeta,
///   p_{m,j}(z) = 1/(m-1)! sum_{l=j}^{m-1} (-1)^{m+1-j} C(l,j) s(m,l+1) z^{l-j}.
inline complex p_poly(int m, int j, const complex& z) {
    if (m < 1) throw domain_error("p_poly: m must be >= 1");
    if (j < 0 || j > m - 1) throw domain_error("p_poly: j out of range [0, m-1]");
    const StirlingTable& st = stirling_table();
    if (m > st.max_order()) throw domain_error("p_poly: m exceeds Stirling table");
    const double sign = ((m + 1 - j) % 2 == 0) ? 1.0 : -1.0;
    complex sum = 0.0;
    complex zp = 1.0;
    for (int l = j; l <= m - 1; ++l) {
        sum += static_cast<double>(binomial(l, j)) * static_cast<double>(st(m, l + 1)) * zp;
        zp *= z;
    }
    return sign / factorial(m - 1) * sum;
}

/// Multiple Hurwitz zeta zeta_m(s,z) = sum_l C(m+l-1,l) (z+l)^{-s}, continued
/// through the Hurwitz reduction zeta_m = sum_j p_{m,j}(z) zeta_H(s-j, z).
inline complex multiple_hurwitz_zeta(int m, const complex& s, const complex& z,
                                     const EvalContext& ctx = {}) {
    if (m < 1) throw domain_error("multiple_hurwitz_zeta: m must be >= 1");
    detail::check_hurwitz_argument(z, "multiple_hurwitz_zeta");
    for (int k = 1; k <= m; ++k)
        if (std::abs(s - static_cast<double>(k)) < 1e-13)
            throw pole_error("multiple_hurwitz_zeta: pole at s in {1..m}");
    complex sum = 0.0;
    for (int j = 0; j <= m - 1; ++j)
        sum += p_poly(m, j, z) * hurwitz_zeta(s - static_cast<double>(j), z, ctx);
    return sum;
}

/// Multiple gamma Gamma_m(z) = exp(d/ds zeta_m(s,z)|_{s=0}), with the
/// derivative taken numerically from the reduction.  Gamma_1 = Gamma/sqrt(2pi).
inline complex multiple_gamma(int m, const complex& z, const EvalContext& ctx = {}) {
    if (m < 1) throw domain_error("multiple_gamma: m must be >= 1");
    detail::check_hurwitz_argument(z, "multiple_gamma");
    complex ds = richardson_derivative(
        [&](complex s) { return multiple_hurwitz_zeta(m, s, z, ctx); }, complex(0.0),
        ctx.derivative_step);
    return std::exp(ds);
}

}  // namespace superzeta
