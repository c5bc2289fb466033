#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "superzeta/combinatorics.hpp"
#include "superzeta/errors.hpp"
#include "superzeta/eval_context.hpp"
#include "superzeta/gamma.hpp"
#include "superzeta/quadrature.hpp"
#include "superzeta/result.hpp"
#include "superzeta/zero_sequence.hpp"

namespace superzeta {

/// Coefficients of the large-z expansion
///   log Delta_f(z) = sum_j a~_j z^j (log z - H_j) + sum_j b_j z^j
///                  + sum_k a_k z^{mu_k} + h_n(z)
/// valid in the sector |arg z| < theta.
struct AsymptoticExpansion {
    int m = 1;                        // floor of the order kappa
    std::vector<std::complex<double>> a_tilde;  // a~_0 .. a~_m
    std::vector<std::complex<double>> b;        // b_0 .. b_m
    struct PowerTerm {
        std::complex<double> a;
        double mu;
    };
    std::vector<PowerTerm> power_terms;  // 1 > mu_1 > mu_2 > ...
    double sector_theta = 0.75 * kPi;

    void validate() const {
        if (m < 0 || m > 7) throw domain_error("AsymptoticExpansion: m out of range [0,7]");
        if (static_cast<int>(a_tilde.size()) != m + 1 || static_cast<int>(b.size()) != m + 1)
            throw domain_error("AsymptoticExpansion: coefficient lists must have m+1 entries");
        double prev = 1.0;
        for (const auto& t : power_terms) {
            if (!(t.mu < prev))
                throw domain_error("AsymptoticExpansion: mu_k must be strictly decreasing below 1");
            prev = t.mu;
        }
        if (!(sector_theta > 0.0 && sector_theta < kPi))
            throw domain_error("AsymptoticExpansion: sector_theta must lie in (0, pi)");
    }

    /// Harmonic constants H_0 = 0, H_j = 1 + 1/2 + ... + 1/j.
    static double harmonic(int j) {
        double h = 0.0;
        for (int i = 1; i <= j; ++i) h += 1.0 / i;
        return h;
    }
};

/// Hadamard data of an entire function: its zero divisor (origin handled
/// separately through r) and the genus m.
struct HadamardData {
    ZeroSequence zeros;
    int zero_order_at_origin = 0;  // r
    int genus = 1;                 // m

    void validate() const {
        if (zero_order_at_origin < 0) throw domain_error("HadamardData: r must be >= 0");
        if (genus < 0 || genus > 7) throw domain_error("HadamardData: genus out of range [0,7]");
    }

    bool admissible(const std::complex<double>& z) const {
        if (zero_order_at_origin > 0 && z.imag() == 0.0 && z.real() <= 0.0) return false;
        return zeros.admissible(z);
    }
};

/// (log Delta_f)^{(m+1)}(z) = (-1)^m m! [ sum_k (z - y_k)^{-(m+1)} + r z^{-(m+1)} ],
/// by absolutely convergent summation; `order` must equal genus+1.
inline complex hadamard_log_derivative(const HadamardData& data, int order,
                                       const complex& z, const EvalContext& ctx = {},
                                       double* est = nullptr) {
    data.validate();
    if (order != data.genus + 1)
        throw domain_error("hadamard_log_derivative: order must equal genus+1");
    if (!data.admissible(z))
        throw domain_error("hadamard_log_derivative: z is not admissible");
    const int m = data.genus;
    const complex s(static_cast<double>(m + 1), 0.0);
    double tail_est = 0.0;
    long long used = 0;
    complex sum = data.zeros.empty()
                      ? complex(0.0)
                      : detail::zero_sequence_power_sum(data.zeros, s, z, ctx, &tail_est, &used);
    sum += static_cast<double>(data.zero_order_at_origin) * std::pow(z, -s);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    if (est) *est += factorial(m) * tail_est;
    return sign * factorial(m) * sum;
}

namespace detail {

// (m+1)-fold derivative of the explicit expansion blocks, i.e. what must be
// subtracted from (log Delta)^{(m+1)} to leave h_{k0}^{(m+1)}.
inline complex expansion_derivative_m1(const AsymptoticExpansion& exp, int k0,
                                       const complex& w) {
    const int m = exp.m;
    complex sum = 0.0;
    for (int j = 0; j <= m; ++j) {
        const double sign = ((m - j) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * factorial(j) * factorial(m - j) * exp.a_tilde[static_cast<size_t>(j)] *
               std::pow(w, static_cast<double>(j - m - 1));
    }
    for (int k = 1; k < k0; ++k) {
        const auto& t = exp.power_terms[static_cast<size_t>(k - 1)];
        double fall = 1.0;
        for (int i = 0; i <= m; ++i) fall *= (t.mu - i);
        sum += t.a * fall * std::pow(w, t.mu - m - 1.0);
    }
    return sum;
}

inline int choose_k0(const AsymptoticExpansion& exp, double re_s, int forced) {
    const int count = static_cast<int>(exp.power_terms.size());
    if (forced > 0) {
        if (forced > count)
            throw domain_error("voros_superzeta: forced k0 exceeds stored power terms");
        if (!(exp.power_terms[static_cast<size_t>(forced - 1)].mu < re_s - 1.0))
            throw domain_error("voros_superzeta: forced k0 violates mu_k0 < Re(s) - 1");
        return forced;
    }
    // prefer extra margin: a faster-decaying remainder keeps the tail short
    for (int k = 1; k <= count; ++k)
        if (exp.power_terms[static_cast<size_t>(k - 1)].mu < re_s - 4.0) return k;
    for (int k = count; k >= 1; --k)
        if (exp.power_terms[static_cast<size_t>(k - 1)].mu < re_s - 1.0) return k;
    throw domain_error("voros_superzeta: stored expansion too short for this Re(s)");
}

}  // namespace detail

/// Meromorphic continuation of Z_f(s,z) to Re(s) < m+1 from the asymptotic
/// expansion of log Delta_f: two explicit blocks plus a remainder Mellin
/// integral of h_{k0}^{(m+1)}.  Poles of the continuation at s in {1..m} and
/// s = mu_k surface as pole errors.
inline SuperzetaResult voros_superzeta(const AsymptoticExpansion& exp,
                                       const HadamardData& data, const complex& s,
                                       const complex& z, const EvalContext& ctx = {},
                                       int force_k0 = 0) {
    ctx.validate();
    exp.validate();
    data.validate();
    if (exp.m != data.genus)
        throw domain_error("voros_superzeta: expansion m and Hadamard genus disagree");
    const int m = exp.m;
    if (!(s.real() < m + 1.0))
        throw convergence_error("voros_superzeta: requires Re(s) < m+1");
    if (!data.admissible(z)) throw domain_error("voros_superzeta: z is not admissible");
    if (!(std::abs(std::arg(z)) < exp.sector_theta))
        throw domain_error("voros_superzeta: z outside the expansion sector");

    SuperzetaResult out;
    const int k0 = detail::choose_k0(exp, s.real(), force_k0);
    out.branch_flags.k0 = k0;
    const double mu_k0 = exp.power_terms[static_cast<size_t>(k0 - 1)].mu;

    // block (i)
    complex block1 = 0.0;
    for (int j = 0; j <= m; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        block1 += sign * factorial(j) * exp.a_tilde[static_cast<size_t>(j)] *
                  gamma_ratio(s, j) * std::pow(z, static_cast<double>(j) - s);
    }

    // block (ii)
    complex block2 = 0.0;
    for (int k = 1; k < k0; ++k) {
        const auto& t = exp.power_terms[static_cast<size_t>(k - 1)];
        block2 -= t.a * gamma_ratio_general(s, t.mu) * recip_gamma(complex(-t.mu)) *
                  std::pow(z, t.mu - s);
    }

    // block (iii): remainder integral
    double sum_tail_est = 0.0;  // worst Euler-Maclaurin tail over integrand evals
    auto h_m1 = [&](double y) {
        double e = 0.0;
        complex v = hadamard_log_derivative(data, m + 1, z + y, ctx, &e) -
                    detail::expansion_derivative_m1(exp, k0, z + y);
        sum_tail_est = std::max(sum_tail_est, e);
        return v;
    };
    const double tol = 0.25 * ctx.target_rel_error;
    const int max_panels = 100 * ctx.quadrature_nodes;
    // magnitude scale of the remainder for the truncation bound
    double probe_y = std::max(10.0, 2.0 * std::abs(z));
    double scale = 0.0;
    for (double y : {probe_y, 2.0 * probe_y})
        scale = std::max(scale, std::abs(h_m1(y)) *
                                    std::pow(std::abs(z + y), m + 1.0 - mu_k0));
    scale = std::max(scale, 1e-30) * 2.0;
    const double decay = s.real() - mu_k0;  // tail integrand ~ y^{mu_k0 - Re s - 1}
    double y_max = std::pow(scale / (tol * decay), 1.0 / decay) + probe_y;
    y_max = std::min(std::max(y_max, 20.0), 5.0e4);
    const double tail_bound = scale * std::pow(y_max, -decay) / decay;

    const double split = 1.0;
    complex integral = 0.0;
    double est = 0.0;
    const complex s_shift = s - static_cast<double>(m);  // weight y^{m-s}
    if (s_shift.real() > 0.25) {
        QuadResult q = integrate_power_endpoint(h_m1, s_shift, split, tol);
        integral += q.value;
        est += q.est_error;
        out.branch_flags.quad_panels += q.panels;
    } else {
        QuadResult q = integrate_adaptive(
            [&](double y) {
                return h_m1(y) * std::pow(complex(y), static_cast<double>(m) - s);
            },
            0.0, split, tol, max_panels);
        integral += q.value;
        est += q.est_error;
        out.branch_flags.quad_panels += q.panels;
    }
    QuadResult q2 = integrate_adaptive(
        [&](double y) {
            return h_m1(y) * std::pow(complex(y), static_cast<double>(m) - s);
        },
        split, y_max, tol, max_panels);
    integral += q2.value;
    est += q2.est_error + tail_bound;
    out.branch_flags.quad_panels += q2.panels;
    out.branch_flags.y_max = y_max;
    out.branch_flags.tail_bound = tail_bound;

    const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
    const complex prefactor =
        sign_m * recip_gamma(static_cast<double>(m + 1) - s) * recip_gamma(s);
    out.value = block1 + block2 + prefactor * integral;
    est += sum_tail_est * (y_max + 1.0);  // correlated zero-sum tails
    out.est_error = est * std::abs(prefactor) + 1e-15 * std::abs(out.value);
    return out;
}

/// Determinant from the expansion: D_f(z) = e^{-(sum_j b_j z^j)} Delta_f(z).
/// `delta_f` supplies the Hadamard product value (for the shipped fixtures,
/// the function itself).
inline complex voros_det(const AsymptoticExpansion& exp,
                         const std::function<complex(complex)>& delta_f, const complex& z) {
    exp.validate();
    complex poly = 0.0;
    complex zp = 1.0;
    for (const auto& bj : exp.b) {
        poly += bj * zp;
        zp *= z;
    }
    return std::exp(-poly) * delta_f(z);
}

/// Canonical test expansion: Stirling's series rearranged for log(1/Gamma),
///   log(1/Gamma(z)) = (1/2) log z - z(log z - 1) - (1/2)log(2pi)
///                     - sum_k B_{2k}/(2k(2k-1)) z^{1-2k} + ...
/// The superzeta of 1/Gamma is the Hurwitz zeta, which makes this fixture a
/// complete cross-check of the continuation.
inline AsymptoticExpansion stirling_expansion(int power_terms = 8) {
    AsymptoticExpansion e;
    e.m = 1;
    e.a_tilde = {0.5, -1.0};
    e.b = {-kLogSqrt2Pi, 0.0};
    for (int k = 1; k <= power_terms; ++k)
        e.power_terms.push_back(
            {-bernoulli_even(2 * k) / (2.0 * k * (2.0 * k - 1.0)), 1.0 - 2.0 * k});
    e.sector_theta = 0.75 * kPi;
    return e;
}

/// Divisor of 1/Gamma: simple zero at the origin plus the progression
/// -1, -2, -3, ...
inline HadamardData reciprocal_gamma_hadamard() {
    HadamardData d;
    d.zeros.add_progression(complex(-1.0), 1);
    d.zero_order_at_origin = 1;
    d.genus = 1;
    return d;
}

}  // namespace superzeta
