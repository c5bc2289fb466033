#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "superzeta/combinatorics.hpp"
#include "superzeta/errors.hpp"
#include "superzeta/eval_context.hpp"
#include "superzeta/gamma.hpp"
#include "superzeta/hurwitz.hpp"
#include "superzeta/result.hpp"
#include "superzeta/superzeta_integral.hpp"

namespace superzeta {

struct ScatteringPole {
    std::complex<double> q;
    int b = 1;  // pole order
};

/// Divisor data of a Selberg zeta function in odd dimension d = 2n+1.
struct SelbergSpecOdd {
    int n = 1;            // d = 2n+1
    int k = 0;            // representation index, 0 <= k <= n
    int d_c_chi = 0;      // sum of cuspidal fixed-space dimensions
    int d_sigma_k = 1;    // dim of the sigma_k representation space
    int e_dk = 0;         // alternating dimension sum, >= 0
    double a_k = 0.0;     // order datum at s = n (times d_sigma_k/2)
    std::vector<ScatteringPole> scattering_poles;

    bool delta_kn() const { return k == n; }

    void validate() const {
        if (n < 1) throw domain_error("SelbergSpecOdd: n must be >= 1");
        if (k < 0 || k > n) throw domain_error("SelbergSpecOdd: k out of range [0,n]");
        if (d_c_chi < 0 || d_sigma_k < 1 || e_dk < 0)
            throw domain_error("SelbergSpecOdd: invalid dimension data");
        for (const auto& sp : scattering_poles)
            if (sp.b < 1) throw domain_error("SelbergSpecOdd: scattering order must be >= 1");
    }
};

/// Divisor data of a Selberg zeta function in even dimension d = 2n.
struct SelbergSpecEven {
    int n = 1;            // d = 2n
    int k = 0;            // 0 <= k <= n-1
    int d_c_chi = 0;
    int d_sigma_k = 1;
    int d_dk = 0;         // d(d,k) = d(sigma_k) - e(d,k) >= 0
    int dim_V_chi = 1;
    long long euler_char = 0;  // E(X_Gamma)
    std::vector<ScatteringPole> scattering_poles;

    void validate() const {
        if (n < 1) throw domain_error("SelbergSpecEven: n must be >= 1");
        if (k < 0 || k > n - 1) throw domain_error("SelbergSpecEven: k out of range [0,n-1]");
        if (d_c_chi < 0 || d_sigma_k < 1 || d_dk < 0 || dim_V_chi < 1)
            throw domain_error("SelbergSpecEven: invalid dimension data");
        for (const auto& sp : scattering_poles)
            if (sp.b < 1) throw domain_error("SelbergSpecEven: scattering order must be >= 1");
    }
};

struct KleinianParams {
    int index_case = 1;        // [Gamma_inf : Gamma_inf'] in {1, 2}
    double c0_abs = 1.0;       // |c_0|
    int m_c0 = 1;              // multiplicity of c_0
    double lattice_coarea = 1.0;  // |P|

    void validate() const {
        if (index_case != 1 && index_case != 2)
            throw domain_error("KleinianParams: index_case must be 1 or 2");
        if (!(c0_abs > 0.0) || m_c0 < 1 || !(lattice_coarea > 0.0))
            throw domain_error("KleinianParams: invalid parameters");
    }
};

/// alpha(k,n,chi) and beta(k,n,chi) of the odd-case regularized product.
inline std::pair<double, double> odd_coefficients(const SelbergSpecOdd& spec) {
    spec.validate();
    const double delta = spec.delta_kn() ? 1.0 : 0.0;
    const double alpha =
        spec.d_c_chi * (spec.e_dk - (1.0 - delta) * spec.d_sigma_k);
    const double beta = (1.0 + delta) * spec.d_c_chi * spec.d_sigma_k;
    return {alpha, beta};
}

namespace detail {

inline complex safe_power_term(double coef, const complex& z, const complex& base_shift,
                               const complex& s) {
    if (coef == 0.0) return 0.0;
    const complex w = z - base_shift;
    if (w.imag() == 0.0 && w.real() <= 0.0)
        throw domain_error("selberg: z - location on the branch cut");
    return coef * std::pow(w, -s);
}

}  // namespace detail

/// Superzeta over the poles of the odd-dimensional Selberg zeta:
///   d_c e(d,k) (z-k)^{-s} + (1/2) d(sigma) a_k (z-n)^{-s}
///   + sum_j d(sigma) b_j (z-(n-q_j))^{-s}
///   + (1+delta_kn) d_c d(sigma) zeta_H(s, z-n+1)
///   - (1-delta_kn) d_c d(sigma) (z-k)^{-s}.
inline SuperzetaResult odd_pole_superzeta(const SelbergSpecOdd& spec, const complex& s,
                                          const complex& z, const EvalContext& ctx = {}) {
    spec.validate();
    ctx.validate();
    const double delta = spec.delta_kn() ? 1.0 : 0.0;
    const double dsig = spec.d_sigma_k;
    const double dc = spec.d_c_chi;
    SuperzetaResult out;
    out.value += detail::safe_power_term(dc * spec.e_dk, z, complex(spec.k), s);
    out.value += detail::safe_power_term(0.5 * dsig * spec.a_k, z, complex(spec.n), s);
    for (const auto& sp : spec.scattering_poles)
        out.value += detail::safe_power_term(dsig * sp.b, z,
                                             complex(spec.n) - sp.q, s);
    const double beta = (1.0 + delta) * dc * dsig;
    if (beta != 0.0)
        out.value += beta * hurwitz_zeta(s, z - complex(spec.n) + 1.0, ctx);
    out.value -= detail::safe_power_term((1.0 - delta) * dc * dsig, z, complex(spec.k), s);
    out.est_error = 1e-14 * (1.0 + std::abs(out.value));
    return out;
}

/// Superzeta over the non-trivial zeros in odd dimension: the explicit pole
/// blocks plus the integral block of the zeta-type model standing in for
/// Z_chi(sigma_k, .).  Simple pole at s=1 with residue beta.
inline SuperzetaResult odd_nontrivial_superzeta(const SelbergSpecOdd& spec,
                                                const FunctionModel& model,
                                                const complex& s, const complex& z,
                                                const EvalContext& ctx = {}) {
    spec.validate();
    ctx.validate();
    const double delta = spec.delta_kn() ? 1.0 : 0.0;
    const double dsig = spec.d_sigma_k;
    const double dc = spec.d_c_chi;
    const auto [alpha, beta] = odd_coefficients(spec);
    SuperzetaResult out;
    out.value += detail::safe_power_term(alpha, z, complex(spec.k), s);
    out.value += detail::safe_power_term(dsig * (spec.a_k / 2.0 - (1.0 + delta) * dc), z,
                                         complex(spec.n), s);
    for (const auto& sp : spec.scattering_poles)
        out.value += detail::safe_power_term(dsig * sp.b, z, complex(spec.n) - sp.q, s);
    if (beta != 0.0)
        out.value += beta * hurwitz_zeta(s, z - complex(spec.n), ctx);
    SuperzetaResult integral = superzeta_continued(model, s, z, 0.0, ctx);
    out.value += integral.value;
    out.est_error = integral.est_error + 1e-14 * (1.0 + std::abs(out.value));
    out.branch_flags = integral.branch_flags;
    return out;
}

/// Right-hand side of the odd-case regularized product:
///   (z-k)^alpha (z-n)^{d(sigma) a_k / 2} prod_j (z-(n-q_j))^{d(sigma) b_j}
///   (Gamma(z-n+1)/sqrt(2pi))^{-beta} f(z).
inline complex odd_regularized_product(const SelbergSpecOdd& spec, const complex& f_value,
                                       const complex& z) {
    spec.validate();
    if (z.imag() == 0.0 && z.real() <= static_cast<double>(spec.n))
        throw domain_error("odd_regularized_product: z on the cut (-inf, n]");
    const auto [alpha, beta] = odd_coefficients(spec);
    const double dsig = spec.d_sigma_k;
    complex result = f_value;
    result *= std::pow(z - complex(spec.k), alpha);
    result *= std::pow(z - complex(spec.n), dsig * spec.a_k / 2.0);
    for (const auto& sp : spec.scattering_poles)
        result *= std::pow(z - (complex(spec.n) - sp.q), dsig * sp.b);
    result *= std::pow(std::exp(log_gamma(z - complex(spec.n) + 1.0)) /
                           std::sqrt(2.0 * kPi),
                       -beta);
    return result;
}

/// Residue of the even-case non-trivial superzeta at s = r in {1..2n}:
///   delta_{1r} d_c d(sigma)
///   + dimV E sum_{j=0}^k (-1)^j C(2n,k-j) [p_{2n,r-1}(z-j) + p_{2n,r-1}(z+j+1)].
inline complex even_residue(const SelbergSpecEven& spec, int r, const complex& z) {
    spec.validate();
    if (r < 1 || r > 2 * spec.n)
        throw domain_error("even_residue: r out of range [1, 2n]");
    complex res = (r == 1) ? complex(static_cast<double>(spec.d_c_chi) * spec.d_sigma_k)
                           : complex(0.0);
    const double ve = static_cast<double>(spec.dim_V_chi) *
                      static_cast<double>(spec.euler_char);
    for (int j = 0; j <= spec.k; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        const double coef = sign * static_cast<double>(binomial(2 * spec.n, spec.k - j));
        res += ve * coef *
               (p_poly(2 * spec.n, r - 1, z - static_cast<double>(j)) +
                p_poly(2 * spec.n, r - 1, z + static_cast<double>(j + 1)));
    }
    return res;
}

/// Even-dimensional non-trivial superzeta: scattering and Hurwitz blocks,
/// the multiple-Hurwitz rewriting of the trivial-zero series, the (z-k)
/// correction, and the integral block of the model.
inline SuperzetaResult even_nontrivial_superzeta(const SelbergSpecEven& spec,
                                                 const FunctionModel& model,
                                                 const complex& s, const complex& z,
                                                 const EvalContext& ctx = {}) {
    spec.validate();
    ctx.validate();
    const double dsig = spec.d_sigma_k;
    const double dc = spec.d_c_chi;
    const double ve = static_cast<double>(spec.dim_V_chi) *
                      static_cast<double>(spec.euler_char);
    SuperzetaResult out;
    for (const auto& sp : spec.scattering_poles)
        out.value += detail::safe_power_term(
            dsig * sp.b, z, complex(spec.n) - 0.5 - sp.q, s);
    if (dc * dsig != 0.0)
        out.value += dc * dsig * hurwitz_zeta(s, z - complex(spec.n) + 1.5, ctx);
    if (ve != 0.0) {
        for (int j = 0; j <= spec.k; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            const double coef = sign * static_cast<double>(binomial(2 * spec.n, spec.k - j));
            out.value += ve * coef *
                         (multiple_hurwitz_zeta(2 * spec.n, s, z - static_cast<double>(j), ctx) +
                          multiple_hurwitz_zeta(2 * spec.n, s, z + static_cast<double>(j + 1), ctx));
        }
    }
    const double k_sign = (spec.k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
    out.value += detail::safe_power_term(k_sign * (ve - 1.0) - dc * spec.d_dk, z,
                                         complex(spec.k), s);
    SuperzetaResult integral = superzeta_continued(model, s, z, 0.0, ctx);
    out.value += integral.value;
    out.est_error = integral.est_error + 1e-13 * (1.0 + std::abs(out.value));
    out.branch_flags = integral.branch_flags;
    return out;
}

/// Right-hand side of the even-case regularized product.  The multiple-gamma
/// block enters with exponent -(-1)^j C(2n,k-j) dimV E, the sign forced by
/// Gamma_m = exp(+d/ds zeta_m|_0) and the derivative identity; the product
/// over j runs to k.
inline complex even_regularized_product(const SelbergSpecEven& spec, const complex& f_value,
                                        const complex& z, const EvalContext& ctx = {}) {
    spec.validate();
    if (z.imag() == 0.0 && z.real() <= static_cast<double>(spec.n))
        throw domain_error("even_regularized_product: z on the cut (-inf, n]");
    const double dsig = spec.d_sigma_k;
    const double dc = spec.d_c_chi;
    const double ve = static_cast<double>(spec.dim_V_chi) *
                      static_cast<double>(spec.euler_char);
    const double k_sign = (spec.k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
    const double gamma_exp = dc * spec.d_dk + k_sign * (1.0 - ve);
    complex result = f_value;
    result *= std::pow(z - complex(spec.k), -gamma_exp);
    for (const auto& sp : spec.scattering_poles)
        result *= std::pow(z - (complex(spec.n) - 0.5 - sp.q), dsig * sp.b);
    result *= std::pow(std::exp(log_gamma(z - complex(spec.n) + 1.5)) /
                           std::sqrt(2.0 * kPi),
                       -dc * dsig);
    if (ve != 0.0) {
        for (int j = 0; j <= spec.k; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            const double coef = sign * static_cast<double>(binomial(2 * spec.n, spec.k - j));
            const complex block =
                multiple_gamma(2 * spec.n, z - static_cast<double>(j), ctx) *
                multiple_gamma(2 * spec.n, z + static_cast<double>(j + 1), ctx);
            result *= std::pow(block, -coef * ve);
        }
    }
    return result;
}

/// Exact verification of the three binomial transformation identities used
/// in the even-case series rewriting.  Identity 1 applies for m < k, the
/// other two for positive m; out-of-range m report vacuous truth.
struct BinomialIdentityResult {
    bool identity1 = true;
    bool identity2 = true;
    bool identity3 = true;
    bool all() const { return identity1 && identity2 && identity3; }
};

inline BinomialIdentityResult binomial_identity_check(int n, int k, int m) {
    if (n < 1 || k < 0 || m < 0)
        throw domain_error("binomial_identity_check: need n >= 1, k >= 0, m >= 0");
    BinomialIdentityResult out;
    if (m <= k - 1) {
        std::int64_t sum = 0;
        for (int j = 0; j <= k - m; ++j) {
            std::int64_t term = binomial(2 * n, k - m - j) * binomial(2 * n + j - 1, j);
            sum += (j % 2 == 0) ? term : -term;
        }
        out.identity1 = (sum == 0);
    }
    if (m >= 1) {
        std::int64_t lhs = 0;
        for (int j = 0; j <= k; ++j) {
            std::int64_t term =
                binomial(2 * n, k - j) * binomial(2 * n + m + j - 1, m + j);
            lhs += (j % 2 == 0) ? term : -term;
        }
        out.identity2 =
            (lhs == binomial(2 * n + m - 1, m + k) * binomial(m + k - 1, k));

        std::int64_t lhs3 = 0;
        const int top = std::min(k, m - 1);
        for (int j = 0; j <= top; ++j) {
            std::int64_t term =
                binomial(2 * n, k - j) * binomial(2 * n + m - j - 2, m - j - 1);
            lhs3 += (j % 2 == 0) ? term : -term;
        }
        out.identity3 =
            (lhs3 == binomial(2 * n + m - 1, k) * binomial(2 * n + m - k - 2, m - 1));
    }
    return out;
}

/// Determinant and scattering-quotient prefactors of the Kleinian cases.
/// Alongside the values, the |c_0| / |P| / 2 exponents are reported as
/// linear functions of s so their cancellation in the phi quotient can be
/// asserted symbolically.
struct KleinianConstants {
    struct Exponents {
        double c0_s = 0.0, c0_const = 0.0;  // exponent of |c_0|: c0_s * s + c0_const
        double P_s = 0.0, P_const = 0.0;    // exponent of |P|
        double two_s = 0.0, two_const = 0.0;  // exponent of 2
    };
    complex det_prefactor_plus;
    complex det_prefactor_minus;
    complex phi_quotient_prefactor;
    Exponents plus_exp, minus_exp, phi_exp;
};

inline KleinianConstants kleinian_constants(const KleinianParams& p, const complex& s) {
    p.validate();
    KleinianConstants out;
    const double c0 = p.c0_abs;
    const double P = p.lattice_coarea;
    const double m = p.m_c0;
    const complex c0_pow = std::exp((2.0 * s + 2.0) * std::log(c0));
    const complex P_pow = std::exp(s * std::log(P));
    if (p.index_case == 1) {
        out.det_prefactor_plus = std::sqrt(2.0 * kPi);
        out.det_prefactor_minus = c0_pow * P_pow / (kPi * m) * std::sqrt(2.0 * kPi);
        out.phi_quotient_prefactor = kPi * m / (c0_pow * P_pow);
        out.minus_exp = {2.0, 2.0, 1.0, 0.0, 0.0, 0.0};
        out.phi_exp = {-2.0, -2.0, -1.0, 0.0, 0.0, 0.0};
    } else {
        out.det_prefactor_plus =
            std::sqrt(kPi) * std::exp((3.0 - s) / 2.0 * std::log(2.0));
        out.det_prefactor_minus = c0_pow * P_pow / (kPi * m) * std::sqrt(kPi) *
                                  std::exp((5.0 - s) / 2.0 * std::log(2.0));
        out.phi_quotient_prefactor = kPi * m / (2.0 * c0_pow * P_pow);
        out.plus_exp = {0.0, 0.0, 0.0, 0.0, -0.5, 1.5};
        out.minus_exp = {2.0, 2.0, 1.0, 0.0, -0.5, 2.5};
        out.phi_exp = {-2.0, -2.0, -1.0, 0.0, 0.0, -1.0};
    }
    return out;
}

}  // namespace superzeta
