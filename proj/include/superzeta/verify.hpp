#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "superzeta/divisor.hpp"
#include "superzeta/hurwitz.hpp"
#include "superzeta/numdiff.hpp"
#include "superzeta/selberg.hpp"
#include "superzeta/superzeta_integral.hpp"
#include "superzeta/voros.hpp"

namespace superzeta::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_err = 0.0;
    double tol = 0.0;
    std::string detail;
};

namespace detail {

using C = std::complex<double>;

inline CheckResult bounded(const std::string& name, double err, double tol,
                           const std::string& detail = "") {
    return {name, err <= tol, err, tol, detail};
}

inline double rel(const C& got, const C& want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

// contour residue of a meromorphic function at p
template <typename F>
C circle_residue(F&& f, C p, double radius = 0.3, int nodes = 24) {
    C acc = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double th = 2.0 * kPi * i / nodes;
        const C w = radius * std::exp(C(0.0, th));
        acc += f(p + w) * w;
    }
    return acc / static_cast<double>(nodes);
}

inline double raw_even_weight(int n, int k, double l) {
    return binomial_real(2 * n + l - 1, 2 * n - 1 - k) * binomial_real(l + k - 1, k) +
           binomial_real(2 * n + l - 1, k) * binomial_real(2 * n + l - k - 2, 2 * n - k - 1);
}

inline SelbergSpecOdd odd_fixture() {
    SelbergSpecOdd s;
    s.n = 1;
    s.k = 0;
    s.d_c_chi = 1;
    s.d_sigma_k = 1;
    s.e_dk = 1;
    s.a_k = 0.5;
    s.scattering_poles = {{C(0.3, 0.0), 1}};
    return s;
}

inline SelbergSpecEven even_fixture() {
    SelbergSpecEven s;
    s.n = 1;
    s.k = 0;
    s.d_c_chi = 1;
    s.d_sigma_k = 1;
    s.d_dk = 1;
    s.dim_V_chi = 1;
    s.euler_char = 1;
    s.scattering_poles = {{C(0.4, 0.0), 1}};
    return s;
}

inline SelbergSpecEven even_fixture_n2() {
    SelbergSpecEven s;
    s.n = 2;
    s.k = 1;
    s.d_c_chi = 1;
    s.d_sigma_k = 2;
    s.d_dk = 1;
    s.dim_V_chi = 1;
    s.euler_char = -2;
    s.scattering_poles = {{C(0.6, 0.0), 1}};
    return s;
}

}  // namespace detail

/// Lerch identity: exp(-d/ds zeta_H(s,z)|_0) = sqrt(2pi)/Gamma(z).
inline CheckResult check_lerch() {
    using detail::C;
    double worst = 0.0;
    std::vector<C> grid;
    for (double z = 0.5; z <= 10.0; z += 0.5) grid.push_back(C(z));
    grid.push_back(C(2.0, 1.0));
    grid.push_back(C(3.0, 2.0));
    for (const C& z : grid) {
        const C got = std::exp(-hurwitz_zeta_ds0(z));
        const C want = std::sqrt(2.0 * kPi) * std::exp(-log_gamma(z));
        worst = std::max(worst, detail::rel(got, want));
    }
    return detail::bounded("lerch identity exp(-zeta_H'(0,z)) = sqrt(2pi)/Gamma(z)", worst,
                           1e-9);
}

/// Direct sum vs continued integral form for f(z) = 1 - 2^{-z}.
inline CheckResult check_overlap() {
    using detail::C;
    auto model = FunctionModel::dirichlet_polynomial(2.0);
    auto zeros = *model.zero_oracle();
    double worst = 0.0;
    for (double sr : {1.5, 2.0, 2.5}) {
        for (const C& z : {C(1.0), C(2.0), C(1.0, 1.0)}) {
            const C direct = superzeta_direct(zeros, C(sr), z).value;
            const C cont = superzeta_continued(model, C(sr), z, 4.0).value;
            worst = std::max(worst, std::abs(direct - cont) / std::abs(direct));
        }
    }
    const double ref = 2.0 * std::log(2.0) * std::log(2.0);
    worst = std::max(worst,
                     std::abs(superzeta_direct(zeros, C(2.0), C(1.0)).value.real() - ref) /
                         ref);
    return detail::bounded("overlap superzeta_direct vs superzeta_continued", worst, 1e-6);
}

/// Determinant identity D_f(z) = f(z) for the Dirichlet polynomial model.
inline CheckResult check_determinant_identity() {
    using detail::C;
    auto model = FunctionModel::dirichlet_polynomial(2.0);
    double worst = 0.0;
    for (const C& z : {C(2.0), C(3.0), C(5.0, 2.0), C(10.0)}) {
        const C det = regularized_det(model, z);
        const C f = f_value(model, z);
        worst = std::max(worst, detail::rel(det, f));
    }
    return detail::bounded("determinant identity D_f(z) = f(z)", worst, 1e-6);
}

/// Residues of I(s,z) at s = 1,2,3: closed form vs contour extraction.
inline CheckResult check_i_residues() {
    using detail::C;
    auto model = FunctionModel::dirichlet_polynomial(2.0);
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const C closed = i_residue(model, n, C(2.0));
        const C numeric = i_residue_numeric(model, n, C(2.0));
        worst = std::max(worst, std::abs(closed - numeric));
    }
    return detail::bounded("residues of I(s,z) at s=1,2,3", worst, 1e-5);
}

/// zeta_2 reduction and the residues of zeta_m at s = m.
inline CheckResult check_multiple_hurwitz() {
    using detail::C;
    double worst = 0.0;
    for (const C& s : {C(-1.5), C(-0.5), C(0.5), C(2.5), C(3.5), C(0.5, 1.0)}) {
        for (const C& z : {C(0.7), C(1.3), C(2.5), C(3.0, 1.0)}) {
            const C lhs = multiple_hurwitz_zeta(2, s, z);
            const C rhs = hurwitz_zeta(s - 1.0, z) + (1.0 - z) * hurwitz_zeta(s, z);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
    }
    CheckResult reduction =
        detail::bounded("zeta_2 reduction to Hurwitz zetas", worst, 1e-10);

    double worst_res = 0.0;
    for (int m = 1; m <= 4; ++m) {
        const C res = detail::circle_residue(
            [&](C s) { return multiple_hurwitz_zeta(m, s, C(1.4)); },
            C(static_cast<double>(m)));
        worst_res = std::max(worst_res, std::abs(res - 1.0 / factorial(m - 1)));
    }
    CheckResult residues =
        detail::bounded("residue of zeta_m at s=m equals 1/(m-1)!", worst_res, 1e-8);
    return {reduction.name + " + " + residues.name, reduction.pass && residues.pass,
            std::max(reduction.max_err, residues.max_err), 1e-8, ""};
}

/// Multiple-Hurwitz reduction against the defining series, m in {1,2,3}.
inline CheckResult check_multizeta_series() {
    using detail::C;
    double worst = 0.0;
    for (int m : {1, 2, 3}) {
        const C s(m + 1.5, 0.0);
        for (const C& z : {C(1.0), C(2.2)}) {
            // oracle: truncated series with a closed-form polynomial tail
            C series = 0.0;
            const long long L = 200000;
            for (long long l = 0; l < L; ++l)
                series += binomial_real(static_cast<double>(m + l - 1), m - 1) *
                          std::pow(z + static_cast<double>(l), -s);
            // tail: C(m+x-1, m-1) expanded around (z+x); integral + half term
            auto g = [&](double x) {
                return binomial_real(static_cast<double>(m) + x - 1.0, m - 1) *
                       std::pow(z + x, -s);
            };
            const double M = static_cast<double>(L);
            QuadResult tail = integrate_adaptive(
                [&](double t) { return g(M / t) * (M / (t * t)); }, 1e-10, 1.0, 1e-13);
            const C gp = (g(M + 1e-2) - g(M - 1e-2)) / 2e-2;
            series += tail.value + 0.5 * g(M) - gp / 12.0;
            const C reduced = multiple_hurwitz_zeta(m, s, z);
            worst = std::max(worst, std::abs(series - reduced) /
                                        std::max(1.0, std::abs(series)));
        }
    }
    return detail::bounded("multiple Hurwitz reduction vs defining series", worst, 1e-8);
}

/// Voros continuation against the Hurwitz zeta on the Stirling fixture.
inline CheckResult check_voros() {
    using detail::C;
    auto exp_fix = stirling_expansion();
    auto had = reciprocal_gamma_hadamard();
    double worst = 0.0;
    for (double sr : {-1.5, -1.0, -0.5, 0.5})
        for (double zr : {1.5, 2.0, 3.0})
            worst = std::max(
                worst, detail::rel(voros_superzeta(exp_fix, had, C(sr), C(zr)).value,
                                   hurwitz_zeta(C(sr), C(zr))));
    worst = std::max(worst, std::abs(voros_superzeta(exp_fix, had, C(-1.0), C(2.0)).value -
                                     C(-13.0 / 12.0)));
    CheckResult cont = detail::bounded("voros_superzeta matches hurwitz_zeta", worst, 1e-6);

    double worst_det = 0.0;
    auto delta_f = [](C z) { return std::exp(-log_gamma(z)); };
    for (double zr : {1.5, 2.0, 3.0}) {
        const C det = voros_det(exp_fix, delta_f, C(zr));
        const C want = std::sqrt(2.0 * kPi) * std::exp(-log_gamma(C(zr)));
        worst_det = std::max(worst_det, detail::rel(det, want));
    }
    CheckResult det = detail::bounded("voros_det equals sqrt(2pi)/Gamma", worst_det, 1e-8);
    return {cont.name + " + " + det.name, cont.pass && det.pass,
            std::max(cont.max_err, det.max_err), 1e-6, ""};
}

/// Exact binomial transformation identities over the full documented range.
inline CheckResult check_binomial() {
    long long fails = 0;
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= std::min(n, 8); ++k)
            for (int m = 0; m <= 12; ++m)
                if (!binomial_identity_check(n, k, m).all()) ++fails;
    CheckResult r;
    r.name = "binomial transformation identities (exact)";
    r.pass = fails == 0;
    r.max_err = static_cast<double>(fails);
    r.tol = 0.0;
    return r;
}

/// Even-case series rewriting: raw weighted series vs zeta_{2n} blocks.
inline CheckResult check_even_rewriting() {
    using detail::C;
    double worst = 0.0;
    for (int n : {1, 2}) {
        for (int k = 0; k <= n - 1; ++k) {
            for (const C& s : {C(2.0 * n + 1.5, 0.0), C(2.0 * n + 1.5, 0.7)}) {
                const C z(2.3, 0.0);
                C lhs = 0.0;
                const long long L = 20000;
                for (long long l = 1; l <= L; ++l)
                    lhs += detail::raw_even_weight(n, k, static_cast<double>(l)) *
                           std::pow(z + static_cast<double>(l), -s);
                auto g = [&](double x) {
                    return detail::raw_even_weight(n, k, x) * std::pow(z + x, -s);
                };
                const double M = static_cast<double>(L + 1);
                QuadResult tail = integrate_adaptive(
                    [&](double t) { return g(M / t) * (M / (t * t)); }, 1e-12, 1.0, 1e-13);
                const C gp = (g(M + 1e-3) - g(M - 1e-3)) / 2e-3;
                lhs += tail.value + 0.5 * g(M) - gp / 12.0;

                C rhs = 0.0;
                for (int j = 0; j <= k; ++j) {
                    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
                    const double coef =
                        sign * static_cast<double>(binomial(2 * n, k - j));
                    rhs += coef *
                           (multiple_hurwitz_zeta(2 * n, s, z - static_cast<double>(j)) +
                            multiple_hurwitz_zeta(2 * n, s, z + static_cast<double>(j + 1)));
                }
                rhs += ((k % 2 == 0) ? -1.0 : 1.0) * std::pow(z - static_cast<double>(k), -s);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
    }
    return detail::bounded("even-case series rewriting", worst, 1e-8);
}

/// Odd-case consistency: regularized product duality, residue at s=1, and
/// the Remark-4.2 splitting identity on the synthetic fixture.
inline CheckResult check_selberg_odd() {
    using detail::C;
    auto spec = detail::odd_fixture();
    auto model = FunctionModel::dirichlet_polynomial(2.0);
    const C z(2.7, 0.0);

    const C ds = richardson_derivative(
        [&](C s) { return odd_nontrivial_superzeta(spec, model, s, z).value; }, C(0.0),
        0.02);
    const C lhs = std::exp(-ds);
    const C rhs = odd_regularized_product(spec, f_value(model, z), z);
    const double dual_err = detail::rel(lhs, rhs);

    const auto [alpha, beta] = odd_coefficients(spec);
    const C res = detail::circle_residue(
        [&](C s) { return odd_nontrivial_superzeta(spec, model, s, z).value; }, C(1.0));
    const double res_err = std::abs(res - beta);

    const C s25(2.5, 0.0);
    const C nt = odd_nontrivial_superzeta(spec, model, s25, z).value;
    const C split = superzeta_direct(*model.zero_oracle(), s25, z).value +
                    odd_pole_superzeta(spec, s25, z).value;
    const double split_err = std::abs(nt - split);

    CheckResult r;
    r.name = "selberg odd: product duality, residue beta, NT = Z_f + Z^P";
    r.pass = dual_err <= 1e-4 && res_err <= 1e-6 && split_err <= 1e-8;
    r.max_err = std::max({dual_err, res_err, split_err});
    r.tol = 1e-4;
    return r;
}

/// Even-case consistency: duality and the residue formula on two fixtures.
inline CheckResult check_selberg_even() {
    using detail::C;
    auto model = FunctionModel::dirichlet_polynomial(2.0);
    double dual_worst = 0.0;
    double res_worst = 0.0;
    for (const auto& spec : {detail::even_fixture(), detail::even_fixture_n2()}) {
        const C z(2.6, 0.0);
        const C ds = richardson_derivative(
            [&](C s) { return even_nontrivial_superzeta(spec, model, s, z).value; },
            C(0.0), 0.02);
        const C lhs = std::exp(-ds);
        const C rhs = even_regularized_product(spec, f_value(model, z), z);
        dual_worst = std::max(dual_worst, detail::rel(lhs, rhs));
        for (int r = 1; r <= 2 * spec.n; ++r) {
            const C res = detail::circle_residue(
                [&](C s) { return even_nontrivial_superzeta(spec, model, s, z).value; },
                C(static_cast<double>(r)));
            res_worst = std::max(res_worst, std::abs(res - even_residue(spec, r, z)));
        }
    }
    CheckResult out;
    out.name = "selberg even: product duality and residue formula";
    out.pass = dual_worst <= 1e-4 && res_worst <= 1e-6;
    out.max_err = std::max(dual_worst, res_worst);
    out.tol = 1e-4;
    return out;
}

/// Kleinian prefactors: exact values and symbolic exponent cancellation.
inline CheckResult check_kleinian() {
    using detail::C;
    KleinianParams p1{1, 1.0, 1, 1.0};
    auto k1 = kleinian_constants(p1, C(0.7));
    KleinianParams p2{2, 1.0, 1, 1.0};
    auto k2 = kleinian_constants(p2, C(0.7));
    const bool exact_plus = k1.det_prefactor_plus == C(std::sqrt(2.0 * kPi));
    const bool exact_phi2 = k2.phi_quotient_prefactor == C(kPi / 2.0);
    auto cancels = [](const KleinianConstants& kc) {
        const auto &m = kc.minus_exp, &pl = kc.plus_exp, &ph = kc.phi_exp;
        return m.c0_s - pl.c0_s + ph.c0_s == 0.0 &&
               m.c0_const - pl.c0_const + ph.c0_const == 0.0 &&
               m.P_s - pl.P_s + ph.P_s == 0.0 && m.P_const - pl.P_const + ph.P_const == 0.0 &&
               m.two_s - pl.two_s + ph.two_s == 0.0 &&
               m.two_const - pl.two_const + ph.two_const == 0.0;
    };
    KleinianParams p3{2, 1.7, 3, 2.2};
    auto k3 = kleinian_constants(p3, C(0.45, 0.3));
    const C quot =
        k3.det_prefactor_minus / k3.det_prefactor_plus * k3.phi_quotient_prefactor;
    CheckResult r;
    r.name = "kleinian prefactors: exact values, exponent cancellation";
    r.pass = exact_plus && exact_phi2 && cancels(k1) && cancels(k2) &&
             std::abs(quot - 1.0) < 1e-12;
    r.max_err = r.pass ? 0.0 : 1.0;
    r.tol = 0.0;
    return r;
}

/// Hurwitz suite: recurrence, Bernoulli values, pole behavior.
inline CheckResult check_hurwitz_suite() {
    using detail::C;
    double worst = 0.0;
    for (const C& s : {C(2.0), C(-0.5), C(0.5, 1.0), C(3.0, -2.0)}) {
        for (double zr = 0.5; zr <= 10.0; zr += 1.9) {
            const C z(zr, 0.0);
            const C lhs = hurwitz_zeta(s, z);
            const C rhs = std::pow(z, -s) + hurwitz_zeta(s, z + 1.0);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
    }
    worst = std::max(worst, std::abs(hurwitz_zeta(C(2.0), C(1.0)) - kPi * kPi / 6.0));
    worst = std::max(worst, std::abs(hurwitz_zeta(C(-1.0), C(2.0)) + 13.0 / 12.0));
    bool pole_ok = false;
    try {
        hurwitz_zeta(C(1.0), C(2.0));
    } catch (const pole_error&) {
        pole_ok = true;
    }
    CheckResult r = detail::bounded("hurwitz recurrence and special values", worst, 1e-9);
    r.pass = r.pass && pole_ok;
    return r;
}

inline std::vector<CheckResult> run_suite(const std::string& name) {
    if (name == "lerch") return {check_lerch()};
    if (name == "hurwitz") return {check_hurwitz_suite(), check_voros()};
    if (name == "multizeta") return {check_multiple_hurwitz(), check_multizeta_series()};
    if (name == "residues") return {check_i_residues()};
    if (name == "overlap") return {check_overlap()};
    if (name == "determinant") return {check_determinant_identity()};
    if (name == "binomial") return {check_binomial()};
    if (name == "selberg-odd") return {check_selberg_odd()};
    if (name == "selberg-even") return {check_even_rewriting(), check_selberg_even()};
    if (name == "kleinian") return {check_kleinian()};
    throw domain_error("verify: unknown suite '" + name + "'");
}

inline std::vector<std::string> suite_names() {
    return {"lerch",      "hurwitz",  "multizeta",   "residues",     "overlap",
            "determinant", "binomial", "selberg-odd", "selberg-even", "kleinian"};
}

}  // namespace superzeta::verify
