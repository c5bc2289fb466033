#include <doctest.h>

#include <cmath>
#include <complex>

#include "superzeta/hurwitz.hpp"
#include "superzeta/numdiff.hpp"
#include "superzeta/superzeta_integral.hpp"
#include "superzeta/voros.hpp"

using namespace superzeta;
using C = std::complex<double>;

TEST_CASE("gamma_ratio finite products") {
    CHECK(gamma_ratio(C(7.3, 1.0), 0) == C(1.0));
    CHECK(gamma_ratio(C(0.0), 2).real() == doctest::Approx(0.5));  // ((-1)(-2))^-1
    CHECK(gamma_ratio_ds0(2) == doctest::Approx(0.75));            // H_2 (-1)^2/2!
    CHECK(gamma_ratio_ds0(0) == 0.0);
    CHECK_THROWS_AS(gamma_ratio(C(2.0), 3), pole_error);
    // general-mu route agrees with the integer route
    CHECK(std::abs(gamma_ratio_general(C(0.4, 0.2), -3.0) -
                   gamma_ratio(C(0.4, 0.2), 0) * (C(0.4, 0.2)) * (C(1.4, 0.2)) *
                       (C(2.4, 0.2))) < 1e-12);
    const C s(2.3, 0.5);
    CHECK(std::abs(gamma_ratio_general(s, -2.5) -
                   std::exp(log_gamma(s + 2.5) - log_gamma(s))) < 1e-12);
}

TEST_CASE("hadamard log derivative") {
    // zeros {-l : l >= 0}, genus 1: (log Delta)'' = -zeta_H(2, z)
    HadamardData data;
    data.zeros.add_progression(C(0.0), 1);
    data.genus = 1;
    CHECK(hadamard_log_derivative(data, 2, C(1.0)).real() ==
          doctest::Approx(-kPi * kPi / 6.0).epsilon(1e-12));
    // no zeros at all
    HadamardData none;
    none.genus = 1;
    CHECK(hadamard_log_derivative(none, 2, C(2.0)) == C(0.0));
    // lattice of 1 - 2^{-z}: same sum as the direct superzeta at s = 2
    auto model = FunctionModel::dirichlet_polynomial(2.0);
    HadamardData lattice;
    lattice.zeros = *model.zero_oracle();
    lattice.genus = 1;
    const C direct = superzeta_direct(lattice.zeros, C(2.0), C(1.0)).value;
    CHECK(std::abs(hadamard_log_derivative(lattice, 2, C(1.0)) + direct) < 1e-10);
    CHECK_THROWS_AS(hadamard_log_derivative(data, 3, C(1.0)), domain_error);
    CHECK_THROWS_AS(hadamard_log_derivative(data, 2, C(-0.5)), domain_error);
}

TEST_CASE("voros continuation reproduces the Hurwitz zeta") {
    auto exp_fix = stirling_expansion();
    auto had = reciprocal_gamma_hadamard();
    for (double sr : {-1.5, -1.0, -0.5, 0.5}) {
        for (double zr : {1.5, 2.0, 3.0}) {
            const auto v = voros_superzeta(exp_fix, had, C(sr), C(zr));
            const C want = hurwitz_zeta(C(sr), C(zr));
            CHECK(std::abs(v.value - want) <= 1e-6 * std::max(1.0, std::abs(want)));
        }
    }
    // Bernoulli oracle at s = -1, z = 2
    CHECK(voros_superzeta(exp_fix, had, C(-1.0), C(2.0)).value.real() ==
          doctest::Approx(-13.0 / 12.0).epsilon(1e-9));
    // overlap with a direct sum for Re(s) > kappa
    ZeroSequence zeros;
    zeros.add_progression(C(0.0), 1);
    const auto direct = superzeta_direct(zeros, C(1.5), C(2.0));
    const auto voros = voros_superzeta(exp_fix, had, C(1.5), C(2.0));
    CHECK(std::abs(direct.value - voros.value) < 1e-6);
    // complex s stays within the reported error estimate
    for (const C s : {C(0.5, 1.0), C(-1.2, 2.0), C(1.3, -0.7)}) {
        for (const C z : {C(2.0), C(1.5, 1.0)}) {
            const auto v = voros_superzeta(exp_fix, had, s, z);
            const C want = hurwitz_zeta(s, z);
            CHECK(std::abs(v.value - want) < 1e-9);
            CHECK(std::abs(v.value - want) <= 2.0 * v.est_error + 1e-12);
        }
    }
}

TEST_CASE("voros regularity at s = 0") {
    auto exp_fix = stirling_expansion();
    auto had = reciprocal_gamma_hadamard();
    // blocks (ii) and (iii) carry 1/Gamma(s) and vanish: Z(0,z) = sum a~_j z^j
    for (const C z : {C(1.5), C(2.0), C(3.0, 1.0)}) {
        const C want = exp_fix.a_tilde[0] + exp_fix.a_tilde[1] * z;
        CHECK(std::abs(voros_superzeta(exp_fix, had, C(0.0), z).value - want) < 1e-10);
    }
    // bounded through a small neighborhood of 0 (regular point)
    double worst = 0.0;
    for (double off : {-0.02, -0.01, 0.01, 0.02})
        worst = std::max(
            worst, std::abs(voros_superzeta(exp_fix, had, C(off), C(2.0)).value));
    CHECK(worst < 10.0);
}

TEST_CASE("voros k0 independence") {
    auto exp_fix = stirling_expansion();
    auto had = reciprocal_gamma_hadamard();
    const auto a = voros_superzeta(exp_fix, had, C(0.5), C(2.0), {}, 2);
    const auto b = voros_superzeta(exp_fix, had, C(0.5), C(2.0), {}, 4);
    CHECK(std::abs(a.value - b.value) < 1e-6);
}

TEST_CASE("voros error reporting") {
    auto exp_fix = stirling_expansion();
    auto had = reciprocal_gamma_hadamard();
    CHECK_THROWS_AS(voros_superzeta(exp_fix, had, C(1.0), C(2.0)), pole_error);
    // integer mu_k are removable (the Stirling fixture is regular at -1);
    // a non-integer mu_k is a genuine pole of the continuation
    CHECK(std::isfinite(voros_superzeta(exp_fix, had, C(-1.0), C(2.0)).value.real()));
    AsymptoticExpansion frac = exp_fix;
    frac.power_terms = {{C(1.0), -0.5}, {C(0.1), -3.0}, {C(0.01), -5.0}};
    CHECK_THROWS_AS(voros_superzeta(frac, had, C(-0.5), C(2.0)), pole_error);
    CHECK_THROWS_AS(voros_superzeta(exp_fix, had, C(2.5), C(2.0)), convergence_error);
    CHECK_THROWS_AS(voros_superzeta(exp_fix, had, C(0.5), C(-3.0)), domain_error);
    AsymptoticExpansion bad = exp_fix;
    bad.m = 2;
    CHECK_THROWS_AS(voros_superzeta(bad, had, C(0.5), C(2.0)), domain_error);
}

TEST_CASE("voros determinant") {
    auto exp_fix = stirling_expansion();
    auto delta_f = [](C z) { return std::exp(-log_gamma(z)); };
    // Lerch consistency: D(z) = sqrt(2pi)/Gamma(z) = exp(-zeta_H'(0,z))
    for (const C z : {C(1.0), C(1.5), C(2.0), C(2.0, 1.0)}) {
        const C det = voros_det(exp_fix, delta_f, z);
        CHECK(std::abs(det - std::exp(-hurwitz_zeta_ds0(z))) < 1e-8);
    }
    CHECK(voros_det(exp_fix, delta_f, C(1.0)).real() ==
          doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-12));
    // b == 0 collapses to the Hadamard value
    AsymptoticExpansion plain = exp_fix;
    plain.b = {0.0, 0.0};
    CHECK(voros_det(plain, delta_f, C(2.5)) == delta_f(C(2.5)));
    // the +1/2 log 2pi pattern yields prefactor sqrt(2pi) on any oracle
    auto f_oracle = [](C z) { return std::sin(z) + 2.0; };
    CHECK(std::abs(voros_det(exp_fix, f_oracle, C(2.0)) -
                   std::sqrt(2.0 * kPi) * f_oracle(C(2.0))) < 1e-12);
}

TEST_CASE("determinant duality") {
    auto exp_fix = stirling_expansion();
    auto had = reciprocal_gamma_hadamard();
    auto delta_f = [](C z) { return std::exp(-log_gamma(z)); };
    for (const C z : {C(1.5), C(2.0), C(3.0), C(2.0, 1.0)}) {
        const C ds = richardson_derivative(
            [&](C s) { return voros_superzeta(exp_fix, had, s, z).value; }, C(0.0), 0.02);
        const C via_z = std::exp(-ds);
        const C direct = voros_det(exp_fix, delta_f, z);
        CHECK(std::abs(via_z - direct) <= 1e-5 * std::abs(direct));
    }
}
