#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "superzeta/combinatorics.hpp"
#include "superzeta/gamma.hpp"
#include "superzeta/hurwitz.hpp"

using namespace superzeta;
using C = std::complex<double>;

namespace {

// Independent oracle for Euler's constant: harmonic partial sum with the
// standard asymptotic correction.
double gamma_constant_oracle() {
    const long long n = 1000000;
    double h = 0.0;
    for (long long k = n; k >= 1; --k) h += 1.0 / static_cast<double>(k);
    const double nn = static_cast<double>(n);
    return h - std::log(nn) - 0.5 / nn + 1.0 / (12.0 * nn * nn);
}

// Brute-force Hurwitz oracle: partial sums plus an integral tail bound with
// half-term correction; good to ~1e-12 for Re(s) >= 2.
C hurwitz_series_oracle(C s, C z, long long terms = 200000) {
    C sum = 0.0;
    for (long long l = terms - 1; l >= 0; --l)
        sum += std::pow(z + static_cast<double>(l), -s);
    const C w = z + static_cast<double>(terms);
    sum += std::pow(w, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(w, -s);
    return sum;
}

// Bernoulli polynomial values used by the negative-integer oracle.
double bernoulli_poly2(double z) { return z * z - z + 1.0 / 6.0; }

}  // namespace

TEST_CASE("log_gamma at classic points") {
    CHECK(std::abs(log_gamma(C(1.0))) < 1e-14);
    // reflection-formula oracle: Gamma(z)Gamma(1-z) = pi/sin(pi z) at z = 1/2
    const double reflect = 0.5 * std::log(kPi / std::sin(kPi * 0.5));
    CHECK(log_gamma(C(0.5)).real() == doctest::Approx(reflect).epsilon(1e-13));
    CHECK(log_gamma(C(5.0)).real() == doctest::Approx(std::log(24.0)).epsilon(1e-13));
}

TEST_CASE("log_gamma stays on the principal branch") {
    // recurrence log Gamma(z+1) = log Gamma(z) + Log z, complex z
    for (const C z : {C(0.3, 0.8), C(-2.5, 0.1), C(1.0, -3.0)}) {
        const C lhs = log_gamma(z + 1.0);
        const C rhs = log_gamma(z) + std::log(z);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    // reflection across the cut keeps continuity: values just above/below a
    // negative real point differ smoothly in the real part
    const C above = log_gamma(C(-1.5, 1e-9));
    const C below = log_gamma(C(-1.5, -1e-9));
    CHECK(above.real() == doctest::Approx(below.real()).epsilon(1e-8));
    CHECK(above.imag() == doctest::Approx(-below.imag()).epsilon(1e-8));
    CHECK_THROWS_AS(log_gamma(C(0.0)), pole_error);
    CHECK_THROWS_AS(log_gamma(C(-3.0)), pole_error);
}

TEST_CASE("digamma against series and duplication oracles") {
    const double gamma_c = gamma_constant_oracle();
    CHECK(digamma(C(1.0)).real() == doctest::Approx(-gamma_c).epsilon(1e-11));
    // recurrence
    CHECK(digamma(C(2.0)).real() ==
          doctest::Approx(digamma(C(1.0)).real() + 1.0).epsilon(1e-13));
    // duplication: psi(2z) = psi(z)/2 + psi(z+1/2)/2 + log 2 at z = 1/2
    const double dup = digamma(C(1.0)).real() - 2.0 * std::log(2.0);
    CHECK(digamma(C(0.5)).real() == doctest::Approx(dup).epsilon(1e-13));
    CHECK_THROWS_AS(digamma(C(-2.0)), pole_error);
}

TEST_CASE("polygamma through finite differences") {
    for (int n : {1, 2, 3, 5}) {
        for (const C z : {C(1.7), C(3.2, 1.1)}) {
            const double h = 1e-4;
            const C fd = (polygamma(n - 1, z + h) - polygamma(n - 1, z - h)) / (2.0 * h);
            CHECK(std::abs(polygamma(n, z) - fd) < 1e-6);
        }
    }
}

TEST_CASE("hurwitz_zeta special values") {
    // brute-force oracle at s = 2
    const C oracle = hurwitz_series_oracle(C(2.0), C(1.0));
    CHECK(std::abs(hurwitz_zeta(C(2.0), C(1.0)) - oracle) < 1e-11);
    CHECK(hurwitz_zeta(C(2.0), C(1.0)).real() ==
          doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
    // index shift
    const C s(1.7, 0.4), z(2.3, 0.0);
    CHECK(std::abs(hurwitz_zeta(s, z) - (hurwitz_zeta(s, z + 1.0) + std::pow(z, -s))) <
          1e-13);
    // Bernoulli-polynomial oracle at s = -1
    CHECK(hurwitz_zeta(C(-1.0), C(2.0)).real() ==
          doctest::Approx(-bernoulli_poly2(2.0) / 2.0).epsilon(1e-12));
    CHECK_THROWS_AS(hurwitz_zeta(C(1.0), C(2.0)), pole_error);
    CHECK_THROWS_AS(hurwitz_zeta(C(2.0), C(-3.0)), domain_error);
}

TEST_CASE("hurwitz recurrence on a complex grid") {
    const double target = EvalContext{}.target_rel_error;
    for (const C s : {C(0.5), C(-1.5), C(2.5, 1.0), C(0.5, -2.0), C(4.0, 3.0)}) {
        for (double zr = 0.5; zr <= 10.0; zr += 0.5) {
            const C z(zr, 0.0);
            const C lhs = hurwitz_zeta(s, z);
            const C rhs = std::pow(z, -s) + hurwitz_zeta(s, z + 1.0);
            CHECK(std::abs(lhs - rhs) <= 10.0 * target * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("hurwitz_zeta_ds0 equals log Gamma(z) - log sqrt(2 pi)") {
    CHECK(hurwitz_zeta_ds0(C(1.0)).real() == doctest::Approx(-kLogSqrt2Pi).epsilon(1e-10));
    CHECK(hurwitz_zeta_ds0(C(0.5)).real() ==
          doctest::Approx(-0.5 * std::log(2.0)).epsilon(1e-10));
    CHECK(hurwitz_zeta_ds0(C(2.0)).real() == doctest::Approx(-kLogSqrt2Pi).epsilon(1e-10));
    for (const C z : {C(0.7), C(1.9), C(4.4), C(2.0, 1.5), C(0.5, -2.0)}) {
        const C want = log_gamma(z) - kLogSqrt2Pi;
        CHECK(std::abs(hurwitz_zeta_ds0(z) - want) < 1e-9);
    }
}

TEST_CASE("Stirling table: Pochhammer round trip is exact") {
    const StirlingTable& st = stirling_table();
    for (int m = 0; m <= 12; ++m) {
        if (m == 0) {
            CHECK(st(0, 0) == 1);
            continue;
        }
        // expand (a)_m = a(a+1)...(a+m-1) over integer coefficients
        std::vector<long long> acc{0, 1};  // the factor a
        for (int i = 1; i < m; ++i) {
            std::vector<long long> next(acc.size() + 1, 0);
            for (size_t d = 0; d < acc.size(); ++d) {
                next[d + 1] += acc[d];
                next[d] += acc[d] * i;
            }
            acc = std::move(next);
        }
        for (int l = 0; l <= m; ++l) {
            const long long expanded = (l < static_cast<int>(acc.size())) ? acc[l] : 0;
            const long long sign = ((m + l) % 2 == 0) ? 1 : -1;
            CHECK(expanded == sign * st(m, l));
        }
        CHECK(st(m, m) == 1);
        CHECK(st(m, 0) == 0);
    }
}

TEST_CASE("p_poly pinned by the zeta_2 reduction") {
    CHECK(p_poly(1, 0, C(7.7, 2.0)) == C(1.0));
    CHECK(p_poly(2, 1, C(-3.0, 1.0)) == C(1.0));
    CHECK(std::abs(p_poly(2, 0, C(3.0)) - C(-2.0)) < 1e-15);
    // zeta_2(s,z) = zeta_H(s-1,z) + (1-z) zeta_H(s,z); the reduction fixes the
    // symbol reading of the p_{m,j} definition
    for (const C s : {C(3.5), C(-0.5, 1.0)}) {
        for (const C z : {C(1.3), C(2.0, 0.7)}) {
            const C lhs = multiple_hurwitz_zeta(2, s, z);
            const C rhs = hurwitz_zeta(s - 1.0, z) + (1.0 - z) * hurwitz_zeta(s, z);
            CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
    CHECK_THROWS_AS(p_poly(2, 2, C(1.0)), domain_error);
    CHECK_THROWS_AS(p_poly(0, 0, C(1.0)), domain_error);
}

TEST_CASE("multiple Hurwitz zeta: series oracle and residues") {
    // m = 1 collapses to the Hurwitz zeta
    CHECK(std::abs(multiple_hurwitz_zeta(1, C(2.5), C(1.7)) -
                   hurwitz_zeta(C(2.5), C(1.7))) < 1e-14);
    // direct series oracle at (m=2, s=3, z=1): sum_l (l+1)(1+l)^{-3} = zeta(2),
    // i.e. sum_k k^{-2}; Euler-Maclaurin tail from k = M
    C series = 0.0;
    for (long long l = 200000; l >= 0; --l)
        series += static_cast<double>(l + 1) * std::pow(C(1.0 + l), -3.0);
    const double M = 200002.0;
    series += 1.0 / M + 0.5 / (M * M) + 1.0 / (6.0 * M * M * M);
    CHECK(std::abs(multiple_hurwitz_zeta(2, C(3.0), C(1.0)) - series) < 1e-9);
    CHECK(multiple_hurwitz_zeta(2, C(3.0), C(1.0)).real() ==
          doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
    // residue at s = m equals 1/(m-1)! (leading p-polynomial)
    for (int m : {1, 2, 3, 4}) {
        C acc = 0.0;
        const int nodes = 24;
        for (int i = 0; i < nodes; ++i) {
            const double th = 2.0 * kPi * i / nodes;
            const C w = 0.3 * std::exp(C(0.0, th));
            acc += multiple_hurwitz_zeta(m, static_cast<double>(m) + w, C(1.4)) * w;
        }
        acc /= static_cast<double>(nodes);
        CHECK(std::abs(acc - 1.0 / factorial(m - 1)) < 1e-8);
    }
    // the full pole set: residue at s = k is p_{m,k-1}(z)
    for (int k : {1, 2, 3}) {
        C acc = 0.0;
        const int nodes = 24;
        for (int i = 0; i < nodes; ++i) {
            const double th = 2.0 * kPi * i / nodes;
            const C w = 0.3 * std::exp(C(0.0, th));
            acc += multiple_hurwitz_zeta(3, static_cast<double>(k) + w, C(1.4)) * w;
        }
        acc /= static_cast<double>(nodes);
        CHECK(std::abs(acc - p_poly(3, k - 1, C(1.4))) < 1e-6);
    }
    CHECK_THROWS_AS(multiple_hurwitz_zeta(2, C(2.0), C(1.5)), pole_error);
}

TEST_CASE("multiple gamma") {
    // Gamma_1 = Gamma / sqrt(2 pi)
    for (const C z : {C(0.5), C(1.0), C(2.6), C(1.5, 1.0)}) {
        const C want = std::exp(log_gamma(z)) / std::sqrt(2.0 * kPi);
        CHECK(std::abs(multiple_gamma(1, z) - want) < 1e-9 * std::abs(want));
    }
    CHECK(multiple_gamma(1, C(0.5)).real() ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    // Gamma_2(1): p_{2,0}(1) = 0, so zeta_2(s,1) = zeta_H(s-1,1); compare the
    // two derivative routes
    const C direct = multiple_gamma(2, C(1.0));
    const C via_reduction = std::exp(richardson_derivative(
        [](C s) { return hurwitz_zeta(s - 1.0, C(1.0)); }, C(0.0), 0.02));
    CHECK(std::abs(direct - via_reduction) < 1e-9);
}

TEST_CASE("EvalContext validation") {
    EvalContext ctx;
    ctx.target_rel_error = -1.0;
    CHECK_THROWS_AS(ctx.validate(), domain_error);
    ctx = {};
    ctx.quadrature_nodes = 4;
    CHECK_THROWS_AS(ctx.validate(), domain_error);
    ctx = {};
    ctx.series_truncation = 0;
    CHECK_THROWS_AS(ctx.validate(), domain_error);
    CHECK_NOTHROW(EvalContext{}.validate());
}

TEST_CASE("binomial helpers") {
    CHECK(binomial(35, 20) == 3247943160LL);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial_real(-1.0, 0) == 1.0);
    CHECK(binomial_real(6.5, 2) == doctest::Approx(6.5 * 5.5 / 2.0));
}
