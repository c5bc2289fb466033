#include <doctest.h>

#include <cmath>
#include <complex>

#include "superzeta/zeta_type.hpp"

using namespace superzeta;
using C = std::complex<double>;

TEST_CASE("dirichlet polynomial log f") {
    auto model = FunctionModel::dirichlet_polynomial(2.0);
    EvalContext tight;
    tight.target_rel_error = 1e-14;
    CHECK(std::abs(log_f(model, C(2.0), tight) - std::log(C(0.75))) < 1e-12);
    CHECK(std::abs(log_f(model, C(50.0))) < 1e-14);  // Dirichlet decay
    CHECK_THROWS_AS(log_f(model, C(-0.5)), convergence_error);
    CHECK(model.kappa() == 1.0);
    CHECK(model.sigma() == 0.0);
}

TEST_CASE("reciprocal gamma and sine quotient builtins") {
    auto rg = FunctionModel::reciprocal_gamma();
    CHECK(std::abs(log_f(rg, C(1.0))) < 1e-14);
    CHECK(std::abs(log_f_derivative(rg, 1, C(2.3)) + digamma(C(2.3))) < 1e-13);
    auto sq = FunctionModel::sine_quotient();
    // log sin derivative: pi cot(pi z), checked against a finite difference
    const C z(0.3, 0.4);
    const double h = 1e-5;
    const C fd = (log_f(sq, z + h) - log_f(sq, z - h)) / (2.0 * h);
    CHECK(std::abs(log_f_derivative(sq, 1, z) - fd) < 1e-8);
    CHECK_THROWS_AS(log_f(sq, C(2.0)), pole_error);
    CHECK_THROWS_AS(log_f_derivative(sq, 3, C(-1.0)), pole_error);
}

TEST_CASE("log_f_derivative closed forms") {
    auto model = FunctionModel::dirichlet_polynomial(2.0);
    CHECK(log_f_derivative(model, 1, C(2.0)).real() ==
          doctest::Approx(std::log(2.0) / 3.0).epsilon(1e-10));
    // closed-form differentiation oracle: with t = a^{-z},
    // (log f)'' = -(log a)^2 t/(1-t)^2
    const double t = 0.5;
    const double oracle = -std::pow(std::log(2.0), 2) * t / ((1.0 - t) * (1.0 - t));
    CHECK(log_f_derivative(model, 2, C(1.0)).real() ==
          doctest::Approx(oracle).epsilon(1e-10));
    CHECK_THROWS_AS(log_f_derivative(model, 0, C(2.0)), domain_error);
    CHECK_THROWS_AS(log_f_derivative(model, 9, C(2.0)), domain_error);
}

TEST_CASE("termwise derivatives agree with finite differences") {
    auto model = FunctionModel::dirichlet_polynomial(2.0);
    auto level = [&](int j, C w) {
        return j == 0 ? log_f(model, w) : log_f_derivative(model, j, w);
    };
    for (int j = 1; j <= 6; ++j) {
        for (const C z : {C(2.0), C(3.5, 1.0)}) {
            const double h = 1e-4;
            const C fd = (level(j - 1, z + h) - level(j - 1, z - h)) / (2.0 * h);
            CHECK(std::abs(log_f_derivative(model, j, z) - fd) < 1e-6);
        }
    }
}

TEST_CASE("derivative decay for large real part") {
    auto model = FunctionModel::dirichlet_polynomial(2.0);
    for (int j : {1, 2, 4}) {
        double prev = std::abs(log_f_derivative(model, j, C(10.0)));
        for (double x = 11.0; x <= 16.0; x += 1.0) {
            const double cur = std::abs(log_f_derivative(model, j, C(x)));
            CHECK(cur * 2.0 <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("builtin vs explicit Dirichlet series") {
    // log(1 - 2^{-z}) = sum_n (-1/n) (2^n)^{-z}
    DirichletLogSeries series;
    for (int n = 1; n <= 80; ++n)
        series.terms.push_back({C(-1.0 / n, 0.0), std::pow(2.0, n)});
    series.order_kappa = 1.0;
    series.abscissa_sigma = 0.0;
    auto explicit_model = FunctionModel::dirichlet(series);
    auto builtin = FunctionModel::dirichlet_polynomial(2.0);
    EvalContext tight;
    tight.target_rel_error = 1e-14;
    for (const C z : {C(1.0), C(2.5), C(4.0, 2.0)}) {
        CHECK(std::abs(log_f(explicit_model, z) - log_f(builtin, z, tight)) < 1e-12);
        CHECK(std::abs(log_f_derivative(explicit_model, 1, z) -
                       log_f_derivative(builtin, 1, z, tight)) < 1e-12);
    }
}

TEST_CASE("series validation") {
    DirichletLogSeries bad;
    bad.terms.push_back({C(1.0), 0.9});  // q_1 <= 1
    CHECK_THROWS_AS(FunctionModel::dirichlet(bad), domain_error);
    DirichletLogSeries unordered;
    unordered.terms.push_back({C(1.0), 3.0});
    unordered.terms.push_back({C(1.0), 2.0});
    CHECK_THROWS_AS(FunctionModel::dirichlet(unordered), domain_error);
}

TEST_CASE("truncation depth") {
    auto model = FunctionModel::dirichlet_polynomial(2.0);
    CHECK(truncation_depth(model, 10.0, 1e-12) == 3);
    CHECK(truncation_depth(model, 10.0, 1.0) == 1);  // minimal depth
    // independent oracle: smallest N with 2^{-x(N+1)} <= target
    auto oracle = [](double x, double target) {
        long long n = 1;
        while (std::pow(2.0, -x * static_cast<double>(n + 1)) > target) ++n;
        return n;
    };
    for (double x : {2.0, 5.0, 10.0}) {
        for (double target : {1e-8, 1e-12, 1e-16}) {
            CHECK(truncation_depth(model, x, target) == oracle(x, target));
        }
    }
    CHECK(truncation_depth(model, 2.0, 1e-16) == oracle(2.0, 1e-16));
    CHECK_THROWS_AS(truncation_depth(model, -1.0, 1e-8), convergence_error);
    auto rg = FunctionModel::reciprocal_gamma();
    CHECK(truncation_depth(rg, 5.0, 1.0) == 1);
    CHECK_THROWS_AS(truncation_depth(rg, 5.0, 1e-8), domain_error);
}

TEST_CASE("empty Dirichlet series degenerates to f == 1") {
    auto trivial = FunctionModel::dirichlet(DirichletLogSeries{});
    CHECK(log_f(trivial, C(2.0)) == C(0.0));
    CHECK(log_f_derivative(trivial, 1, C(2.0)) == C(0.0));
    CHECK(truncation_depth(trivial, 2.0, 1e-12) == 1);
}

TEST_CASE("zero oracles") {
    auto poly = FunctionModel::dirichlet_polynomial(2.0);
    auto zeros = poly.zero_oracle();
    REQUIRE(zeros.has_value());
    CHECK(zeros->lattices().size() == 1);
    CHECK(zeros->lattices()[0].spacing == doctest::Approx(2.0 * kPi / std::log(2.0)));
    auto rg = FunctionModel::reciprocal_gamma();
    auto rgz = rg.zero_oracle();
    REQUIRE(rgz.has_value());
    CHECK(rgz->progressions().size() == 1);
    CHECK(!FunctionModel::sine_quotient().zero_oracle().has_value());
}
