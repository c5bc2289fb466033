#pragma once

#include <cmath>
#include <complex>

#include "superzeta/combinatorics.hpp"
#include "superzeta/errors.hpp"

namespace superzeta {

using complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline const double kLogSqrt2Pi = 0.5 * std::log(2.0 * kPi);

namespace detail {

inline bool near_nonpositive_integer(const complex& z, double tol = 1e-12) {
    if (std::abs(z.imag()) > tol) return false;
    double r = z.real();
    if (r > 0.5) return false;
    return std::abs(r - std::round(r)) <= tol;
}

// Stirling series for log Gamma, valid once Re(w) is large.  With the shift
// threshold below the truncation term is far under double precision.
inline complex log_gamma_asymptotic(const complex& w) {
    const complex lw = std::log(w);
    complex sum = (w - 0.5) * lw - w + kLogSqrt2Pi;
    const complex w2 = w * w;
    complex wp = w;  // w^(2k-1)
    for (int k = 1; k <= 10; ++k) {
        sum += bernoulli_even(2 * k) / (2.0 * k * (2.0 * k - 1.0)) / wp;
        wp *= w2;
    }
    return sum;
}

}  // namespace detail

/// Principal branch of log Gamma(z), continuous on the cut plane C \ R^-.
inline complex log_gamma(const complex& z) {
    if (detail::near_nonpositive_integer(z))
        throw pole_error("log_gamma: pole at non-positive integer");
    // Shift until the asymptotic series applies, then subtract the logs.
    // Each Log(z+k) is holomorphic off (-inf,-k], so the sum stays on the
    // principal branch throughout the cut plane.
    const double shift_target = 12.0;
    int shifts = 0;
    if (z.real() < shift_target) {
        shifts = static_cast<int>(std::ceil(shift_target - z.real()));
    }
    complex acc = 0.0;
    for (int j = 0; j < shifts; ++j) acc += std::log(z + static_cast<double>(j));
    return detail::log_gamma_asymptotic(z + static_cast<double>(shifts)) - acc;
}

inline complex gamma_fn(const complex& z) { return std::exp(log_gamma(z)); }

/// Entire reciprocal 1/Gamma(z); exact zero at non-positive integers.
inline complex recip_gamma(const complex& z) {
    if (z.real() >= 0.5) return std::exp(-log_gamma(z));
    // reflection: 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi
    return std::sin(kPi * z) * std::exp(log_gamma(1.0 - z)) / kPi;
}

/// Digamma psi(z) = (log Gamma)'(z).
inline complex digamma(const complex& z) {
    if (detail::near_nonpositive_integer(z))
        throw pole_error("digamma: pole at non-positive integer");
    const double shift_target = 12.0;
    int shifts = 0;
    if (z.real() < shift_target)
        shifts = static_cast<int>(std::ceil(shift_target - z.real()));
    complex acc = 0.0;
    for (int j = 0; j < shifts; ++j) acc += 1.0 / (z + static_cast<double>(j));
    complex w = z + static_cast<double>(shifts);
    complex sum = std::log(w) - 0.5 / w;
    const complex w2 = w * w;
    complex wp = w2;  // w^(2k)
    for (int k = 1; k <= 10; ++k) {
        sum -= bernoulli_even(2 * k) / (2.0 * k) / wp;
        wp *= w2;
    }
    return sum - acc;
}

/// Polygamma psi^(n)(z), n >= 0.  Supports orders needed for the
/// zeta-type derivative contract (n <= 9).
inline complex polygamma(int n, const complex& z) {
    if (n == 0) return digamma(z);
    if (n < 0 || n > 9) throw domain_error("polygamma: order out of range [0,9]");
    if (detail::near_nonpositive_integer(z))
        throw pole_error("polygamma: pole at non-positive integer");
    const double shift_target = 14.0;
    int shifts = 0;
    if (z.real() < shift_target)
        shifts = static_cast<int>(std::ceil(shift_target - z.real()));
    // psi^(n)(z) = psi^(n)(z+M) - sum_j d^n/dz^n (z+j)^-1
    const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
    complex acc = 0.0;
    for (int j = 0; j < shifts; ++j)
        acc += sign_n * factorial(n) * std::pow(z + static_cast<double>(j), complex(-n - 1.0));
    complex w = z + static_cast<double>(shifts);
    // termwise derivative of the digamma asymptotic series
    // d^n log w = (-1)^(n-1) (n-1)! w^-n
    complex sum = -sign_n * factorial(n - 1) * std::pow(w, complex(-static_cast<double>(n)));
    // d^n [-1/(2w)] = -(1/2) (-1)^n n! w^(-1-n)
    sum -= 0.5 * sign_n * factorial(n) * std::pow(w, complex(-1.0 - n));
    // d^n [-B_2k/(2k) w^(-2k)] = -B_2k/(2k) (-1)^n (2k)(2k+1)...(2k+n-1) w^(-2k-n)
    for (int k = 1; k <= 10; ++k) {
        double rising = 1.0;
        for (int i = 0; i < n; ++i) rising *= (2.0 * k + i);
        sum -= bernoulli_even(2 * k) / (2.0 * k) * sign_n * rising *
               std::pow(w, complex(-2.0 * k - n));
    }
    return sum - acc;
}

/// Gamma(s-j)/Gamma(s) for integer j >= 0, evaluated as the finite product
/// prod_{i=1..j} (s-i)^{-1}; no gamma evaluations.  j = 0 gives 1.
inline complex gamma_ratio(const complex& s, int j) {
    if (j < 0) throw domain_error("gamma_ratio: j must be >= 0");
    complex prod = 1.0;
    for (int i = 1; i <= j; ++i) {
        complex d = s - static_cast<double>(i);
        if (std::abs(d) < 1e-14)
            throw pole_error("gamma_ratio: pole at s in {1..j}");
        prod /= d;
    }
    return prod;
}

/// d/ds [Gamma(s-j)/Gamma(s)] at s = 0, equal to H_j (-1)^j / j!.
inline double gamma_ratio_ds0(int j) {
    if (j < 0) throw domain_error("gamma_ratio_ds0: j must be >= 0");
    if (j == 0) return 0.0;
    double h = 0.0;
    for (int i = 1; i <= j; ++i) h += 1.0 / i;
    return ((j % 2 == 0) ? 1.0 : -1.0) * h / factorial(j);
}

/// Gamma(s-mu)/Gamma(s) for general real mu.  Integer mu collapses to exact
/// finite products; otherwise a reflection-based form keeps the ratio stable
/// near the poles of either gamma factor.
inline complex gamma_ratio_general(const complex& s, double mu) {
    double r = std::round(mu);
    if (std::abs(mu - r) < 1e-12) {
        int p = static_cast<int>(r);
        if (p >= 0) return gamma_ratio(s, p);
        complex prod = 1.0;  // Gamma(s+|p|)/Gamma(s) = s(s+1)...(s+|p|-1)
        for (int i = 0; i < -p; ++i) prod *= s + static_cast<double>(i);
        return prod;
    }
    const complex sm = s - mu;
    if (s.real() >= 0.5 && sm.real() >= 0.5)
        return std::exp(log_gamma(sm) - log_gamma(s));
    // Gamma(s-mu)/Gamma(s) = [sin(pi s)/sin(pi(s-mu))] Gamma(1-s)/Gamma(1-s+mu)
    complex den = std::sin(kPi * sm);
    if (std::abs(den) < 1e-14)
        throw pole_error("gamma_ratio_general: pole of Gamma(s-mu)");
    return std::sin(kPi * s) / den * std::exp(log_gamma(1.0 - s) - log_gamma(1.0 - s + mu));
}

}  // namespace superzeta
