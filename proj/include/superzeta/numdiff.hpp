#pragma once

#include <complex>

namespace superzeta {

/// Central difference with two Richardson stages: O(h^6) for analytic f.
/// Used for every numeric s-derivative at a regular point.
template <typename F>
std::complex<double> richardson_derivative(F&& f, std::complex<double> at, double h) {
    auto central = [&](double step) {
        return (f(at + step) - f(at - step)) / (2.0 * step);
    };
    std::complex<double> d1 = central(h);
    std::complex<double> d2 = central(h / 2.0);
    std::complex<double> d4 = central(h / 4.0);
    std::complex<double> r1 = (4.0 * d2 - d1) / 3.0;
    std::complex<double> r2 = (4.0 * d4 - d2) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

}  // namespace superzeta
