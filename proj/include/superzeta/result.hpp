#pragma once

#include <complex>

namespace superzeta {

/// Evaluation trace: which truncations and splits produced a value.
struct BranchFlags {
    double delta = 0.0;        // Taylor split point of the Mellin integral
    double y_max = 0.0;        // upper truncation of the tail integral
    long long truncation = 0;  // series / zero-sum terms consumed
    int k0 = 0;                // explicit power-term blocks (asymptotic route)
    int quad_panels = 0;       // quadrature panels used
    double tail_bound = 0.0;   // bound on dropped remainders
};

struct SuperzetaResult {
    std::complex<double> value{0.0, 0.0};
    double est_error = 0.0;
    BranchFlags branch_flags{};
};

}  // namespace superzeta
