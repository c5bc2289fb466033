#pragma once

#include "superzeta/errors.hpp"

namespace superzeta {

/// Precision / truncation / quadrature policy shared by every numeric
/// operation in the library.  Values are plain knobs; all operations are
/// pure functions of (inputs, context).
struct EvalContext {
    double target_rel_error = 1e-10;  // accuracy goal, relative to max(1,|value|)
    long long series_truncation = 200000;  // hard cap on summed series terms
    int quadrature_nodes = 15;  // base nodes per quadrature panel
    double derivative_step = 0.02;  // step for numeric s-derivatives

    void validate() const {
        if (!(target_rel_error > 0.0))
            throw domain_error("EvalContext: target_rel_error must be > 0");
        if (series_truncation < 1)
            throw domain_error("EvalContext: series_truncation must be >= 1");
        if (quadrature_nodes < 8)
            throw domain_error("EvalContext: quadrature_nodes must be >= 8");
        if (!(derivative_step > 0.0))
            throw domain_error("EvalContext: derivative_step must be > 0");
    }
};

}  // namespace superzeta
