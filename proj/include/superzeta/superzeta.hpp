#pragma once

// Umbrella header.

#include "superzeta/combinatorics.hpp"
#include "superzeta/divisor.hpp"
#include "superzeta/errors.hpp"
#include "superzeta/eval_context.hpp"
#include "superzeta/gamma.hpp"
#include "superzeta/hurwitz.hpp"
#include "superzeta/quadrature.hpp"
#include "superzeta/result.hpp"
#include "superzeta/selberg.hpp"
#include "superzeta/superzeta_integral.hpp"
#include "superzeta/voros.hpp"
#include "superzeta/zero_sequence.hpp"
#include "superzeta/zeta_type.hpp"
