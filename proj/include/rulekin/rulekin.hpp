#pragma once

// Integral invariants of closed ruled surfaces: dual-number arithmetic over
// Lorentzian 3-space, the frame and invariants of a closed timelike curve on
// the dual unit sphere, parallel ruled surfaces at a constant dual offset
// angle, and a two-path verification harness for every closed-form relation.

#include "rulekin/errors.hpp"
#include "rulekin/dual.hpp"
#include "rulekin/minkowski.hpp"
#include "rulekin/grid.hpp"
#include "rulekin/curve.hpp"
#include "rulekin/frame.hpp"
#include "rulekin/invariants.hpp"
#include "rulekin/parallel.hpp"
#include "rulekin/verify.hpp"
#include "rulekin/io.hpp"
