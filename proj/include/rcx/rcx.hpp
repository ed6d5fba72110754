#pragma once

// Umbrella header: rigged-configuration crystals for symmetrizable
// Borcherds–Cartan data, with the star involution, the recognition-condition
// checkers, highest-weight cutoffs, and the purely imaginary machinery.

#include "rcx/cartan.hpp"
#include "rcx/checks.hpp"
#include "rcx/crystal.hpp"
#include "rcx/errors.hpp"
#include "rcx/explorer.hpp"
#include "rcx/extint.hpp"
#include "rcx/graph.hpp"
#include "rcx/highest_weight.hpp"
#include "rcx/imaginary.hpp"
#include "rcx/rigged.hpp"
#include "rcx/serialize.hpp"
