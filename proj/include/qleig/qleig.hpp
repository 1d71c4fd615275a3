#pragma once

// Umbrella header: quaternionic matrices, Study determinants,
// characteristic functions for the 2x2 and 3x3 cases, their
// Hamilton-Cayley extensions, and numerical left/right spectra.

#include "qleig/errors.hpp"
#include "qleig/quaternion.hpp"
#include "qleig/complex_matrix.hpp"
#include "qleig/qmatrix.hpp"
#include "qleig/ncexpr.hpp"
#include "qleig/charfn.hpp"
#include "qleig/eigensolve.hpp"
#include "qleig/io.hpp"
