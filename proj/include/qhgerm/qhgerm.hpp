#pragma once

// Umbrella header for the qhgerm library.

#include "qhgerm/bivar_poly.hpp"
#include "qhgerm/cross_ratio.hpp"
#include "qhgerm/decide.hpp"
#include "qhgerm/errors.hpp"
#include "qhgerm/gaussian.hpp"
#include "qhgerm/json_report.hpp"
#include "qhgerm/matching.hpp"
#include "qhgerm/numeric.hpp"
#include "qhgerm/poly_io.hpp"
#include "qhgerm/qh_core.hpp"
#include "qhgerm/radical.hpp"
#include "qhgerm/real.hpp"
#include "qhgerm/unipoly.hpp"
#include "qhgerm/witness.hpp"
