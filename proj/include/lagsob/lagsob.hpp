#pragma once

/// Umbrella header: finite-difference / Lagrange-remainder calculus and the
/// pointwise Sobolev inequality scans built on it.

#include "lagsob/difference.hpp"
#include "lagsob/errors.hpp"
#include "lagsob/field.hpp"
#include "lagsob/field_parse.hpp"
#include "lagsob/geometry.hpp"
#include "lagsob/grid.hpp"
#include "lagsob/maximal.hpp"
#include "lagsob/mollify.hpp"
#include "lagsob/point.hpp"
#include "lagsob/quadrature.hpp"
#include "lagsob/report.hpp"
#include "lagsob/sampling.hpp"
#include "lagsob/scans.hpp"
