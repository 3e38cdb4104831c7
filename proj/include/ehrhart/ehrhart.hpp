#pragma once

// Umbrella header: the whole library.

#include "ehrhart/arith.hpp"
#include "ehrhart/matrix.hpp"
#include "ehrhart/normal_forms.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/lattice.hpp"
#include "ehrhart/lp.hpp"
#include "ehrhart/membership.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/ehrhart_polynomial.hpp"
#include "ehrhart/delta.hpp"
#include "ehrhart/analysis.hpp"
#include "ehrhart/classification.hpp"
#include "ehrhart/constructions.hpp"
#include "ehrhart/search.hpp"
#include "ehrhart/io.hpp"
