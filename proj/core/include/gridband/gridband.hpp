#pragma once

#include "gridband/bands.hpp"
#include "gridband/error.hpp"
#include "gridband/explorer.hpp"
#include "gridband/grid.hpp"
#include "gridband/invariants.hpp"
#include "gridband/knot_table.hpp"
#include "gridband/laurent.hpp"
#include "gridband/moves.hpp"
#include "gridband/planar.hpp"
#include "gridband/simplify.hpp"
