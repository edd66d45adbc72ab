#pragma once

#include "tiler/error.hpp"
#include "tiler/grid_geometry.hpp"
#include "tiler/equilibrium.hpp"
#include "tiler/tiling_core.hpp"
#include "tiler/forced_components.hpp"
#include "tiler/lattice_order.hpp"
#include "tiler/flips.hpp"
#include "tiler/generation.hpp"
