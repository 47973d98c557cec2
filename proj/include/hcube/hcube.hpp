#pragma once

#include "hcube/cube.hpp"
#include "hcube/isometry.hpp"
#include "hcube/covers.hpp"
#include "hcube/modpart.hpp"
#include "hcube/exact_cover.hpp"
#include "hcube/induced.hpp"
#include "hcube/partition.hpp"
#include "hcube/grid.hpp"
#include "hcube/edge_decomp.hpp"
