#pragma once

// Umbrella header for the transit library: exact t-step transit
// probabilities of balanced two-colourings of regular graphs, the attainable
// pair regions and their exact convex geometry, independent exact covers with
// search, the torus constructions, brute-force enumeration, and the
// two-dimensional-torus lower-bound machinery.

#include "transit/common.hpp"
#include "transit/graph.hpp"
#include "transit/colouring.hpp"
#include "transit/region.hpp"
#include "transit/covers.hpp"
#include "transit/constructions.hpp"
#include "transit/enumerate.hpp"
#include "transit/torus2_bound.hpp"
#include "transit/io.hpp"
