#pragma once

// Umbrella header for the glide2d core library.

#include "glide2d/conditioning.hpp"
#include "glide2d/contour.hpp"
#include "glide2d/geometry.hpp"
#include "glide2d/grid.hpp"
#include "glide2d/jacobians.hpp"
#include "glide2d/manipulability.hpp"
#include "glide2d/mat2.hpp"
#include "glide2d/report.hpp"
#include "glide2d/zone.hpp"
