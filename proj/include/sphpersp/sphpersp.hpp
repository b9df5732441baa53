#pragma once

#include "analysis.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "flattening.hpp"
#include "presets.hpp"
#include "primitives.hpp"
#include "render.hpp"
#include "scene.hpp"
#include "sphere.hpp"
#include "svg.hpp"
#include "vector.hpp"
