#pragma once

#include "avcs/config.hpp"
#include "avcs/coords.hpp"
#include "avcs/distance.hpp"
#include "avcs/fixtures.hpp"
#include "avcs/geometry.hpp"
#include "avcs/gpsr.hpp"
#include "avcs/harness.hpp"
#include "avcs/planar.hpp"
#include "avcs/routing.hpp"
#include "avcs/scenario.hpp"
#include "avcs/topology.hpp"
