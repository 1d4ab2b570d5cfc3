#pragma once

#include "finspec/duality.hpp"
#include "finspec/element_set.hpp"
#include "finspec/enumerate.hpp"
#include "finspec/error.hpp"
#include "finspec/lattice.hpp"
#include "finspec/maps.hpp"
#include "finspec/point_set.hpp"
#include "finspec/poset.hpp"
#include "finspec/sweep.hpp"
#include "finspec/theorems.hpp"
