#pragma once

// Convenience umbrella: the whole library.

#include "cli.hpp"
#include "eigen_map.hpp"
#include "errors.hpp"
#include "invariant_reduce.hpp"
#include "matrix_oracle.hpp"
#include "matrix_rep.hpp"
#include "orbital_factor.hpp"
#include "polynomial.hpp"
#include "root_system.hpp"
#include "weight_system.hpp"
#include "weyl_orbit.hpp"
