#pragma once

#include "liestrata/algebraic.hpp"
#include "liestrata/bitvector.hpp"
#include "liestrata/combinatorics.hpp"
#include "liestrata/core_types.hpp"
#include "liestrata/cross_section.hpp"
#include "liestrata/error.hpp"
#include "liestrata/exact_linalg.hpp"
#include "liestrata/jacobi.hpp"
#include "liestrata/orbits.hpp"
#include "liestrata/polynomial.hpp"
#include "liestrata/rational.hpp"
