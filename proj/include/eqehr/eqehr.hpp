#pragma once

#include "eqehr/character.hpp"
#include "eqehr/cyclotomic.hpp"
#include "eqehr/ehrhart.hpp"
#include "eqehr/equivariant.hpp"
#include "eqehr/errors.hpp"
#include "eqehr/families.hpp"
#include "eqehr/group.hpp"
#include "eqehr/lattice.hpp"
#include "eqehr/linalg.hpp"
#include "eqehr/parallel.hpp"
#include "eqehr/poly.hpp"
#include "eqehr/polytope.hpp"
#include "eqehr/ratfun.hpp"
#include "eqehr/rational.hpp"
#include "eqehr/symmetry.hpp"
