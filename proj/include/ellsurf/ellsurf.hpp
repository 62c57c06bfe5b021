// Umbrella header: pulls in the full library.

#pragma once

#include <ellsurf/rational.hpp>
#include <ellsurf/polynomial.hpp>
#include <ellsurf/factor.hpp>
#include <ellsurf/ratfunc.hpp>
#include <ellsurf/cyclotomic.hpp>
#include <ellsurf/matrixz.hpp>
#include <ellsurf/lattice.hpp>
#include <ellsurf/weierstrass.hpp>
#include <ellsurf/kodaira.hpp>
#include <ellsurf/torsion.hpp>
#include <ellsurf/modular.hpp>
#include <ellsurf/construction.hpp>
#include <ellsurf/isotrivial.hpp>
#include <ellsurf/catalog.hpp>
#include <ellsurf/json_io.hpp>
#include <ellsurf/verify.hpp>
