#pragma once

// Umbrella header: the full exact-plus-numeric toolkit for polynomial
// automorphisms of the affine plane.

#include "planeauto/automorphism.hpp"
#include "planeauto/buchberger.hpp"
#include "planeauto/conjugacy.hpp"
#include "planeauto/errors.hpp"
#include "planeauto/field.hpp"
#include "planeauto/green.hpp"
#include "planeauto/io.hpp"
#include "planeauto/mpoly.hpp"
#include "planeauto/parse.hpp"
#include "planeauto/periodic.hpp"
#include "planeauto/poly.hpp"
#include "planeauto/rational.hpp"
#include "planeauto/resultant.hpp"
#include "planeauto/roots.hpp"
