#pragma once

#include "hyparr/arrangement.hpp"
#include "hyparr/groebner.hpp"
#include "hyparr/hilbert.hpp"
#include "hyparr/ideal.hpp"
#include "hyparr/ideal_ops.hpp"
#include "hyparr/lattice.hpp"
#include "hyparr/points.hpp"
#include "hyparr/poly.hpp"
#include "hyparr/poly_io.hpp"
#include "hyparr/qlinalg.hpp"
#include "hyparr/reconstruct.hpp"
