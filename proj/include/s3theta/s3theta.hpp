#pragma once

// Umbrella header for the deformed 3-sphere toolkit: coordinate algebra,
// Dirac operators, spectral calculus, Chern-Simons actions and the
// gauge-fixed partition function.

#include "s3theta/alg_element.hpp"
#include "s3theta/chern_simons.hpp"
#include "s3theta/connection.hpp"
#include "s3theta/context.hpp"
#include "s3theta/dirac.hpp"
#include "s3theta/gauge_fixing.hpp"
#include "s3theta/json_io.hpp"
#include "s3theta/local_index.hpp"
#include "s3theta/partition.hpp"
#include "s3theta/peter_weyl.hpp"
#include "s3theta/quadrature.hpp"
#include "s3theta/residue.hpp"
#include "s3theta/spin_matrix.hpp"
#include "s3theta/trig_coeff.hpp"
#include "s3theta/zeta.hpp"
