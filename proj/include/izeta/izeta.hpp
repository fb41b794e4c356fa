#pragma once

// Exact ideal-counting zeta functions of Z[x]/x(x-alpha)(x-beta)Z[x],
// equivalently of the ring generated by an integer matrix with three
// distinct integer eigenvalues.

#include "dirichlet.hpp"
#include "local_zeta.hpp"
#include "numeric.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "spectra.hpp"
