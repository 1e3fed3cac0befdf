#pragma once

#include "hdg/chain_complex.hpp"
#include "hdg/complex_io.hpp"
#include "hdg/embedded_complex.hpp"
#include "hdg/errors.hpp"
#include "hdg/hyperstructures.hpp"
#include "hdg/laplacian.hpp"
#include "hdg/pdb.hpp"
#include "hdg/persistence.hpp"
#include "hdg/rational_linalg.hpp"
#include "hdg/reduction.hpp"
