#pragma once

#include "thetaratio/bareiss.hpp"
#include "thetaratio/binary_code.hpp"
#include "thetaratio/bisection.hpp"
#include "thetaratio/catalog.hpp"
#include "thetaratio/config.hpp"
#include "thetaratio/constructions.hpp"
#include "thetaratio/criteria.hpp"
#include "thetaratio/ensemble.hpp"
#include "thetaratio/errors.hpp"
#include "thetaratio/jacobi_theta.hpp"
#include "thetaratio/lattice.hpp"
#include "thetaratio/polynomial.hpp"
#include "thetaratio/precision_real.hpp"
#include "thetaratio/ratio_polynomial.hpp"
#include "thetaratio/secrecy.hpp"
#include "thetaratio/sturm.hpp"
#include "thetaratio/weight_distribution.hpp"
