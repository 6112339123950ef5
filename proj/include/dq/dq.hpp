#pragma once

#include "dq/bv.hpp"
#include "dq/errors.hpp"
#include "dq/expr.hpp"
#include "dq/hbar_poly.hpp"
#include "dq/json_io.hpp"
#include "dq/koszul.hpp"
#include "dq/moduli.hpp"
#include "dq/multivector.hpp"
#include "dq/poisson.hpp"
#include "dq/polynomial.hpp"
#include "dq/scalar.hpp"
#include "dq/super_poly.hpp"
#include "dq/wick.hpp"
