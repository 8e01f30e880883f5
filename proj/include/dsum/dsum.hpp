#pragma once

#include "dsum/complex.hpp"
#include "dsum/coth_series.hpp"
#include "dsum/decomposition.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/errors.hpp"
#include "dsum/laurent_series.hpp"
#include "dsum/polygon.hpp"
#include "dsum/polynomial.hpp"
#include "dsum/rational.hpp"
#include "dsum/simplex.hpp"
#include "dsum/theorem.hpp"
