#pragma once

#include "combinatorics.hpp"
#include "exact.hpp"
#include "exponent.hpp"
#include "gtbasis.hpp"
#include "lattice.hpp"
#include "operators.hpp"
#include "polyengine.hpp"
#include "series.hpp"
#include "verify.hpp"
