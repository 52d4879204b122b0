// Umbrella header.
#pragma once

#include "error.hpp"
#include "fbasis.hpp"
#include "json_io.hpp"
#include "matrix.hpp"
#include "model.hpp"
#include "operators.hpp"
#include "oracles.hpp"
#include "partitions.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "scalar.hpp"
#include "solver.hpp"
#include "sympoly.hpp"
