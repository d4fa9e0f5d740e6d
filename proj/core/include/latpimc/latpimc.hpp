#pragma once

#include "latpimc/bessel.hpp"
#include "latpimc/errors.hpp"
#include "latpimc/estimators.hpp"
#include "latpimc/exact_free.hpp"
#include "latpimc/exact_striped.hpp"
#include "latpimc/lattice.hpp"
#include "latpimc/metropolis.hpp"
#include "latpimc/quadrature.hpp"
#include "latpimc/rng.hpp"
#include "latpimc/statistics.hpp"
#include "latpimc/step_sampler.hpp"
#include "latpimc/walk.hpp"
#include "latpimc/walk_sampler.hpp"
