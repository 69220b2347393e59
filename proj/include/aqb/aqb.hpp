#pragma once

// Umbrella header: interpolating-Hamiltonian construction, uncertainty-based
// runtime lower bounds, exact state-vector verification, gap analysis and
// random-graph clique tooling.

#include "aqb/basis.hpp"
#include "aqb/bounds.hpp"
#include "aqb/cli.hpp"
#include "aqb/dynamics.hpp"
#include "aqb/errors.hpp"
#include "aqb/gap.hpp"
#include "aqb/graph.hpp"
#include "aqb/io.hpp"
#include "aqb/numeric.hpp"
#include "aqb/operator.hpp"
#include "aqb/problem.hpp"
#include "aqb/rng.hpp"
#include "aqb/schedule.hpp"
#include "aqb/spectrum.hpp"
#include "aqb/state.hpp"
#include "aqb/subspace.hpp"
#include "aqb/zoo.hpp"
