#pragma once

#include "kdp/diagnostics.hpp"
#include "kdp/digraph.hpp"
#include "kdp/error.hpp"
#include "kdp/oracle.hpp"
#include "kdp/pareto.hpp"
#include "kdp/rails.hpp"
#include "kdp/random.hpp"
#include "kdp/solver.hpp"
#include "kdp/tracker.hpp"
