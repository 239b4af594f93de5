#ifndef NEVILLE_NEVILLE_HPP
#define NEVILLE_NEVILLE_HPP

// Polynomial interpolation with derivatives: an extended Neville tableau
// evaluates the interpolating polynomial and all of its derivatives in one
// pass, a table layer runs windowed local interpolation over sampled
// functions, and Newton-Raphson solvers use the derivative output for root
// finding and extremum location.

#include "neville/errors.hpp"
#include "neville/experiments.hpp"
#include "neville/node_set.hpp"
#include "neville/sampling.hpp"
#include "neville/solver.hpp"
#include "neville/stats.hpp"
#include "neville/table.hpp"
#include "neville/tableau.hpp"

#endif // NEVILLE_NEVILLE_HPP
