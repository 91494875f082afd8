#pragma once

#include <iosfwd>

#include "wboost/cli/scenario.hpp"
#include "wboost/invariants.hpp"

namespace wboost::cli {

/// Evaluates the scenario on its grid. When the geometry is given by
/// rapidities, Omega at each point is the signed Wigner angle about the
/// scenario's Wigner axis, composed from the 4x4 matrices.
SweepResult run_sweep(const Scenario& scenario);

/// Header row of axis names, then `omega` (unless it is an axis) and `E`.
/// One row per grid point, row-major over the axes, 17 significant digits.
void write_csv(const SweepResult& result, std::ostream& out);

void write_json(const SweepResult& result, std::ostream& out);

void write_sweep(const SweepResult& result, OutputFormat format, std::ostream& out);

}  // namespace wboost::cli
