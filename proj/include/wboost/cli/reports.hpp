#pragma once

#include <iosfwd>

#include "json.hpp"
#include "wboost/invariants.hpp"

namespace wboost::cli {

inline constexpr double kAngleAgreementTolerance = 1e-10;

/// Closed-form Wigner angle next to the angle of the composed rotation
/// L^{-1}_{Lambda p} Lambda L_p, for momentum along z and boost along x.
struct AngleReport {
  double eta = 0.0;
  double xi = 0.0;
  double closed_form = 0.0;
  double composition = 0.0;
  double delta = 0.0;

  bool agrees() const { return delta <= kAngleAgreementTolerance; }
};

AngleReport angle_report(double eta, double xi);
void print_angle_report(const AngleReport& report, std::ostream& out);

/// {"two_s", "axis", "ordering", "blocks": [{"m", "multiplicity",
///   "vectors": [{"alpha", "amplitudes": [[re, im], ...]}]}]}
nlohmann::ordered_json basis_to_json(const InvariantBasis& basis);

}  // namespace wboost::cli
