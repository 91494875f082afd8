#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wboost::cli {

struct VerifyOptions {
  int two_s_max = 4;
  int trials = 200;
  std::uint64_t seed = 1;
  /// Debug hook: perturbs one basis vector before the completeness check.
  bool corrupt_basis = false;
};

struct CheckOutcome {
  std::string name;
  long checks = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;

  bool passed() const { return max_deviation <= tolerance; }
};

struct VerifyReport {
  std::vector<CheckOutcome> checks;

  bool passed() const;
  long total_checks() const;
};

/// Runs every check `trials` times:
///   oracle_equivalence           closed-form vs density-matrix entropy, 20 angles per trial
///   wigner_angle_composition     closed-form vs composed Wigner angle
///   basis_multiplicity           block sizes vs 2s+1-|m|, random axis
///   basis_completeness           Gram matrix of the basis vs identity
///   basis_eigenphase             U|m,alpha> = e^{i m Omega}|m,alpha>
///   boost_composition            boost(L2) after boost(L1) vs boost(L2 L1)
///   particle_entanglement        particle-particle linear entropy before/after a boost
VerifyReport run_verification(const VerifyOptions& options);

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace wboost::cli
