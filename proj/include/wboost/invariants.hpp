#pragma once

// SO(2)-invariant two-particle spin basis for EPR momenta (p, -p) and the
// spin-momentum entanglement it produces under a perpendicular boost.
//
// With D = exp(-i Omega n.J), the EPR spin operator is
//   U = D(n, Omega) (x) D(n, -Omega) = exp(-i Omega G),  G = n.J (x) 1 - 1 (x) n.J.
// The block label m is minus the eigenvalue of G, so U|m, alpha> =
// exp(+i m Omega)|m, alpha>. With n = (0, 1, 0) this puts
// chi+ = (phi+ + i psi-)/sqrt(2) in the m = +1 block.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wboost/boostmap.hpp"
#include "wboost/spinrep.hpp"

namespace wboost {

/// Wigner axis of the reference geometry: momentum along z, boost along x.
inline const Vec3 kCanonicalEprAxis = Vec3::UnitY();

/// D(axis, omega) (x) D(axis, -omega). Throws InputError for a zero axis.
ComplexMatrix epr_spin_operator(Spin s, double omega, const Vec3& axis);

/// a_m = 2s + 1 - |m| for |m| <= 2s, zero otherwise.
int expected_multiplicity(Spin s, int m);

struct InvariantBasis {
  Spin spin{0};
  Vec3 axis = kCanonicalEprAxis;
  /// m -> orthonormal vectors |m, alpha> in the product basis, alpha = 0, 1, ...
  std::map<int, std::vector<ComplexVector>> blocks;

  int multiplicity(int m) const;
  const ComplexVector& vector(int m, int alpha) const;
  /// All vectors as columns, ordered by ascending m then alpha.
  ComplexMatrix as_matrix() const;
};

/// Simultaneous eigenbasis of the EPR spin operators for every Omega.
///
/// Within each block the vectors are produced by pivoted Gram-Schmidt on
/// the projected product-basis kets, phased so the largest component (the
/// first one, among ties within 1e-12) is real positive, then ordered by
/// descending largest-component magnitude (ties broken by its
/// product-basis index). The result is deterministic for a given axis.
///
/// Throws InputError for a zero axis and ToleranceError when an eigenvalue
/// of G is farther than 1e-6 from an integer.
InvariantBasis build_invariant_basis(Spin s, const Vec3& axis = kCanonicalEprAxis);

/// Amplitudes c_{m alpha}; alpha is zero-based.
class CoefficientSet {
 public:
  using Key = std::pair<int, int>;

  CoefficientSet() = default;
  explicit CoefficientSet(std::map<Key, Complex> amplitudes);

  const std::map<Key, Complex>& amplitudes() const { return amplitudes_; }
  void set(int m, int alpha, Complex value) { amplitudes_[{m, alpha}] = value; }
  Complex get(int m, int alpha) const;

  double norm_squared() const;
  /// sum_alpha |c_{m alpha}|^2 keyed by m (zero weights dropped).
  std::map<int, double> weights() const;
  /// Throws InputError for an all-zero set.
  CoefficientSet normalized() const;
  /// Throws InputError if any (m, alpha) is absent from `basis`.
  void check_against(const InvariantBasis& basis) const;

 private:
  std::map<Key, Complex> amplitudes_;
};

/// sum c_{m alpha} |m, alpha>
ComplexVector spin_vector(const CoefficientSet& c, const InvariantBasis& basis);

/// c_{m alpha} = <m, alpha|v>
CoefficientSet coefficients_of(const ComplexVector& v, const InvariantBasis& basis);

/// E = 2(1 - sum_{m m'} w_m w_m' cos^2((m - m') Omega)), w_m = sum_alpha |c_{m alpha}|^2.
/// Throws InputError unless c is normalized within 1e-12.
double closed_form_entropy(const CoefficientSet& c, double omega);

/// (|p, -p> + |-p, p>)/sqrt(2) (x) sum c |m, alpha>
TwoParticleState epr_initial_state(const CoefficientSet& c, const InvariantBasis& basis,
                                   const MomentumLabel& plus, const MomentumLabel& minus);

/// sum_m (e^{i m Omega}|Lp, -Lp> + e^{-i m Omega}|-Lp, Lp>)/sqrt(2) (x) sum_alpha c |m, alpha>,
/// where `plus` / `minus` carry the boosted momenta.
TwoParticleState epr_final_state(const CoefficientSet& c, double omega, const InvariantBasis& basis,
                                 const MomentumLabel& plus, const MomentumLabel& minus);

/// Linear entropy across the momentum | spin cut of epr_final_state,
/// evaluated through the full density matrix.
double brute_force_entropy(const CoefficientSet& c, double omega, const InvariantBasis& basis);

/// sin(theta)cos(phi)|m=1> + sin(theta)sin(phi)|m=0> + cos(theta)|m=-1>, alpha = 0.
/// Throws InputError for s = 0.
CoefficientSet param_a_state(double theta, double phi, Spin s);

/// cos(theta)|m> + e^{i phi} sin(theta)|n>, alpha = 0. Throws InputError for m == n.
CoefficientSet param_b_state(double theta, double phi, int m, int n);

/// sin^2(2 theta) sin^2((m - n) Omega)
double param_b_entropy(double theta, int m, int n, double omega);

/// Named two-particle spin states in the product basis, defined for the
/// canonical axis (0, 1, 0).
///   s = 1/2: psi+, psi-, phi+, phi-, chi+, chi-
///   s = 1:   psi1, psi2, psi3, beta1, beta2
/// Throws InputError for any other spin.
std::map<std::string, ComplexVector> fixture_states(Spin s);

struct SweepAxis {
  std::string name;
  std::vector<double> values;
};

/// Entanglement over a parameter grid, stored row-major over `axes`
/// (last axis fastest). A grid without axes holds a single point.
struct SweepResult {
  std::vector<SweepAxis> axes;
  std::vector<double> omega;         // Wigner angle per grid point
  std::vector<double> entanglement;  // E per grid point, in [0, 2] up to rounding
  std::map<std::string, std::string> metadata;

  std::size_t grid_size() const;
  /// Axis coordinates of a grid point.
  std::vector<double> coordinates(std::size_t index) const;
};

}  // namespace wboost
