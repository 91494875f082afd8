#pragma once

// Spin-s irreducible representations of rotations.
//
// Basis ordering: row 0 is sigma = +s, descending to sigma = -s in the last
// row. Rotations are represented as D = exp(-i angle (axis . J)).

#include <complex>

#include <Eigen/Dense>

#include "wboost/minkowski.hpp"

namespace wboost {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Unitary (2s+1)-dimensional representation matrix of a rotation.
using SpinRepMatrix = ComplexMatrix;

/// Spin quantum number stored as 2s so half-integers are exact.
class Spin {
 public:
  /// Throws InputError for negative two_s.
  explicit Spin(int two_s);

  int two_s() const { return two_s_; }
  int dim() const { return two_s_ + 1; }
  double value() const { return 0.5 * two_s_; }
  /// sigma for a basis row: s - row.
  double projection(int row) const { return value() - row; }

  friend bool operator==(Spin, Spin) = default;

 private:
  int two_s_;
};

struct AngularMomentum {
  ComplexMatrix x;
  ComplexMatrix y;
  ComplexMatrix z;

  /// n . J for a (not necessarily unit) direction n.
  ComplexMatrix along(const Vec3& n) const;
};

/// Jx, Jy, Jz built from the ladder operators J+- in the sigma-descending basis.
AngularMomentum angular_momentum_operators(Spin s);

/// exp(-i angle (axis . J)), computed from the spectral decomposition of the
/// Hermitian generator. Throws InputError for a zero axis.
SpinRepMatrix rep_matrix(Spin s, const AxisAngle& r);

}  // namespace wboost
