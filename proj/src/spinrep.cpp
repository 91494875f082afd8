#include "wboost/spinrep.hpp"

#include <cmath>
#include <string>

#include "wboost/errors.hpp"

namespace wboost {

Spin::Spin(int two_s) : two_s_(two_s) {
  if (two_s < 0) throw InputError("spin must be non-negative, got two_s = " + std::to_string(two_s));
}

ComplexMatrix AngularMomentum::along(const Vec3& n) const {
  return n.x() * x + n.y() * y + n.z() * z;
}

AngularMomentum angular_momentum_operators(Spin s) {
  const int d = s.dim();
  const double j = s.value();

  // <sigma+1| J+ |sigma> = sqrt(j(j+1) - sigma(sigma+1)); sigma+1 sits one row up.
  ComplexMatrix raise = ComplexMatrix::Zero(d, d);
  for (int row = 1; row < d; ++row) {
    const double sigma = s.projection(row);
    raise(row - 1, row) = std::sqrt(j * (j + 1.0) - sigma * (sigma + 1.0));
  }
  const ComplexMatrix lower = raise.adjoint();

  AngularMomentum ops;
  ops.x = 0.5 * (raise + lower);
  ops.y = Complex(0.0, -0.5) * (raise - lower);
  ops.z = ComplexMatrix::Zero(d, d);
  for (int row = 0; row < d; ++row) ops.z(row, row) = s.projection(row);
  return ops;
}

SpinRepMatrix rep_matrix(Spin s, const AxisAngle& r) {
  const AxisAngle unit = AxisAngle::make(r.axis, r.angle);
  const ComplexMatrix generator = angular_momentum_operators(s).along(unit.axis);
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(generator);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  ComplexVector phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    // The spectrum of n.J is exactly {-s, ..., s}; snap away eigensolver noise.
    double mu = lambda(k);
    const double snapped = 0.5 * std::round(2.0 * mu);
    if (std::abs(mu - snapped) < 1e-8) mu = snapped;
    phases(k) = std::polar(1.0, -unit.angle * mu);
  }
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace wboost
