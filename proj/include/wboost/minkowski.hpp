#pragma once

// Four-vectors, proper orthochronous Lorentz transformations and Wigner
// rotations. Metric signature is (+,-,-,-), units have c = 1.
//
// Transformations act actively on momenta: a boost L maps the four-momentum
// p to L p.

#include <Eigen/Dense>

namespace wboost {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Relative tolerance for mass-shell checks.
inline constexpr double kOnShellTolerance = 1e-9;
/// Absolute tolerance for orthogonality / little-group checks on rotations.
inline constexpr double kRotationTolerance = 1e-10;

/// diag(1, -1, -1, -1)
const Mat4& minkowski_metric();

struct FourVector {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static FourVector from_components(const Vec4& c) { return {c(0), c(1), c(2), c(3)}; }

  /// (sqrt(M^2 + |p|^2), p)
  static FourVector on_shell(double mass, const Vec3& momentum);

  Vec3 spatial() const { return {x, y, z}; }
  Vec4 components() const { return {t, x, y, z}; }

  /// t^2 - |p|^2
  double minkowski_square() const;
  /// sqrt of minkowski_square(); zero for null or spacelike vectors.
  double invariant_mass() const;
  bool is_on_shell(double mass, double rel_tol = kOnShellTolerance) const;

  FourVector spatially_reflected() const { return {t, -x, -y, -z}; }
};

/// Rapidity three-vector; the associated speed is tanh(|eta|).
struct Rapidity {
  Vec3 vector = Vec3::Zero();

  double magnitude() const { return vector.norm(); }
};

/// Rotation by `angle` (right-handed) about the unit vector `axis`.
struct AxisAngle {
  Vec3 axis = Vec3::UnitZ();
  double angle = 0.0;

  /// Normalizes `axis`; throws InputError for a zero axis.
  static AxisAngle make(const Vec3& axis, double angle);

  Mat3 matrix() const;

  /// Axis with first significant component positive, angle wrapped to
  /// (-pi, pi]. Zero angle maps to the axis (0, 0, 1).
  AxisAngle canonical() const;
};

class LorentzMatrix {
 public:
  LorentzMatrix() : m_(Mat4::Identity()) {}

  /// Validates Lambda^T g Lambda = g and proper orthochronicity. The
  /// tolerance is scaled by the largest squared entry.
  static LorentzMatrix from_matrix(const Mat4& m, double tol = 1e-10);

  static LorentzMatrix rotation(const AxisAngle& r);

  const Mat4& matrix() const { return m_; }
  double operator()(int row, int col) const { return m_(row, col); }

  FourVector apply(const FourVector& p) const;
  LorentzMatrix operator*(const LorentzMatrix& rhs) const;
  /// g Lambda^T g
  LorentzMatrix inverse() const;

  /// max_ij |(Lambda^T g Lambda - g)_ij|
  double metric_defect() const;

 private:
  explicit LorentzMatrix(const Mat4& m) : m_(m) {}
  friend LorentzMatrix standard_boost(const FourVector&, double);
  friend LorentzMatrix boost_from_rapidity(const Rapidity&);

  Mat4 m_;
};

/// The pure boost L_p taking (M, 0, 0, 0) to p.
LorentzMatrix standard_boost(const FourVector& p, double mass);

/// Pure boost along xi with speed tanh|xi|.
LorentzMatrix boost_from_rapidity(const Rapidity& xi);

/// M (cosh|eta|, sinh|eta| eta_hat)
FourVector momentum_from_rapidity(double mass, const Rapidity& eta);

/// W = L_{Lambda p}^{-1} Lambda L_p as a 4x4 matrix. Evaluated in extended
/// precision; p is projected onto the mass shell and Lambda onto the
/// Lorentz group after validation.
Mat4 wigner_rotation_matrix(const LorentzMatrix& lambda, const FourVector& p, double mass);

/// Axis-angle form of the Wigner rotation. Throws ToleranceError when the
/// composed matrix is not a pure rotation within kRotationTolerance.
AxisAngle wigner_rotation(const LorentzMatrix& lambda, const FourVector& p, double mass);

/// Wigner rotation for momentum rapidity `eta` and boost rapidity `xi`,
/// composed from the rapidities in 50-digit arithmetic. Remains accurate
/// for rapidities far beyond what a double-valued LorentzMatrix can carry.
AxisAngle wigner_rotation_from_rapidities(const Rapidity& eta, const Rapidity& xi);

/// Wigner angle for a boost perpendicular to the momentum:
/// tan(Omega) = sinh|eta| sinh|xi| / (cosh|eta| + cosh|xi|).
double wigner_angle(double eta_mag, double xi_mag);

/// Throws InputError for matrices that are not rotations within
/// kRotationTolerance. Result is canonical (see AxisAngle::canonical).
AxisAngle rotation_to_axis_angle(const Mat3& r);

}  // namespace wboost
