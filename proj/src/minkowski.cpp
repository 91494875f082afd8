#include "wboost/minkowski.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "wboost/errors.hpp"

namespace wboost {

namespace {

constexpr double kZeroAngle = 1e-14;
// Axis components smaller than this do not decide the canonical sign.
constexpr double kAxisSignThreshold = 1e-9;

template <class T>
using Mat4T = std::array<std::array<T, 4>, 4>;

template <class T>
using Vec3T = std::array<T, 3>;

template <class T>
Mat4T<T> multiply(const Mat4T<T>& a, const Mat4T<T>& b) {
  Mat4T<T> c{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      T acc = 0;
      for (int k = 0; k < 4; ++k) acc += a[i][k] * b[k][j];
      c[i][j] = acc;
    }
  }
  return c;
}

// Pure boost taking (M,0,0,0) to (sqrt(M^2 + |p|^2), p).
template <class T>
Mat4T<T> pure_boost(const Vec3T<T>& p, const T& mass) {
  using std::sqrt;
  const T p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  const T energy = sqrt(mass * mass + p2);
  Mat4T<T> l{};
  l[0][0] = energy / mass;
  for (int i = 0; i < 3; ++i) {
    l[0][i + 1] = p[i] / mass;
    l[i + 1][0] = p[i] / mass;
    for (int j = 0; j < 3; ++j) {
      l[i + 1][j + 1] = (i == j ? T(1) : T(0)) + p[i] * p[j] / (mass * (mass + energy));
    }
  }
  return l;
}

// Nearest proper Lorentz matrix in the factored form B R: B is the pure
// boost carrying the rest frame to Lambda's first column, R the polar
// (Newton-Schulz) orthonormalization of the remaining rotation.
template <class T>
Mat4T<T> lorentz_projection(const Mat4T<T>& lambda) {
  const Vec3T<T> u{lambda[1][0], lambda[2][0], lambda[3][0]};
  const Mat4T<T> b = pure_boost(u, T(1));
  Mat4T<T> b_inverse = b;
  for (int i = 1; i < 4; ++i) {
    b_inverse[0][i] = -b[0][i];
    b_inverse[i][0] = -b[i][0];
  }
  const Mat4T<T> rest = multiply(b_inverse, lambda);
  std::array<std::array<T, 3>, 3> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = rest[i + 1][j + 1];
  for (int iter = 0; iter < 3; ++iter) {
    std::array<std::array<T, 3>, 3> rtr{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) rtr[i][j] += r[k][i] * r[k][j];
    std::array<std::array<T, 3>, 3> next{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          next[i][j] += r[i][k] * ((k == j ? T(3) : T(0)) - rtr[k][j]) / T(2);
    r = next;
  }
  Mat4T<T> rot{};
  rot[0][0] = T(1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rot[i + 1][j + 1] = r[i][j];
  return multiply(b, rot);
}

// L_{Lambda p}^{-1} Lambda L_p, with p given by its spatial part.
template <class T>
Mat4T<T> compose_wigner(const Mat4T<T>& lambda, const Vec3T<T>& p, const T& mass) {
  using std::sqrt;
  const T energy = sqrt(mass * mass + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  const std::array<T, 4> pin{energy, p[0], p[1], p[2]};
  Vec3T<T> q_reversed{};
  for (int i = 0; i < 3; ++i) {
    T acc = 0;
    for (int k = 0; k < 4; ++k) acc += lambda[i + 1][k] * pin[k];
    q_reversed[i] = -acc;
  }
  return multiply(multiply(pure_boost(q_reversed, mass), lambda), pure_boost(p, mass));
}

template <class T>
Mat4 to_double(const Mat4T<T>& m) {
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = static_cast<double>(m[i][j]);
  return out;
}

void require_mass(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw InputError("mass must be positive and finite, got " + std::to_string(mass));
  }
}

void require_on_shell(const FourVector& p, double mass) {
  if (!p.is_on_shell(mass)) {
    throw InputError("four-momentum is off the mass shell for M = " + std::to_string(mass) +
                     " (p^2 = " + std::to_string(p.minkowski_square()) + ")");
  }
}

double little_group_defect(const Mat4& w) {
  double defect = std::abs(w(0, 0) - 1.0);
  for (int i = 1; i < 4; ++i) {
    defect = std::max({defect, std::abs(w(0, i)), std::abs(w(i, 0))});
  }
  return defect;
}

AxisAngle checked_wigner_axis_angle(const Mat4& w) {
  const double defect = little_group_defect(w);
  if (defect > kRotationTolerance) {
    throw ToleranceError("Wigner rotation does not fix the rest-frame momentum (defect " +
                         std::to_string(defect) + ")");
  }
  try {
    return rotation_to_axis_angle(w.block<3, 3>(1, 1));
  } catch (const InputError& e) {
    throw ToleranceError(std::string("Wigner rotation is not orthogonal: ") + e.what());
  }
}

}  // namespace

const Mat4& minkowski_metric() {
  static const Mat4 g = Vec4(1.0, -1.0, -1.0, -1.0).asDiagonal();
  return g;
}

FourVector FourVector::on_shell(double mass, const Vec3& momentum) {
  require_mass(mass);
  return {std::sqrt(mass * mass + momentum.squaredNorm()), momentum.x(), momentum.y(),
          momentum.z()};
}

double FourVector::minkowski_square() const { return t * t - x * x - y * y - z * z; }

double FourVector::invariant_mass() const {
  const double m2 = minkowski_square();
  return m2 > 0.0 ? std::sqrt(m2) : 0.0;
}

bool FourVector::is_on_shell(double mass, double rel_tol) const {
  if (!(t > 0.0)) return false;
  const double scale = std::max(mass * mass, t * t);
  return std::abs(minkowski_square() - mass * mass) <= rel_tol * scale;
}

AxisAngle AxisAngle::make(const Vec3& axis, double angle) {
  const double n = axis.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw InputError("rotation axis must be a nonzero vector");
  return {axis / n, angle};
}

Mat3 AxisAngle::matrix() const {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

AxisAngle AxisAngle::canonical() const {
  double theta = std::remainder(angle, 2.0 * std::numbers::pi);
  if (theta <= -std::numbers::pi) theta = std::numbers::pi;
  if (std::abs(theta) < kZeroAngle) return {Vec3::UnitZ(), 0.0};

  Vec3 n = axis.normalized();
  for (int i = 0; i < 3; ++i) {
    if (std::abs(n(i)) > kAxisSignThreshold) {
      if (n(i) < 0.0) {
        n = -n;
        theta = -theta;
        if (theta <= -std::numbers::pi) theta = std::numbers::pi;
      }
      break;
    }
  }
  return {n, theta};
}

LorentzMatrix LorentzMatrix::from_matrix(const Mat4& m, double tol) {
  LorentzMatrix l(m);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff() * m.cwiseAbs().maxCoeff());
  if (l.metric_defect() > tol * scale) {
    throw InputError("matrix does not preserve the Minkowski metric");
  }
  if (m(0, 0) < 1.0 - tol * scale || m.determinant() <= 0.0) {
    throw InputError("Lorentz matrix is not proper orthochronous");
  }
  return l;
}

LorentzMatrix LorentzMatrix::rotation(const AxisAngle& r) {
  Mat4 m = Mat4::Identity();
  m.block<3, 3>(1, 1) = r.matrix();
  return LorentzMatrix(m);
}

FourVector LorentzMatrix::apply(const FourVector& p) const {
  return FourVector::from_components(m_ * p.components());
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& rhs) const {
  return LorentzMatrix(m_ * rhs.m_);
}

LorentzMatrix LorentzMatrix::inverse() const {
  const Mat4& g = minkowski_metric();
  return LorentzMatrix(g * m_.transpose() * g);
}

double LorentzMatrix::metric_defect() const {
  const Mat4& g = minkowski_metric();
  return (m_.transpose() * g * m_ - g).cwiseAbs().maxCoeff();
}

LorentzMatrix standard_boost(const FourVector& p, double mass) {
  require_mass(mass);
  require_on_shell(p, mass);
  const Vec3 s = p.spatial();
  Mat4 l;
  l(0, 0) = p.t / mass;
  l.block<1, 3>(0, 1) = s.transpose() / mass;
  l.block<3, 1>(1, 0) = s / mass;
  l.block<3, 3>(1, 1) = Mat3::Identity() + s * s.transpose() / (mass * (mass + p.t));
  return LorentzMatrix(l);
}

LorentzMatrix boost_from_rapidity(const Rapidity& xi) {
  const double r = xi.magnitude();
  if (!std::isfinite(r)) throw InputError("rapidity must be finite");
  if (r == 0.0) return LorentzMatrix();
  const Vec3 n = xi.vector / r;
  Mat4 l;
  l(0, 0) = std::cosh(r);
  l.block<1, 3>(0, 1) = std::sinh(r) * n.transpose();
  l.block<3, 1>(1, 0) = std::sinh(r) * n;
  // (cosh r - 1) written as 2 sinh^2(r/2) to stay accurate for small r
  const double sh = std::sinh(0.5 * r);
  l.block<3, 3>(1, 1) = Mat3::Identity() + 2.0 * sh * sh * n * n.transpose();
  return LorentzMatrix(l);
}

FourVector momentum_from_rapidity(double mass, const Rapidity& eta) {
  require_mass(mass);
  const double r = eta.magnitude();
  if (!std::isfinite(r)) throw InputError("rapidity must be finite");
  if (r == 0.0) return {mass, 0.0, 0.0, 0.0};
  const Vec3 p = mass * std::sinh(r) * eta.vector / r;
  return {mass * std::cosh(r), p.x(), p.y(), p.z()};
}

Mat4 wigner_rotation_matrix(const LorentzMatrix& lambda, const FourVector& p, double mass) {
  require_mass(mass);
  require_on_shell(p, mass);
  using T = long double;
  Mat4T<T> l{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) l[i][j] = lambda(i, j);
  const Vec3T<T> ps{p.x, p.y, p.z};
  return to_double(compose_wigner(lorentz_projection(l), ps, static_cast<T>(mass)));
}

AxisAngle wigner_rotation(const LorentzMatrix& lambda, const FourVector& p, double mass) {
  return checked_wigner_axis_angle(wigner_rotation_matrix(lambda, p, mass));
}

AxisAngle wigner_rotation_from_rapidities(const Rapidity& eta, const Rapidity& xi) {
  using T = boost::multiprecision::cpp_bin_float_50;
  const double eta_mag = eta.magnitude();
  const double xi_mag = xi.magnitude();
  if (!std::isfinite(eta_mag) || !std::isfinite(xi_mag)) {
    throw InputError("rapidities must be finite");
  }
  const T one(1);

  Vec3T<T> p{T(0), T(0), T(0)};
  if (eta_mag > 0.0) {
    const T r = sqrt(T(eta.vector.x()) * eta.vector.x() + T(eta.vector.y()) * eta.vector.y() +
                     T(eta.vector.z()) * eta.vector.z());
    const T scale = sinh(r) / r;
    for (int i = 0; i < 3; ++i) p[i] = scale * T(eta.vector(i));
  }

  Mat4T<T> lambda{};
  for (int i = 0; i < 4; ++i) lambda[i][i] = one;
  if (xi_mag > 0.0) {
    const T r = sqrt(T(xi.vector.x()) * xi.vector.x() + T(xi.vector.y()) * xi.vector.y() +
                     T(xi.vector.z()) * xi.vector.z());
    Vec3T<T> boost_momentum{};
    const T scale = sinh(r) / r;
    for (int i = 0; i < 3; ++i) boost_momentum[i] = scale * T(xi.vector(i));
    lambda = pure_boost(boost_momentum, one);
  }

  return checked_wigner_axis_angle(to_double(compose_wigner(lambda, p, one)));
}

double wigner_angle(double eta_mag, double xi_mag) {
  if (!(eta_mag >= 0.0) || !(xi_mag >= 0.0)) {
    throw InputError("rapidity magnitudes must be non-negative");
  }
  // tan(Omega) divided through by cosh|eta| cosh|xi|; finite for any input.
  return std::atan2(std::tanh(eta_mag) * std::tanh(xi_mag),
                    1.0 / std::cosh(eta_mag) + 1.0 / std::cosh(xi_mag));
}

AxisAngle rotation_to_axis_angle(const Mat3& r) {
  const double orth_defect = (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff();
  const double det_defect = std::abs(r.determinant() - 1.0);
  if (!(orth_defect <= kRotationTolerance) || !(det_defect <= kRotationTolerance)) {
    throw InputError("matrix is not a proper rotation (orthogonality defect " +
                     std::to_string(orth_defect) + ", det defect " + std::to_string(det_defect) +
                     ")");
  }

  const Vec3 v(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  const double sin_theta = 0.5 * v.norm();
  const double cos_theta = 0.5 * (r.trace() - 1.0);
  const double theta = std::atan2(sin_theta, cos_theta);

  if (theta < kZeroAngle) return {Vec3::UnitZ(), 0.0};

  Vec3 axis;
  if (cos_theta >= 0.0) {
    axis = v.normalized();
  } else {
    // Near pi the antisymmetric part vanishes; read the axis off
    // (R + R^T)/2 = cos(theta) I + (1 - cos(theta)) n n^T instead.
    const Mat3 nn = (0.5 * (r + r.transpose()) - cos_theta * Mat3::Identity()) / (1.0 - cos_theta);
    int k = 0;
    nn.diagonal().maxCoeff(&k);
    axis = nn.col(k) / std::sqrt(nn(k, k));
    axis.normalize();
    if (axis.dot(v) < 0.0) axis = -axis;
  }
  return AxisAngle{axis, theta}.canonical();
}

}  // namespace wboost
