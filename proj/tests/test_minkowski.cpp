#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "wboost/errors.hpp"
#include "wboost/minkowski.hpp"
#include "wboost/sampling.hpp"

using namespace wboost;
using std::numbers::pi;

namespace {

double max_abs_diff(const Mat4& a, const Mat4& b) { return (a - b).cwiseAbs().maxCoeff(); }

FourVector rest(double mass) { return {mass, 0.0, 0.0, 0.0}; }

}  // namespace

TEST_CASE("standard boost of a particle at rest is the identity") {
  const LorentzMatrix l = standard_boost(rest(2.5), 2.5);
  CHECK(max_abs_diff(l.matrix(), Mat4::Identity()) == 0.0);
}

TEST_CASE("standard boost along x matches the hand-expanded matrix") {
  const double ch = std::cosh(1.0);
  const double sh = std::sinh(1.0);
  // Expanding the block formula entrywise with M = 1:
  //   L00 = p0, L0x = Lx0 = px, Lxx = 1 + px^2 / (1 + p0), Lyy = Lzz = 1.
  const double lxx = 1.0 + sh * sh / (1.0 + ch);
  CHECK(lxx == doctest::Approx(ch).epsilon(1e-15));
  Mat4 expected;
  expected << ch, sh, 0, 0,
              sh, ch, 0, 0,
              0, 0, 1, 0,
              0, 0, 0, 1;
  const LorentzMatrix l = standard_boost({ch, sh, 0.0, 0.0}, 1.0);
  CHECK(max_abs_diff(l.matrix(), expected) < 1e-15);
  const FourVector image = l.apply(rest(1.0));
  CHECK(image.t == doctest::Approx(ch).epsilon(1e-15));
  CHECK(image.x == doctest::Approx(sh).epsilon(1e-15));
}

TEST_CASE("standard boost maps the rest momentum onto random on-shell momenta") {
  sampling::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const double mass = sampling::uniform(rng, 0.1, 3.0);
    const Vec3 p = sampling::uniform(rng, 0.0, 4.0) * sampling::unit_vector(rng);
    const FourVector target = FourVector::on_shell(mass, p);
    const FourVector image = standard_boost(target, mass).apply(rest(mass));
    const double scale = std::max(1.0, target.t);
    CHECK((image.components() - target.components()).cwiseAbs().maxCoeff() < 1e-12 * scale);
  }
}

TEST_CASE("standard boost rejects bad inputs") {
  CHECK_THROWS_AS(standard_boost(rest(1.0), 0.0), InputError);
  CHECK_THROWS_AS(standard_boost(rest(1.0), -1.0), InputError);
  CHECK_THROWS_AS(standard_boost({1.0, 0.5, 0.0, 0.0}, 1.0), InputError);
  // within the relative 1e-9 slack
  const FourVector p = FourVector::on_shell(1.0, Vec3(0.3, 0.0, 0.0));
  CHECK_NOTHROW(standard_boost({p.t * (1.0 + 1e-11), p.x, p.y, p.z}, 1.0));
  CHECK_THROWS_AS(standard_boost({p.t * (1.0 + 1e-7), p.x, p.y, p.z}, 1.0), InputError);
}

TEST_CASE("boost from rapidity") {
  CHECK(max_abs_diff(boost_from_rapidity(Rapidity{}).matrix(), Mat4::Identity()) == 0.0);

  const LorentzMatrix a = boost_from_rapidity(Rapidity{Vec3(1.0, 0.0, 0.0)});
  const LorentzMatrix b = standard_boost({std::cosh(1.0), std::sinh(1.0), 0.0, 0.0}, 1.0);
  CHECK(max_abs_diff(a.matrix(), b.matrix()) < 1e-15);

  sampling::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Vec3 xi = sampling::uniform(rng, 0.0, 3.0) * sampling::unit_vector(rng);
    const LorentzMatrix forward = boost_from_rapidity(Rapidity{xi});
    const LorentzMatrix back = boost_from_rapidity(Rapidity{-xi});
    CHECK(max_abs_diff((forward * back).matrix(), Mat4::Identity()) < 1e-12);
    // speed is tanh|xi|
    const FourVector moved = forward.apply(rest(1.0));
    CHECK(moved.spatial().norm() / moved.t == doctest::Approx(std::tanh(xi.norm())).epsilon(1e-13));
  }
}

TEST_CASE("generated Lorentz matrices preserve the metric") {
  sampling::Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const LorentzMatrix l = sampling::lorentz(rng, 2.0);
    CHECK(l.metric_defect() < 1e-12);
    CHECK(l.matrix().determinant() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(l(0, 0) >= 1.0);
    CHECK(max_abs_diff((l * l.inverse()).matrix(), Mat4::Identity()) < 1e-12);
  }
}

TEST_CASE("LorentzMatrix::from_matrix validates") {
  Mat4 bad = Mat4::Identity();
  bad(1, 1) = 2.0;
  CHECK_THROWS_AS(LorentzMatrix::from_matrix(bad), InputError);
  Mat4 parity = Mat4::Identity();
  parity(1, 1) = parity(2, 2) = parity(3, 3) = -1.0;
  CHECK_THROWS_AS(LorentzMatrix::from_matrix(parity), InputError);
  const Mat4 good = boost_from_rapidity(Rapidity{Vec3(0.2, -0.4, 0.1)}).matrix();
  CHECK_NOTHROW(LorentzMatrix::from_matrix(good));
}

TEST_CASE("rotation_to_axis_angle") {
  SUBCASE("identity") {
    const AxisAngle r = rotation_to_axis_angle(Mat3::Identity());
    CHECK(r.angle == 0.0);
    CHECK(r.axis == Vec3::UnitZ());
  }
  SUBCASE("pi/3 about y") {
    const AxisAngle r = rotation_to_axis_angle(AxisAngle{Vec3::UnitY(), pi / 3}.matrix());
    CHECK((r.axis - Vec3::UnitY()).norm() < 1e-15);
    CHECK(r.angle == doctest::Approx(pi / 3).epsilon(1e-15));
  }
  SUBCASE("transpose reverses the angle about the canonical axis") {
    sampling::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
      const AxisAngle in{sampling::unit_vector(rng), sampling::uniform(rng, 0.01, 3.1)};
      const AxisAngle a = rotation_to_axis_angle(in.matrix());
      const AxisAngle b = rotation_to_axis_angle(in.matrix().transpose());
      CHECK((a.axis - b.axis).norm() < 1e-12);
      CHECK(a.angle == doctest::Approx(-b.angle).epsilon(1e-12));
      CHECK((a.matrix() - in.matrix()).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
  SUBCASE("angles at and near pi") {
    const Vec3 axis = Vec3(0.3, -0.5, 0.8).normalized();
    for (double angle : {pi, pi - 1e-9, pi - 1e-5, -(pi - 1e-7)}) {
      const AxisAngle r = rotation_to_axis_angle(AxisAngle{axis, angle}.matrix());
      CHECK((r.matrix() - AxisAngle{axis, angle}.matrix()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(r.axis.x() > 0.0);
      CHECK(r.angle <= pi);
      CHECK(r.angle > -pi);
    }
    const AxisAngle half_turn = rotation_to_axis_angle(AxisAngle{axis, pi}.matrix());
    CHECK(half_turn.angle == doctest::Approx(pi).epsilon(1e-14));
  }
  SUBCASE("non-rotations are rejected") {
    Mat3 m = Mat3::Identity();
    m(0, 1) = 1e-6;
    CHECK_THROWS_AS(rotation_to_axis_angle(m), InputError);
    CHECK_THROWS_AS(rotation_to_axis_angle(-Mat3::Identity()), InputError);
  }
}

TEST_CASE("wigner_angle closed form") {
  CHECK(wigner_angle(1.3, 0.0) == 0.0);
  CHECK(wigner_angle(0.0, 2.0) == 0.0);

  const double s = std::sinh(1.0);
  const double expected = std::atan(s * s / (2.0 * std::cosh(1.0)));
  CHECK(wigner_angle(1.0, 1.0) == doctest::Approx(expected).epsilon(1e-15));
  CHECK(wigner_angle(1.0, 1.0) == doctest::Approx(0.4208).epsilon(1e-4));

  CHECK(std::abs(wigner_angle(20.0, 20.0) - pi / 2) < 1e-6);
  CHECK(wigner_angle(800.0, 800.0) == doctest::Approx(pi / 2));
  CHECK(wigner_angle(5.0, 5.0) < pi / 2);

  CHECK_THROWS_AS(wigner_angle(-1.0, 1.0), InputError);
}

TEST_CASE("Wigner rotation of a pure rotation is the rotation itself") {
  sampling::Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    const AxisAngle r = AxisAngle{sampling::unit_vector(rng), sampling::uniform(rng, 0.1, 3.0)}.canonical();
    const FourVector p = FourVector::on_shell(1.0, sampling::uniform(rng, 0.0, 3.0) * sampling::unit_vector(rng));
    const AxisAngle w = wigner_rotation(LorentzMatrix::rotation(r), p, 1.0);
    CHECK((w.axis - r.axis).norm() < 1e-10);
    CHECK(w.angle == doctest::Approx(r.angle).epsilon(1e-10));
  }
}

TEST_CASE("collinear boost gives no Wigner rotation") {
  const Vec3 dir = Vec3(1.0, 2.0, -0.5).normalized();
  const FourVector p = momentum_from_rapidity(2.0, Rapidity{1.1 * dir});
  for (double xi : {0.3, -0.7, 2.0}) {
    const AxisAngle w = wigner_rotation(boost_from_rapidity(Rapidity{xi * dir}), p, 2.0);
    CHECK(std::abs(w.angle) < 1e-12);
  }
}

TEST_CASE("perpendicular geometry: axis eta x xi and the closed-form angle") {
  const FourVector p = momentum_from_rapidity(1.0, Rapidity{Vec3::UnitZ()});
  const AxisAngle w = wigner_rotation(boost_from_rapidity(Rapidity{Vec3::UnitX()}), p, 1.0);
  CHECK((w.axis - Vec3::UnitY()).norm() < 1e-12);
  CHECK(w.angle == doctest::Approx(wigner_angle(1.0, 1.0)).epsilon(1e-12));

  // opposite momentum: same axis, opposite angle
  const AxisAngle w_minus =
      wigner_rotation(boost_from_rapidity(Rapidity{Vec3::UnitX()}), p.spatially_reflected(), 1.0);
  CHECK((w_minus.axis - w.axis).norm() < 1e-12);
  CHECK(w_minus.angle == doctest::Approx(-w.angle).epsilon(1e-12));
}

TEST_CASE("Wigner rotation fixes the rest momentum") {
  sampling::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const double mass = sampling::uniform(rng, 0.5, 2.0);
    const FourVector p = FourVector::on_shell(mass, sampling::uniform(rng, 0.0, 3.0) * mass * sampling::unit_vector(rng));
    const LorentzMatrix l = sampling::lorentz(rng, 2.0);
    const Mat4 w = wigner_rotation_matrix(l, p, mass);
    const Vec4 k(mass, 0.0, 0.0, 0.0);
    CHECK((w * k - k).cwiseAbs().maxCoeff() < 1e-10 * mass);
    CHECK_NOTHROW(wigner_rotation(l, p, mass));
  }
}

TEST_CASE("closed form vs matrix composition over random perpendicular geometries") {
  sampling::Rng rng(2024);
  double worst_double_path = 0.0;
  double worst_rapidity_path = 0.0;
  double worst_sign_flip = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double eta = sampling::uniform(rng, 0.0, 5.0);
    const double xi = sampling::uniform(rng, 0.0, 5.0);
    const Vec3 e = sampling::unit_vector(rng);
    const Vec3 x = sampling::perpendicular_unit_vector(rng, e);
    const Vec3 n = e.cross(x).normalized();
    const double expected = wigner_angle(eta, xi);

    const FourVector p = momentum_from_rapidity(1.0, Rapidity{eta * e});
    const LorentzMatrix l = boost_from_rapidity(Rapidity{xi * x});
    const AxisAngle w = wigner_rotation(l, p, 1.0);
    const double about_n = w.axis.dot(n) >= 0.0 ? w.angle : -w.angle;
    worst_double_path = std::max(worst_double_path, std::abs(about_n - expected));

    const AxisAngle wr = wigner_rotation_from_rapidities(Rapidity{eta * e}, Rapidity{xi * x});
    const double about_n_r = wr.axis.dot(n) >= 0.0 ? wr.angle : -wr.angle;
    worst_rapidity_path = std::max(worst_rapidity_path, std::abs(about_n_r - expected));

    const AxisAngle w_minus = wigner_rotation(l, p.spatially_reflected(), 1.0);
    const double minus_about_n = w_minus.axis.dot(n) >= 0.0 ? w_minus.angle : -w_minus.angle;
    worst_sign_flip = std::max(worst_sign_flip, std::abs(minus_about_n + about_n));
  }
  CHECK(worst_double_path < 1e-10);
  CHECK(worst_rapidity_path < 1e-10);
  CHECK(worst_sign_flip < 1e-10);
}

TEST_CASE("extended-precision composition holds at extreme rapidities") {
  const AxisAngle w = wigner_rotation_from_rapidities(Rapidity{20.0 * Vec3::UnitZ()},
                                                      Rapidity{20.0 * Vec3::UnitX()});
  CHECK((w.axis - Vec3::UnitY()).norm() < 1e-12);
  CHECK(std::abs(w.angle - wigner_angle(20.0, 20.0)) < 1e-10);
  CHECK(std::abs(w.angle - pi / 2) < 1e-6);
}

TEST_CASE("axis canonicalization") {
  const AxisAngle a = AxisAngle{Vec3(-1.0, 0.0, 0.0), 0.5}.canonical();
  CHECK(a.axis == Vec3::UnitX());
  CHECK(a.angle == -0.5);
  const AxisAngle b = AxisAngle{Vec3(1e-12, -1.0, 0.0).normalized(), 0.5}.canonical();
  CHECK(b.axis.y() > 0.0);
  CHECK(b.angle == -0.5);
  const AxisAngle c = AxisAngle{Vec3::UnitY(), 2.0 * pi + 0.25}.canonical();
  CHECK(c.angle == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(AxisAngle::make(Vec3::Zero(), 1.0), InputError);
}
