#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "doctest.h"
#include "wboost/errors.hpp"
#include "wboost/invariants.hpp"
#include "wboost/sampling.hpp"

using namespace wboost;
using std::numbers::pi;

namespace {

const Complex I{0.0, 1.0};

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Basis-free reference: for (|p,-p> U v + |-p,p> U^dagger v)/sqrt(2) the
// reduced momentum state has off-diagonal <U^dagger v|U v>/2, giving
// E = 1 - |v^dagger U^2 v|^2 for the two-sided linear entropy.
double oracle_entropy(const ComplexVector& v, Spin s, double omega) {
  const ComplexMatrix u =
      kron(rep_matrix(s, {Vec3::UnitY(), omega}), rep_matrix(s, {Vec3::UnitY(), -omega}));
  const Complex overlap = v.dot(u * u * v);
  return 1.0 - std::norm(overlap);
}

// Component of v inside the m block.
double block_weight(const ComplexVector& v, const InvariantBasis& b, int m) {
  double w = 0.0;
  for (const ComplexVector& e : b.blocks.at(m)) w += std::norm(e.dot(v));
  return w;
}

}  // namespace

TEST_CASE("multiplicities") {
  CHECK(expected_multiplicity(Spin(2), 0) == 3);
  CHECK(expected_multiplicity(Spin(2), -2) == 1);
  CHECK(expected_multiplicity(Spin(2), 3) == 0);
  for (int two_s = 0; two_s <= 6; ++two_s) {
    const Spin s(two_s);
    const InvariantBasis b = build_invariant_basis(s);
    int total = 0;
    for (int m = -two_s; m <= two_s; ++m) {
      CAPTURE(two_s);
      CAPTURE(m);
      CHECK(b.multiplicity(m) == two_s + 1 - std::abs(m));
      total += b.multiplicity(m);
    }
    CHECK(total == s.dim() * s.dim());
    CHECK(b.multiplicity(two_s + 1) == 0);
  }
}

TEST_CASE("basis is orthonormal, complete and diagonalizes the EPR operator") {
  sampling::Rng rng(1);
  for (int two_s = 0; two_s <= 6; ++two_s) {
    const Spin s(two_s);
    const int d2 = s.dim() * s.dim();
    for (const Vec3& axis : {Vec3(Vec3::UnitY()), sampling::unit_vector(rng)}) {
      const InvariantBasis b = build_invariant_basis(s, axis);
      const ComplexMatrix m = b.as_matrix();
      CHECK(m.cols() == d2);
      CHECK(max_abs(m.adjoint() * m - ComplexMatrix::Identity(d2, d2)) < 1e-10);
      for (double omega : {0.37, -1.1, 2.9}) {
        const ComplexMatrix u = epr_spin_operator(s, omega, axis);
        for (const auto& [label, vectors] : b.blocks) {
          for (const ComplexVector& v : vectors) {
            CHECK((u * v - std::polar(1.0, label * omega) * v).cwiseAbs().maxCoeff() < 1e-10);
          }
        }
      }
    }
  }
}

TEST_CASE("basis construction is deterministic and well phased") {
  const InvariantBasis a = build_invariant_basis(Spin(3));
  const InvariantBasis b = build_invariant_basis(Spin(3));
  CHECK(max_abs(a.as_matrix() - b.as_matrix()) == 0.0);
  for (const auto& [label, vectors] : a.blocks) {
    for (const ComplexVector& v : vectors) {
      // first component within 1e-12 of the largest magnitude
      const double top = v.cwiseAbs().maxCoeff();
      Eigen::Index k = 0;
      while (std::abs(v(k)) < top - 1e-12) ++k;
      CHECK(std::abs(v(k).imag()) < 1e-14);
      CHECK(v(k).real() > 0.0);
    }
  }
  CHECK_THROWS_AS(build_invariant_basis(Spin(2), Vec3::Zero()), InputError);
  CHECK_THROWS_AS(a.vector(0, 99), InputError);
}

TEST_CASE("spin-1/2 named states") {
  const Spin s(1);
  const auto f = fixture_states(s);
  const InvariantBasis b = build_invariant_basis(s);
  for (double omega : {0.2, 0.9, pi / 2}) {
    const ComplexMatrix u = epr_spin_operator(s, omega, kCanonicalEprAxis);
    CHECK((u * f.at("psi+") - f.at("psi+")).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((u * f.at("phi-") - f.at("phi-")).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((u * f.at("chi+") - std::exp(I * omega) * f.at("chi+")).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((u * f.at("chi-") - std::exp(-I * omega) * f.at("chi-")).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK(block_weight(f.at("chi+"), b, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(block_weight(f.at("chi-"), b, -1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(block_weight(f.at("psi+"), b, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(block_weight(f.at("phi-"), b, 0) == doctest::Approx(1.0).epsilon(1e-12));

  // phi+ and psi- are the equal-weight chi superpositions.
  const double r = 1.0 / std::sqrt(2.0);
  CHECK((f.at("phi+") - r * (f.at("chi+") + f.at("chi-"))).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((I * f.at("psi-") - r * (f.at("chi+") - f.at("chi-"))).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("spin-1 named states") {
  const Spin s(2);
  const auto f = fixture_states(s);
  const std::vector<int> first{0};
  for (const std::string name : {"psi1", "psi2", "psi3"}) {
    CAPTURE(name);
    for (double omega : {0.3, 1.4, pi / 2}) {
      const ComplexMatrix u = epr_spin_operator(s, omega, kCanonicalEprAxis);
      CHECK((u * f.at(name) - f.at(name)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  CHECK(reduced_purity(StateVector(f.at("psi1"), {3, 3}), first) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(reduced_purity(StateVector(f.at("psi2"), {3, 3}), first) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(reduced_purity(StateVector(f.at("psi3"), {3, 3}), first) == doctest::Approx(1.0).epsilon(1e-12));

  for (double omega : {0.3, 1.4, -2.2}) {
    const ComplexMatrix u = epr_spin_operator(s, omega, kCanonicalEprAxis);
    const double c = std::cos(omega);
    const double sn = std::sin(omega);
    CHECK((u * f.at("beta1") - (c * f.at("beta1") + sn * f.at("beta2"))).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((u * f.at("beta2") - (-sn * f.at("beta1") + c * f.at("beta2"))).cwiseAbs().maxCoeff() < 1e-10);
    // The circular combinations diagonalize this rotation.
    const ComplexVector minus_i = f.at("beta1") - I * f.at("beta2");
    const ComplexVector plus_i = f.at("beta1") + I * f.at("beta2");
    CHECK((u * minus_i - std::exp(I * omega) * minus_i).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((u * plus_i - std::exp(-I * omega) * plus_i).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("the minus-sign variant of beta2 lies outside the m = +-1 blocks") {
  const InvariantBasis b = build_invariant_basis(Spin(2));
  ComplexVector up = ComplexVector::Zero(3);
  ComplexVector zero = ComplexVector::Zero(3);
  ComplexVector down = ComplexVector::Zero(3);
  up(0) = zero(1) = down(2) = 1.0;
  const ComplexVector odd = up - down;
  const ComplexVector variant =
      0.5 * (tensor(StateVector(zero), StateVector(odd)).amplitudes() +
             tensor(StateVector(odd), StateVector(zero)).amplitudes());
  CHECK(block_weight(variant, b, 1) + block_weight(variant, b, -1) < 1e-12);
  CHECK(block_weight(fixture_states(Spin(2)).at("beta2"), b, 1) +
            block_weight(fixture_states(Spin(2)).at("beta2"), b, -1) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fixture_states rejects other spins") {
  CHECK_THROWS_AS(fixture_states(Spin(3)), InputError);
  CHECK_THROWS_AS(fixture_states(Spin(0)), InputError);
}

TEST_CASE("coefficients round-trip through the basis") {
  sampling::Rng rng(2);
  for (int two_s = 1; two_s <= 4; ++two_s) {
    const InvariantBasis b = build_invariant_basis(Spin(two_s));
    const CoefficientSet c = sampling::coefficients(rng, b);
    CHECK(c.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
    const CoefficientSet back = coefficients_of(spin_vector(c, b), b);
    for (const auto& [key, amp] : c.amplitudes()) {
      CHECK(std::abs(back.get(key.first, key.second) - amp) < 1e-12);
    }
  }
  CoefficientSet outside;
  outside.set(5, 0, 1.0);
  CHECK_THROWS_AS(outside.check_against(build_invariant_basis(Spin(1))), InputError);
  CHECK_THROWS_AS(CoefficientSet().normalized(), InputError);
}

TEST_CASE("closed form entropy against the density-matrix computations") {
  sampling::Rng rng(3);
  for (int two_s = 1; two_s <= 4; ++two_s) {
    const Spin s(two_s);
    const InvariantBasis b = build_invariant_basis(s);
    for (int i = 0; i < 20; ++i) {
      const CoefficientSet c = sampling::coefficients(rng, b);
      const double omega = sampling::uniform(rng, -pi, pi);
      const double closed = closed_form_entropy(c, omega);
      CHECK(closed >= -1e-14);
      CHECK(closed <= 2.0);
      CHECK(std::abs(closed - brute_force_entropy(c, omega, b)) < 1e-10);
      CHECK(std::abs(closed - oracle_entropy(spin_vector(c, b), s, omega)) < 1e-10);
    }
  }
  CoefficientSet unnormalized;
  unnormalized.set(0, 0, 2.0);
  CHECK_THROWS_AS(closed_form_entropy(unnormalized, 0.1), InputError);
}

TEST_CASE("states inside one block never entangle") {
  sampling::Rng rng(4);
  for (int two_s = 1; two_s <= 4; ++two_s) {
    const InvariantBasis b = build_invariant_basis(Spin(two_s));
    for (const auto& [m, vectors] : b.blocks) {
      CoefficientSet c;
      for (int alpha = 0; alpha < static_cast<int>(vectors.size()); ++alpha) {
        c.set(m, alpha, sampling::complex_normal(rng));
      }
      c = c.normalized();
      for (double omega : {0.1, 1.0, pi / 2}) {
        CHECK(std::abs(closed_form_entropy(c, omega)) < 1e-14);
        CHECK(std::abs(brute_force_entropy(c, omega, b)) < 1e-12);
      }
    }
  }
}

TEST_CASE("entropy vanishes at zero Wigner angle and depends only on weights") {
  sampling::Rng rng(5);
  const InvariantBasis b = build_invariant_basis(Spin(3));
  const CoefficientSet c = sampling::coefficients(rng, b);
  CHECK(std::abs(closed_form_entropy(c, 0.0)) < 1e-14);
  CoefficientSet rephased;
  for (const auto& [key, amp] : c.amplitudes()) {
    rephased.set(key.first, key.second, amp * std::polar(1.0, sampling::uniform(rng, 0.0, 6.0)));
  }
  CHECK(std::abs(brute_force_entropy(rephased, 0.7, b) - brute_force_entropy(c, 0.7, b)) < 1e-12);
}

TEST_CASE("parametrization A") {
  const InvariantBasis b = build_invariant_basis(Spin(2));
  auto hand = [](double theta, double phi, double omega) {
    const double w1 = std::pow(std::sin(theta) * std::cos(phi), 2);
    const double w0 = std::pow(std::sin(theta) * std::sin(phi), 2);
    const double wm = std::pow(std::cos(theta), 2);
    const double c1 = std::pow(std::cos(omega), 2);
    const double c2 = std::pow(std::cos(2 * omega), 2);
    return 2.0 * (1.0 - (w1 * w1 + w0 * w0 + wm * wm + 2 * c1 * (w1 * w0 + w0 * wm) + 2 * c2 * w1 * wm));
  };
  for (double omega : {pi / 8, pi / 4, 3 * pi / 8, pi / 2}) {
    for (double theta = 0.0; theta <= pi; theta += pi / 7) {
      for (double phi = 0.0; phi <= 2 * pi; phi += pi / 5) {
        const CoefficientSet c = param_a_state(theta, phi, Spin(2));
        CHECK(closed_form_entropy(c, omega) == doctest::Approx(hand(theta, phi, omega)).epsilon(1e-12));
      }
    }
    // invariant members have no entanglement
    CHECK(std::abs(closed_form_entropy(param_a_state(pi / 2, 0.0, Spin(2)), omega)) < 1e-12);
    CHECK(std::abs(closed_form_entropy(param_a_state(pi / 2, pi / 2, Spin(2)), omega)) < 1e-12);
    CHECK(std::abs(closed_form_entropy(param_a_state(0.0, 0.0, Spin(2)), omega)) < 1e-12);
  }
  // The equal m = +-1 superposition is maximal at pi/8 and pi/4 and vanishes at pi/2.
  for (double omega : {pi / 8, pi / 4}) {
    const double peak = closed_form_entropy(param_a_state(pi / 4, 0.0, Spin(2)), omega);
    const double mirror = closed_form_entropy(param_a_state(3 * pi / 4, 0.0, Spin(2)), omega);
    CHECK(peak == doctest::Approx(mirror).epsilon(1e-12));
    for (double theta = 0.0; theta <= pi; theta += pi / 60) {
      for (double phi = 0.0; phi <= pi; phi += pi / 60) {
        CHECK(closed_form_entropy(param_a_state(theta, phi, Spin(2)), omega) <= peak + 1e-12);
      }
    }
  }
  CHECK(std::abs(closed_form_entropy(param_a_state(pi / 4, 0.0, Spin(2)), pi / 2)) < 1e-12);
  CHECK(std::abs(closed_form_entropy(param_a_state(3 * pi / 4, 0.0, Spin(2)), pi / 2)) < 1e-12);
  CHECK_THROWS_AS(param_a_state(0.1, 0.2, Spin(0)), InputError);

  // the same picture for spin 1/2, where theta = pi/4 is phi+ and 3pi/4 is i psi-
  const auto f = fixture_states(Spin(1));
  const InvariantBasis half = build_invariant_basis(Spin(1));
  const ComplexVector v = spin_vector(param_a_state(pi / 4, 0.0, Spin(1)), half);
  CHECK(std::abs(std::abs(v.dot(f.at("phi+"))) - 1.0) < 1e-12);
  (void)b;
}

TEST_CASE("parametrization B") {
  for (int diff : {3, 4, 5}) {
    const int m = diff - 2;
    const int n = -2;
    const InvariantBasis b = build_invariant_basis(Spin(4));
    for (double omega : {pi / 6, pi / 3, pi / 2}) {
      for (double theta = 0.0; theta <= pi; theta += pi / 9) {
        const double expected = std::pow(std::sin(2 * theta), 2) * std::pow(std::sin(diff * omega), 2);
        CHECK(param_b_entropy(theta, m, n, omega) == doctest::Approx(expected).epsilon(1e-14));
        for (double phi : {0.0, 1.0, 4.0}) {
          const CoefficientSet c = param_b_state(theta, phi, m, n);
          CHECK(std::abs(closed_form_entropy(c, omega) - expected) < 1e-12);
          CHECK(std::abs(brute_force_entropy(c, omega, b) - expected) < 1e-10);
        }
      }
    }
  }
  // m - n = 3 is maximal at pi/6 and flat zero at pi/3.
  CHECK(param_b_entropy(pi / 4, 3, 0, pi / 6) == doctest::Approx(1.0).epsilon(1e-14));
  for (double theta = 0.0; theta <= pi; theta += pi / 20) {
    CHECK(std::abs(param_b_entropy(theta, 3, 0, pi / 3)) < 1e-14);
    CHECK(param_b_entropy(theta, 4, 0, pi / 3) == doctest::Approx(param_b_entropy(theta, 5, 0, pi / 3)).epsilon(1e-13));
    CHECK(std::abs(param_b_entropy(theta, 4, 0, pi / 2)) < 1e-14);
    CHECK(param_b_entropy(theta, 3, 0, pi / 2) == doctest::Approx(param_b_entropy(theta, 5, 0, pi / 2)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(param_b_state(0.1, 0.0, 2, 2), InputError);
}

TEST_CASE("boosting the EPR pair reproduces the final-state formula") {
  sampling::Rng rng(6);
  for (int two_s = 1; two_s <= 4; ++two_s) {
    const InvariantBasis b = build_invariant_basis(Spin(two_s));
    for (int i = 0; i < 5; ++i) {
      const double eta = sampling::uniform(rng, 0.1, 3.0);
      const double xi = sampling::uniform(rng, 0.1, 3.0);
      const CoefficientSet c = sampling::coefficients(rng, b);
      const FourVector p = momentum_from_rapidity(1.0, Rapidity{eta * Vec3::UnitZ()});
      const LorentzMatrix l = boost_from_rapidity(Rapidity{xi * Vec3::UnitX()});
      const TwoParticleState initial =
          epr_initial_state(c, b, {"+p", p}, {"-p", p.spatially_reflected()});
      const TwoParticleState boosted = boost_two(initial, l, 1.0);
      const TwoParticleState formula =
          epr_final_state(c, wigner_angle(eta, xi), b, {"+p", l.apply(p)},
                          {"-p", l.apply(p.spatially_reflected())});
      const Complex overlap = inner_product(boosted, formula);
      CHECK(std::abs(overlap - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("SweepResult grid indexing") {
  SweepResult r;
  r.axes = {{"a", {1.0, 2.0}}, {"b", {10.0, 20.0, 30.0}}};
  CHECK(r.grid_size() == 6);
  CHECK(r.coordinates(0) == std::vector<double>{1.0, 10.0});
  CHECK(r.coordinates(2) == std::vector<double>{1.0, 30.0});
  CHECK(r.coordinates(4) == std::vector<double>{2.0, 20.0});
  CHECK(SweepResult{}.grid_size() == 1);
}
