#include "wboost/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>

#include "wboost/cli/scenario.hpp"
#include "wboost/invariants.hpp"
#include "wboost/sampling.hpp"

namespace wboost::cli {

namespace {

std::string short_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

constexpr int kAnglesPerTrial = 20;

using sampling::Rng;

class Check {
 public:
  Check(std::string name, double tolerance) : outcome_{std::move(name), 0, 0.0, tolerance} {}

  void record(double deviation) {
    ++outcome_.checks;
    // NaN must fail the check
    if (std::isnan(deviation)) deviation = std::numeric_limits<double>::infinity();
    outcome_.max_deviation = std::max(outcome_.max_deviation, deviation);
  }
  const CheckOutcome& outcome() const { return outcome_; }

 private:
  CheckOutcome outcome_;
};

int cycle_spin(int trial, int lo, int hi) {
  if (hi < lo) return hi;
  return lo + trial % (hi - lo + 1);
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Half-integer spin representations compose only up to a sign per term.
double state_distance(const TwoParticleState& a, const TwoParticleState& b) {
  const bool projective = a.spin().two_s() % 2 == 1;
  double dev = 0.0;
  for (std::size_t k = 0; k < a.terms().size(); ++k) {
    const PairTerm& x = a.terms()[k];
    const PairTerm& y = b.terms()[k];
    double spin_dev = (x.spin - y.spin).cwiseAbs().maxCoeff();
    if (projective) spin_dev = std::min(spin_dev, (x.spin + y.spin).cwiseAbs().maxCoeff());
    dev = std::max(dev, spin_dev);
    const double scale = std::max(1.0, x.first.value.t + x.second.value.t);
    dev = std::max(dev, (x.first.value.components() - y.first.value.components()).cwiseAbs().maxCoeff() / scale);
    dev = std::max(dev, (x.second.value.components() - y.second.value.components()).cwiseAbs().maxCoeff() / scale);
  }
  return dev;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed(); });
}

long VerifyReport::total_checks() const {
  long n = 0;
  for (const CheckOutcome& c : checks) n += c.checks;
  return n;
}

VerifyReport run_verification(const VerifyOptions& opt) {
  Rng rng(opt.seed);
  const int max_two_s = std::max(0, opt.two_s_max);

  Check oracle("oracle_equivalence", 1e-10);
  Check angle("wigner_angle_composition", 1e-10);
  Check multiplicity("basis_multiplicity", 0.0);
  Check completeness("basis_completeness", 1e-10);
  Check eigenphase("basis_eigenphase", 1e-10);
  Check composition("boost_composition", 1e-9);
  Check particle("particle_entanglement", 1e-10);

  std::map<int, InvariantBasis> canonical_bases;
  for (int t = 0; t < opt.trials; ++t) {
    {
      const int two_s = cycle_spin(t, 1, max_two_s);
      auto it = canonical_bases.find(two_s);
      if (it == canonical_bases.end()) {
        it = canonical_bases.emplace(two_s, build_invariant_basis(Spin(two_s))).first;
      }
      const CoefficientSet c = sampling::coefficients(rng, it->second);
      for (int k = 0; k < kAnglesPerTrial; ++k) {
        const double omega = sampling::uniform(rng, 0.0, std::numbers::pi / 2);
        oracle.record(std::abs(closed_form_entropy(c, omega) - brute_force_entropy(c, omega, it->second)));
      }
    }
    {
      const double eta = sampling::uniform(rng, 0.0, 5.0);
      const double xi = sampling::uniform(rng, 0.0, 5.0);
      const Vec3 e = sampling::unit_vector(rng);
      const Vec3 x = sampling::perpendicular_unit_vector(rng, e);
      const AxisAngle w = wigner_rotation_from_rapidities(Rapidity{eta * e}, Rapidity{xi * x});
      const Vec3 n = e.cross(x).normalized();
      const double signed_angle = w.axis.dot(n) >= 0.0 ? w.angle : -w.angle;
      angle.record(std::abs(signed_angle - wigner_angle(eta, xi)));
    }
    {
      const Spin s(cycle_spin(t, 0, max_two_s));
      InvariantBasis basis = build_invariant_basis(s, sampling::unit_vector(rng));
      double dev = 0.0;
      for (int m = -s.two_s(); m <= s.two_s(); ++m) {
        dev = std::max(dev, std::abs(basis.multiplicity(m) - expected_multiplicity(s, m)) * 1.0);
      }
      if (static_cast<int>(basis.blocks.size()) != 2 * s.two_s() + 1) dev = std::max(dev, 1.0);
      multiplicity.record(dev);

      if (opt.corrupt_basis) basis.blocks.begin()->second.front()(0) += 1e-3;
      const ComplexMatrix b = basis.as_matrix();
      completeness.record(max_abs(b.adjoint() * b - ComplexMatrix::Identity(b.cols(), b.cols())));

      const double omega = sampling::uniform(rng, -std::numbers::pi, std::numbers::pi);
      const ComplexMatrix u = epr_spin_operator(s, omega, basis.axis);
      double phase_dev = 0.0;
      for (const auto& [m, vs] : basis.blocks) {
        for (const ComplexVector& v : vs) {
          phase_dev = std::max(phase_dev, (u * v - std::polar(1.0, m * omega) * v).cwiseAbs().maxCoeff());
        }
      }
      eigenphase.record(phase_dev);
    }
    {
      const Spin s(cycle_spin(t, 1, std::max(1, max_two_s)));
      const TwoParticleState psi = sampling::two_particle_state(rng, s, 3, 1.5);
      const LorentzMatrix l1 = sampling::lorentz(rng, 1.0);
      const LorentzMatrix l2 = sampling::lorentz(rng, 1.0);
      const TwoParticleState stepwise = boost_two(boost_two(psi, l1, 1.0), l2, 1.0);
      const TwoParticleState direct = boost_two(psi, l2 * l1, 1.0);
      composition.record(state_distance(stepwise, direct));

      const int particle_a[] = {kMomentum1, kSpin1};
      const double before = linear_entropy_bipartite(psi.to_state_vector(), particle_a);
      const double after = linear_entropy_bipartite(boost_two(psi, l1, 1.0).to_state_vector(), particle_a);
      particle.record(std::abs(before - after));
    }
  }

  VerifyReport report;
  for (const Check* c : {&oracle, &angle, &multiplicity, &completeness, &eigenphase, &composition, &particle}) {
    report.checks.push_back(c->outcome());
  }
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  if (report.total_checks() == 0) {
    out << "0 checks run (trials = 0); vacuous pass\n";
    return;
  }
  for (const CheckOutcome& c : report.checks) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.name << "  checks=" << c.checks
        << "  max_deviation=" << format_real(c.max_deviation)
        << "  tolerance=" << short_real(c.tolerance) << "\n";
  }
  out << (report.passed() ? "all checks passed" : "verification FAILED") << " ("
      << report.total_checks() << " checks)\n";
}

}  // namespace wboost::cli
