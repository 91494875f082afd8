#pragma once

// Momentum-spin superposition states of one and two massive particles and
// their transformation under Lorentz boosts:
//   U(Lambda)|p, sigma> = sum_sigma' D_{sigma' sigma}(W(Lambda, p)) |Lambda p, sigma'>.
//
// Sharp momenta are treated as orthonormal discrete labels. Labels are
// compared by id, never by four-vector value, so boosting cannot merge two
// distinct labels.

#include <string>
#include <vector>

#include "wboost/hilbert.hpp"
#include "wboost/minkowski.hpp"
#include "wboost/spinrep.hpp"

namespace wboost {

struct MomentumLabel {
  std::string id;
  FourVector value;
};

struct ParticleTerm {
  MomentumLabel momentum;
  ComplexVector spin;  // length 2s+1
};

class ParticleState {
 public:
  /// Throws InputError on duplicate ids, wrong spin vector length or a
  /// total norm differing from 1 by more than kNormTolerance.
  ParticleState(Spin spin, std::vector<ParticleTerm> terms);

  Spin spin() const { return spin_; }
  const std::vector<ParticleTerm>& terms() const { return terms_; }

  /// Factors (momentum, spin); momentum basis follows term order.
  StateVector to_state_vector() const;

 private:
  Spin spin_;
  std::vector<ParticleTerm> terms_;
};

struct PairTerm {
  MomentumLabel first;
  MomentumLabel second;
  ComplexVector spin;  // length (2s+1)^2, index sigma1_row * (2s+1) + sigma2_row
};

class TwoParticleState {
 public:
  /// Throws InputError on duplicate (first, second) id pairs, inconsistent
  /// label values for a repeated id, wrong spin length or bad norm.
  TwoParticleState(Spin spin, std::vector<PairTerm> terms);

  Spin spin() const { return spin_; }
  const std::vector<PairTerm>& terms() const { return terms_; }

  /// Factors (momentum 1, momentum 2, spin 1, spin 2). Each momentum factor
  /// has one basis ket per distinct id of that particle, in order of first
  /// appearance.
  StateVector to_state_vector() const;

 private:
  Spin spin_;
  std::vector<PairTerm> terms_;
};

/// Factor indices of the canonical two-particle layout.
inline constexpr int kMomentum1 = 0;
inline constexpr int kMomentum2 = 1;
inline constexpr int kSpin1 = 2;
inline constexpr int kSpin2 = 3;

/// <a|b>, matching terms by label ids.
Complex inner_product(const TwoParticleState& a, const TwoParticleState& b);

/// Throws InputError if any momentum is off the mass shell of `mass`.
ParticleState boost_one(const ParticleState& state, const LorentzMatrix& lambda, double mass);

/// Each term's spin vector is multiplied by D(W(Lambda, p1)) (x) D(W(Lambda, p2)).
TwoParticleState boost_two(const TwoParticleState& state, const LorentzMatrix& lambda, double mass);

}  // namespace wboost
