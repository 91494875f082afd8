#include "wboost/boostmap.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "wboost/errors.hpp"

namespace wboost {

namespace {

void require_spin_length(const ComplexVector& v, Eigen::Index expected) {
  if (v.size() != expected) {
    throw InputError("spin vector has length " + std::to_string(v.size()) + ", expected " +
                     std::to_string(expected));
  }
}

void require_unit_norm(double norm_squared) {
  if (std::abs(std::sqrt(norm_squared) - 1.0) > kNormTolerance) {
    throw InputError("state is not normalized (norm^2 = " + std::to_string(norm_squared) + ")");
  }
}

bool same_value(const FourVector& a, const FourVector& b) {
  const double scale = std::max({1.0, std::abs(a.t), std::abs(b.t)});
  return (a.components() - b.components()).cwiseAbs().maxCoeff() <= 1e-12 * scale;
}

// Distinct ids in order of first appearance; repeated ids must carry the same value.
class LabelIndex {
 public:
  int add(const MomentumLabel& label) {
    auto it = index_.find(label.id);
    if (it != index_.end()) {
      if (!same_value(values_[it->second], label.value)) {
        throw InputError("momentum label '" + label.id + "' appears with two different values");
      }
      return it->second;
    }
    const int k = static_cast<int>(values_.size());
    index_.emplace(label.id, k);
    values_.push_back(label.value);
    return k;
  }
  int at(const std::string& id) const { return index_.at(id); }
  int size() const { return static_cast<int>(values_.size()); }

 private:
  std::map<std::string, int> index_;
  std::vector<FourVector> values_;
};

MomentumLabel boosted(const MomentumLabel& label, const LorentzMatrix& lambda) {
  return {label.id, lambda.apply(label.value)};
}

}  // namespace

ParticleState::ParticleState(Spin spin, std::vector<ParticleTerm> terms)
    : spin_(spin), terms_(std::move(terms)) {
  if (terms_.empty()) throw InputError("particle state has no terms");
  std::set<std::string> ids;
  double norm2 = 0.0;
  for (const ParticleTerm& t : terms_) {
    require_spin_length(t.spin, spin_.dim());
    if (!ids.insert(t.momentum.id).second) {
      throw InputError("duplicate momentum label '" + t.momentum.id + "'");
    }
    norm2 += t.spin.squaredNorm();
  }
  require_unit_norm(norm2);
}

StateVector ParticleState::to_state_vector() const {
  const int d = spin_.dim();
  const int n = static_cast<int>(terms_.size());
  ComplexVector amps(n * d);
  for (int k = 0; k < n; ++k) amps.segment(k * d, d) = terms_[k].spin;
  return StateVector(std::move(amps), {n, d});
}

TwoParticleState::TwoParticleState(Spin spin, std::vector<PairTerm> terms)
    : spin_(spin), terms_(std::move(terms)) {
  if (terms_.empty()) throw InputError("two-particle state has no terms");
  const Eigen::Index d = spin_.dim();
  std::set<std::pair<std::string, std::string>> pairs;
  LabelIndex first;
  LabelIndex second;
  double norm2 = 0.0;
  for (const PairTerm& t : terms_) {
    require_spin_length(t.spin, d * d);
    if (!pairs.emplace(t.first.id, t.second.id).second) {
      throw InputError("duplicate momentum pair ('" + t.first.id + "', '" + t.second.id + "')");
    }
    first.add(t.first);
    second.add(t.second);
    norm2 += t.spin.squaredNorm();
  }
  require_unit_norm(norm2);
}

StateVector TwoParticleState::to_state_vector() const {
  LabelIndex first;
  LabelIndex second;
  for (const PairTerm& t : terms_) {
    first.add(t.first);
    second.add(t.second);
  }
  const Eigen::Index d2 = spin_.dim() * spin_.dim();
  const int n1 = first.size();
  const int n2 = second.size();
  ComplexVector amps = ComplexVector::Zero(n1 * n2 * d2);
  for (const PairTerm& t : terms_) {
    const int k = first.at(t.first.id) * n2 + second.at(t.second.id);
    amps.segment(k * d2, d2) = t.spin;
  }
  return StateVector(std::move(amps), {n1, n2, spin_.dim(), spin_.dim()});
}

Complex inner_product(const TwoParticleState& a, const TwoParticleState& b) {
  if (a.spin() != b.spin()) throw InputError("inner product of states with different spin");
  std::map<std::pair<std::string, std::string>, const ComplexVector*> lookup;
  for (const PairTerm& t : b.terms()) lookup.emplace(std::pair{t.first.id, t.second.id}, &t.spin);
  Complex acc = 0.0;
  for (const PairTerm& t : a.terms()) {
    auto it = lookup.find({t.first.id, t.second.id});
    if (it != lookup.end()) acc += t.spin.dot(*it->second);
  }
  return acc;
}

ParticleState boost_one(const ParticleState& state, const LorentzMatrix& lambda, double mass) {
  std::vector<ParticleTerm> out;
  out.reserve(state.terms().size());
  for (const ParticleTerm& t : state.terms()) {
    const AxisAngle w = wigner_rotation(lambda, t.momentum.value, mass);
    out.push_back({boosted(t.momentum, lambda), rep_matrix(state.spin(), w) * t.spin});
  }
  return ParticleState(state.spin(), std::move(out));
}

TwoParticleState boost_two(const TwoParticleState& state, const LorentzMatrix& lambda, double mass) {
  std::vector<PairTerm> out;
  out.reserve(state.terms().size());
  for (const PairTerm& t : state.terms()) {
    const SpinRepMatrix d1 = rep_matrix(state.spin(), wigner_rotation(lambda, t.first.value, mass));
    const SpinRepMatrix d2 =
        rep_matrix(state.spin(), wigner_rotation(lambda, t.second.value, mass));
    out.push_back({boosted(t.first, lambda), boosted(t.second, lambda), kron(d1, d2) * t.spin});
  }
  return TwoParticleState(state.spin(), std::move(out));
}

}  // namespace wboost
