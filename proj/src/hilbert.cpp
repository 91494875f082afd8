#include "wboost/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wboost/errors.hpp"

namespace wboost {

namespace {

Eigen::Index product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), Eigen::Index{1},
                         [](Eigen::Index acc, int d) { return acc * d; });
}

void validate_dims(const std::vector<int>& dims, Eigen::Index size) {
  if (dims.empty()) throw InputError("state needs at least one tensor factor");
  for (int d : dims) {
    if (d < 1) throw InputError("tensor factor dimension must be >= 1, got " + std::to_string(d));
  }
  if (product(dims) != size) {
    throw InputError("factor dimensions multiply to " + std::to_string(product(dims)) +
                     " but the data has size " + std::to_string(size));
  }
}

std::vector<int> sorted_factor_set(std::span<const int> factors, int factor_count) {
  std::vector<int> out(factors.begin(), factors.end());
  std::sort(out.begin(), out.end());
  if (out.empty()) throw InputError("factor set must be nonempty");
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InputError("factor set contains duplicates");
  }
  if (out.front() < 0 || out.back() >= factor_count) {
    throw InputError("factor index out of range for a state with " +
                     std::to_string(factor_count) + " factors");
  }
  return out;
}

std::vector<int> complement(const std::vector<int>& sorted, int factor_count) {
  std::vector<int> out;
  for (int f = 0; f < factor_count; ++f) {
    if (!std::binary_search(sorted.begin(), sorted.end(), f)) out.push_back(f);
  }
  return out;
}

// Flat offsets into the full row-major index for every multi-index over
// `factors`, enumerated row-major over those factors.
std::vector<Eigen::Index> factor_offsets(const std::vector<int>& dims,
                                         const std::vector<int>& factors) {
  std::vector<Eigen::Index> strides(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) {
    strides[k] = strides[k + 1] * dims[k + 1];
  }
  std::vector<Eigen::Index> offsets{0};
  for (int f : factors) {
    std::vector<Eigen::Index> next;
    next.reserve(offsets.size() * dims[f]);
    for (Eigen::Index base : offsets) {
      for (int digit = 0; digit < dims[f]; ++digit) next.push_back(base + digit * strides[f]);
    }
    offsets = std::move(next);
  }
  return offsets;
}

std::vector<int> select(const std::vector<int>& dims, const std::vector<int>& factors) {
  std::vector<int> out;
  for (int f : factors) out.push_back(dims[f]);
  return out;
}

}  // namespace

StateVector::StateVector(ComplexVector amplitudes, std::vector<int> dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  validate_dims(dims_, amplitudes_.size());
}

StateVector::StateVector(ComplexVector amplitudes)
    : StateVector(amplitudes, {static_cast<int>(amplitudes.size())}) {}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

StateVector StateVector::normalized() const {
  const double n = norm();
  if (!(n > 0.0)) throw InputError("cannot normalize the zero vector");
  return StateVector(amplitudes_ / n, dims_);
}

DensityMatrix::DensityMatrix(ComplexMatrix entries, std::vector<int> dims)
    : entries_(std::move(entries)), dims_(std::move(dims)) {
  if (entries_.rows() != entries_.cols()) throw InputError("density matrix must be square");
  validate_dims(dims_, entries_.rows());
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const ComplexVector& a = psi.amplitudes();
  return DensityMatrix(a * a.adjoint(), psi.dims());
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum_ij rho_ij rho_ji = sum_ij |rho_ij|^2 for Hermitian rho.
  return (entries_.cwiseProduct(entries_.transpose())).sum().real();
}

bool DensityMatrix::is_valid(double tol) const {
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(trace() - Complex(1.0, 0.0)) > tol) return false;
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(entries_, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff() >= -1e-10;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  const ComplexVector& x = a.amplitudes();
  const ComplexVector& y = b.amplitudes();
  ComplexVector out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out.segment(i * y.size(), y.size()) = x(i) * y;
  return StateVector(std::move(out), std::move(dims));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

StateVector apply_local(const StateVector& psi, int factor, const ComplexMatrix& op) {
  const std::vector<int>& dims = psi.dims();
  if (factor < 0 || factor >= psi.factor_count()) throw InputError("factor index out of range");
  const int d = dims[factor];
  if (op.rows() != d || op.cols() != d) {
    throw InputError("local operator shape does not match factor dimension");
  }
  Eigen::Index right = 1;
  for (std::size_t k = factor + 1; k < dims.size(); ++k) right *= dims[k];
  const Eigen::Index left = psi.amplitudes().size() / (right * d);

  ComplexVector out = ComplexVector::Zero(psi.amplitudes().size());
  const ComplexVector& in = psi.amplitudes();
  for (Eigen::Index l = 0; l < left; ++l) {
    for (Eigen::Index r = 0; r < right; ++r) {
      for (int i = 0; i < d; ++i) {
        Complex acc = 0.0;
        for (int j = 0; j < d; ++j) acc += op(i, j) * in((l * d + j) * right + r);
        out((l * d + i) * right + r) = acc;
      }
    }
  }
  return StateVector(std::move(out), dims);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = static_cast<int>(rho.dims().size());
  const std::vector<int> kept = sorted_factor_set(keep, n);
  const std::vector<int> traced = complement(kept, n);

  const std::vector<Eigen::Index> ko = factor_offsets(rho.dims(), kept);
  const std::vector<Eigen::Index> to = factor_offsets(rho.dims(), traced);
  const auto dk = static_cast<Eigen::Index>(ko.size());

  const ComplexMatrix& full = rho.entries();
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (Eigen::Index t : to) acc += full(ko[i] + t, ko[j] + t);
      out(i, j) = acc;
    }
  }
  return DensityMatrix(std::move(out), select(rho.dims(), kept));
}

double reduced_purity(const StateVector& psi, std::span<const int> keep) {
  if (!psi.is_normalized()) throw InputError("reduced purity needs a normalized state");
  return partial_trace(DensityMatrix::pure(psi), keep).purity();
}

double linear_entropy_bipartite(const StateVector& psi, std::span<const int> side) {
  if (!psi.is_normalized()) throw InputError("linear entropy needs a normalized state");
  const int n = psi.factor_count();
  const std::vector<int> a = sorted_factor_set(side, n);
  const std::vector<int> b = complement(a, n);
  if (b.empty()) throw InputError("bipartition needs factors on both sides");

  const DensityMatrix rho = DensityMatrix::pure(psi);
  return (1.0 - partial_trace(rho, a).purity()) + (1.0 - partial_trace(rho, b).purity());
}

}  // namespace wboost
