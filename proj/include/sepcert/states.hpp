#pragma once

// Bipartite density matrices: validated construction, generic mixtures of
// product states, and the two worked 2x2 state families.

#include <cmath>
#include <utility>
#include <vector>

#include "sepcert/linalg.hpp"
#include "sepcert/types.hpp"

namespace sepcert {

// Checks the density-matrix contract on a bare operator: finite entries,
// Hermitian, unit trace, positive semidefinite.
inline void validate_density_matrix(const ComplexMatrix& rho,
                                    const char* what = "density matrix") {
  if (rho.rows() != rho.cols() || rho.rows() < 1)
    throw InvalidState(std::string(what) + ": not a square matrix");
  if (!all_finite(rho))
    throw InvalidState(std::string(what) + ": non-finite entry");
  if (hermitian_defect(rho) > tol::hermitian)
    throw InvalidState(std::string(what) + ": not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tol::trace ||
      std::abs(rho.trace().imag()) > tol::trace)
    throw InvalidState(std::string(what) + ": trace != 1");
  if (min_eigenvalue(rho) < -tol::psd)
    throw InvalidState(std::string(what) + ": negative eigenvalue");
}

// Density matrix tagged with subsystem dimensions. Constructors validate
// eagerly and reject bad input; no silent renormalization.
class BipartiteState {
 public:
  BipartiteState(ComplexMatrix rho, Index d1, Index d2)
      : rho_(std::move(rho)), d1_(d1), d2_(d2) {
    if (d1_ < 1 || d2_ < 1)
      throw DimMismatch("BipartiteState: subsystem dims must be positive");
    if (rho_.rows() != d1_ * d2_ || rho_.cols() != d1_ * d2_)
      throw DimMismatch("BipartiteState: matrix dim != d1*d2");
    validate_density_matrix(rho_, "BipartiteState");
  }

  const ComplexMatrix& rho() const { return rho_; }
  Index d1() const { return d1_; }
  Index d2() const { return d2_; }
  Index dim() const { return d1_ * d2_; }

 private:
  ComplexMatrix rho_;
  Index d1_;
  Index d2_;
};

struct PureVector {
  ComplexVector amplitudes;
  Index d1;
  Index d2;
};

inline BipartiteState pure(const PureVector& v) {
  if (v.amplitudes.size() != v.d1 * v.d2)
    throw DimMismatch("pure: amplitude length != d1*d2");
  if (std::abs(v.amplitudes.norm() - 1.0) > tol::norm)
    throw NotNormalized("pure: amplitudes not unit-norm");
  ComplexMatrix rho = v.amplitudes * v.amplitudes.adjoint();
  return BipartiteState(std::move(rho), v.d1, v.d2);
}

inline BipartiteState mixture(const std::vector<double>& weights,
                              const std::vector<BipartiteState>& states) {
  if (weights.empty() || weights.size() != states.size())
    throw BadWeights("mixture: weights and states must pair up");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw BadWeights("mixture: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol::trace)
    throw BadWeights("mixture: weights do not sum to 1");
  const Index d1 = states.front().d1();
  const Index d2 = states.front().d2();
  ComplexMatrix rho = ComplexMatrix::Zero(d1 * d2, d1 * d2);
  for (size_t i = 0; i < states.size(); ++i) {
    if (states[i].d1() != d1 || states[i].d2() != d2)
      throw DimMismatch("mixture: states have mismatched subsystem dims");
    rho += weights[i] * states[i].rho();
  }
  return BipartiteState(std::move(rho), d1, d2);
}

inline BipartiteState product(const ComplexMatrix& rho_a,
                              const ComplexMatrix& rho_b) {
  validate_density_matrix(rho_a, "product: first factor");
  validate_density_matrix(rho_b, "product: second factor");
  return BipartiteState(kron(rho_a, rho_b), rho_a.rows(), rho_b.rows());
}

// Mixture p |psi1><psi1| + (1-p) |psi2><psi2| with
// psi1 = a e1(x)e1 + b e2(x)e2 and psi2 = a e1(x)e2 + b e2(x)e1, a,b > 0.
inline BipartiteState family_two_pure(double a, double b, double p) {
  if (!(a > 0.0) || !(b > 0.0))
    throw BadParameters("family_two_pure: requires a, b > 0");
  if (std::abs(a * a + b * b - 1.0) > tol::norm)
    throw BadParameters("family_two_pure: a^2 + b^2 != 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw BadParameters("family_two_pure: p outside [0, 1]");
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  const double q = 1.0 - p;
  rho(0, 0) = p * a * a;
  rho(0, 3) = p * a * b;
  rho(3, 0) = p * a * b;
  rho(3, 3) = p * b * b;
  rho(1, 1) = q * a * a;
  rho(1, 2) = q * a * b;
  rho(2, 1) = q * a * b;
  rho(2, 2) = q * b * b;
  return BipartiteState(std::move(rho), 2, 2);
}

// Mixture p |Psi-><Psi-| + (1-p) |up,up><up,up| with
// Psi- = (e1(x)e2 - e2(x)e1)/sqrt(2) and |up,up> = e1(x)e1.
inline BipartiteState family_singlet_up(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw BadParameters("family_singlet_up: p outside [0, 1]");
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(0, 0) = 1.0 - p;
  rho(1, 1) = 0.5 * p;
  rho(2, 2) = 0.5 * p;
  rho(1, 2) = -0.5 * p;
  rho(2, 1) = -0.5 * p;
  return BipartiteState(std::move(rho), 2, 2);
}

inline std::pair<ComplexMatrix, ComplexMatrix> reductions(
    const BipartiteState& s) {
  return {partial_trace(s.rho(), s.d1(), s.d2(), Subsystem::first),
          partial_trace(s.rho(), s.d1(), s.d2(), Subsystem::second)};
}

}  // namespace sepcert
