#pragma once

// Entanglement witnesses from NPT states: the partial transpose of the
// eigenprojector belonging to a negative eigenvalue of rho^T2 is negative
// on the state but nonnegative on every product projector. Witness
// validity is probed by alternating minimization over product vectors.

#include <cmath>
#include <cstdint>
#include <random>

#include "sepcert/criteria.hpp"
#include "sepcert/linalg.hpp"
#include "sepcert/states.hpp"
#include "sepcert/types.hpp"

namespace sepcert {

inline constexpr std::uint64_t default_seed = 0x5eedc0de;
inline constexpr int default_restarts = 32;

struct Witness {
  ComplexMatrix op;      // Hermitian witness operator
  double violation;      // Tr(op * rho) on the target state, < 0
  double product_floor;  // best value found over product projectors
  Index d1;
  Index d2;
};

inline double evaluate(const ComplexMatrix& a, const BipartiteState& s) {
  if (a.rows() != s.dim() || a.cols() != s.dim())
    throw DimMismatch("evaluate: operator dim != state dim");
  const Complex tr = (a * s.rho()).trace();
  if (std::abs(tr.imag()) >= 1e-10)
    throw NotHermitian("evaluate: trace has a non-negligible imaginary part");
  return tr.real();
}

namespace detail {

inline ComplexVector random_unit_vector(Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(dim);
  for (Index i = 0; i < dim; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

// One descent from a random second-factor start: alternately minimize
// <e(x)f|A|e(x)f> in e (min eigenvector of the f-conditioned operator)
// and in f. Each half-step is an exact minimization, so the value is
// nonincreasing.
inline double alternating_descent(const ComplexMatrix& a, Index d1, Index d2,
                                  std::mt19937_64& rng) {
  ComplexVector f = random_unit_vector(d2, rng);
  ComplexVector e;
  double value = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 500; ++iter) {
    ComplexMatrix mf(d1, d1);
    for (Index m = 0; m < d1; ++m)
      for (Index n = 0; n < d1; ++n)
        mf(m, n) = f.dot(a.block(m * d2, n * d2, d2, d2) * f);
    Spectrum se = eig_hermitian(0.5 * (mf + mf.adjoint()));
    e = se.eigenvectors.col(0);

    ComplexMatrix ne = ComplexMatrix::Zero(d2, d2);
    for (Index m = 0; m < d1; ++m)
      for (Index n = 0; n < d1; ++n)
        ne += std::conj(e[m]) * e[n] * a.block(m * d2, n * d2, d2, d2);
    Spectrum sf = eig_hermitian(0.5 * (ne + ne.adjoint()));
    f = sf.eigenvectors.col(0);
    value = sf.eigenvalues[0];

    if (std::abs(prev - value) < 1e-12) break;
    prev = value;
  }
  return value;
}

}  // namespace detail

// Estimates min over unit product vectors of <e(x)f|a|e(x)f>. Alternating
// minimization is nonconvex, so this is a "no violation found" search, not
// a proof of nonnegativity. Each restart draws from its own stream seeded
// by (seed, restart index), so the result does not depend on scheduling.
inline double verify_witness(const ComplexMatrix& a, Index d1, Index d2,
                             int restarts = default_restarts,
                             std::uint64_t seed = default_seed) {
  if (a.rows() != d1 * d2 || a.cols() != d1 * d2)
    throw DimMismatch("verify_witness: operator dim != d1*d2");
  if (hermitian_defect(a) > tol::hermitian)
    throw NotHermitian("verify_witness: operator not Hermitian");
  if (restarts < 1) throw BadParameters("verify_witness: restarts must be >= 1");

  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < restarts; ++k) {
    std::seed_seq seq{static_cast<std::uint64_t>(seed),
                      static_cast<std::uint64_t>(k)};
    std::mt19937_64 rng(seq);
    best = std::min(best, detail::alternating_descent(a, d1, d2, rng));
  }
  return best;
}

// Builds the witness (|phi><phi|)^T2 from an eigenvector phi of rho^T2
// with negative eigenvalue lambda. Then Tr(A rho) = lambda < 0 while
// Tr(A P(x)Q) = Tr(|phi><phi| P(x)Q^T) >= 0 on product projectors.
inline Witness witness_from_npt(const BipartiteState& s,
                                int restarts = default_restarts,
                                std::uint64_t seed = default_seed) {
  const ComplexMatrix pt = partial_transpose(s.rho(), s.d1(), s.d2());
  const Spectrum spec = eig_hermitian(pt);
  if (spec.eigenvalues[0] >= -tol::psd)
    throw StatePpt("witness_from_npt: state is PPT, no witness of this form");
  const ComplexVector phi = spec.eigenvectors.col(0);
  ComplexMatrix op =
      partial_transpose(ComplexMatrix(phi * phi.adjoint()), s.d1(), s.d2());
  Witness w;
  w.violation = evaluate(op, s);
  w.product_floor = verify_witness(op, s.d1(), s.d2(), restarts, seed);
  w.op = std::move(op);
  w.d1 = s.d1();
  w.d2 = s.d2();
  return w;
}

}  // namespace sepcert
