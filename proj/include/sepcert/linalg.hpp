#pragma once

// Dense complex linear algebra for small operators: Kronecker products,
// Hermitian spectra via cyclic complex Jacobi rotations, and the partial
// operations (transpose, trace) indexed by subsystem dimensions.
//
// Composite index convention: a bipartite basis element e_m (x) f_mu lives
// at row m*d2 + mu (first subsystem major).

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "sepcert/types.hpp"

namespace sepcert {

enum class Subsystem { first, second };

// Eigendecomposition of a Hermitian operator. eigenvalues are ascending;
// column i of eigenvectors pairs with eigenvalues[i].
struct Spectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

template <typename DerivedA, typename DerivedB>
ComplexMatrix kron(const Eigen::MatrixBase<DerivedA>& a,
                   const Eigen::MatrixBase<DerivedB>& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <typename Derived>
ComplexMatrix dagger(const Eigen::MatrixBase<Derived>& a) {
  return a.adjoint();
}

// Hilbert-Schmidt scalar product Tr(b^dag a).
template <typename DerivedA, typename DerivedB>
Complex hs_inner(const Eigen::MatrixBase<DerivedA>& a,
                 const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimMismatch("hs_inner: operands have different shapes");
  return (b.adjoint() * a.derived()).trace();
}

template <typename Derived>
double hermitian_defect(const Eigen::MatrixBase<Derived>& h) {
  return (h.derived() - h.derived().adjoint()).cwiseAbs().maxCoeff();
}

namespace detail {

inline double offdiag_frobenius(const ComplexMatrix& a) {
  double mass = 0.0;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = i + 1; j < a.cols(); ++j) mass += 2.0 * std::norm(a(i, j));
  return std::sqrt(mass);
}

}  // namespace detail

// Cyclic complex Jacobi eigensolver. Sweeps run until the off-diagonal
// Frobenius mass drops below spectrum_rel * ||h||_F, capped at 100 sweeps.
inline Spectrum eig_hermitian(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) throw DimMismatch("eig_hermitian: matrix not square");
  if (h.rows() < 1) throw DimMismatch("eig_hermitian: empty matrix");
  if (hermitian_defect(h) > tol::hermitian)
    throw NotHermitian("eig_hermitian: input exceeds Hermiticity tolerance");

  const Index n = h.rows();
  ComplexMatrix a = 0.5 * (h + h.adjoint());
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double threshold = tol::spectrum_rel * a.norm();

  constexpr int max_sweeps = 100;
  int sweep = 0;
  while (detail::offdiag_frobenius(a) > threshold) {
    if (++sweep > max_sweeps)
      throw NoConvergence("eig_hermitian: Jacobi sweep cap reached");
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Phase out a(p,q), then rotate the real symmetric 2x2 remainder.
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        const Complex cphase = std::conj(phase);

        const ComplexVector colp = a.col(p);
        const ComplexVector colq = a.col(q);
        a.col(p) = c * colp - (s * cphase) * colq;
        a.col(q) = s * colp + (c * cphase) * colq;
        const ComplexMatrix rowp = a.row(p);
        const ComplexMatrix rowq = a.row(q);
        a.row(p) = c * rowp - (s * phase) * rowq;
        a.row(q) = s * rowp + (c * phase) * rowq;

        const ComplexVector vp = v.col(p);
        const ComplexVector vq = v.col(q);
        v.col(p) = c * vp - (s * cphase) * vq;
        v.col(q) = s * vp + (c * cphase) * vq;
      }
    }
  }

  std::vector<Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&a](Index i, Index j) {
    return a(i, i).real() < a(j, j).real();
  });

  Spectrum spec;
  spec.eigenvalues.resize(n);
  spec.eigenvectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    spec.eigenvalues[k] = a(order[static_cast<size_t>(k)],
                            order[static_cast<size_t>(k)]).real();
    spec.eigenvectors.col(k) = v.col(order[static_cast<size_t>(k)]);
  }
  return spec;
}

inline double min_eigenvalue(const ComplexMatrix& h) {
  return eig_hermitian(h).eigenvalues[0];
}

template <typename Derived>
ComplexMatrix partial_transpose(const Eigen::MatrixBase<Derived>& rho, Index d1,
                                Index d2) {
  if (rho.rows() != rho.cols() || rho.rows() != d1 * d2)
    throw DimMismatch("partial_transpose: matrix dim != d1*d2");
  ComplexMatrix out(d1 * d2, d1 * d2);
  for (Index m = 0; m < d1; ++m)
    for (Index n = 0; n < d1; ++n)
      out.block(m * d2, n * d2, d2, d2) =
          rho.derived().block(m * d2, n * d2, d2, d2).transpose();
  return out;
}

template <typename Derived>
ComplexMatrix partial_trace(const Eigen::MatrixBase<Derived>& rho, Index d1,
                            Index d2, Subsystem keep) {
  if (rho.rows() != rho.cols() || rho.rows() != d1 * d2)
    throw DimMismatch("partial_trace: matrix dim != d1*d2");
  if (keep == Subsystem::first) {
    ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
    for (Index m = 0; m < d1; ++m)
      for (Index n = 0; n < d1; ++n)
        out(m, n) = rho.derived().block(m * d2, n * d2, d2, d2).trace();
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (Index m = 0; m < d1; ++m)
    out += rho.derived().block(m * d2, m * d2, d2, d2);
  return out;
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

}  // namespace sepcert
