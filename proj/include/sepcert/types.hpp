#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sepcert {

using Index = Eigen::Index;

template <typename Scalar>
using complex_matrix_t =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using complex_vector_t = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using ComplexMatrix = complex_matrix_t<double>;
using ComplexVector = complex_vector_t<double>;
using RealVector = Eigen::VectorXd;

// Numerical tolerances used across the library.
namespace tol {
// Max entrywise deviation |h - h^dag| admitted as "Hermitian".
inline constexpr double hermitian = 1e-10;
// Eigenvalue floor: h is PSD iff min eigenvalue >= -psd.
inline constexpr double psd = 1e-9;
// Relative off-diagonal Frobenius mass at which the Jacobi sweep stops.
inline constexpr double spectrum_rel = 1e-12;
// Trace-one and unit-norm checks on states.
inline constexpr double trace = 1e-10;
inline constexpr double norm = 1e-10;
// Slack on entropy-inequality comparisons.
inline constexpr double entropy = 1e-9;
// Product-floor threshold below which a witness candidate is rejected.
inline constexpr double witness = 1e-8;
}  // namespace tol

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimMismatch : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};
struct NotNormalized : Error {
  using Error::Error;
};
struct BadWeights : Error {
  using Error::Error;
};
struct BadParameters : Error {
  using Error::Error;
};
struct WrongDims : Error {
  using Error::Error;
};
struct InvalidAlpha : Error {
  using Error::Error;
};
struct InvalidState : Error {
  using Error::Error;
};
struct StatePpt : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace sepcert
