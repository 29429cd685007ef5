#pragma once

// Separability tests: PPT spectrum test, dimension-aware three-valued
// verdict, the 2x2 determinant shortcut, and Renyi/von Neumann entropy
// inequality checks.

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>

#include "sepcert/linalg.hpp"
#include "sepcert/states.hpp"
#include "sepcert/types.hpp"

namespace sepcert {

enum class Outcome { Separable, Entangled, Undecided };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Separable: return "Separable";
    case Outcome::Entangled: return "Entangled";
    default: return "Undecided";
  }
}

struct Verdict {
  Outcome outcome;
  double min_eig_pt;                                   // min eigenvalue of rho^T2
  std::optional<std::pair<double, double>> determinants;  // (W1, W2), 2x2 only
  Index d1;
  Index d2;
};

struct EntropyReport {
  double alpha;  // +infinity marks the min-entropy limit
  double s_total;
  double s_red1;
  double s_red2;
  bool satisfied;
};

// (PPT holds, min eigenvalue of rho^T2).
inline std::pair<bool, double> ppt_test(const BipartiteState& s) {
  const double lambda =
      min_eigenvalue(partial_transpose(s.rho(), s.d1(), s.d2()));
  return {lambda >= -tol::psd, lambda};
}

// Principal 2x2 minors of rho^T2 on index pairs {(1,1),(2,2)} and
// {(1,2),(2,1)}; composite index (m,mu) -> 2(m-1) + (mu-1).
inline std::pair<double, double> det_shortcut(const BipartiteState& s) {
  if (s.d1() != 2 || s.d2() != 2)
    throw WrongDims("det_shortcut: defined for 2x2 systems only");
  const ComplexMatrix pt = partial_transpose(s.rho(), 2, 2);
  const double w1 = (pt(0, 0) * pt(3, 3) - pt(0, 3) * pt(3, 0)).real();
  const double w2 = (pt(1, 1) * pt(2, 2) - pt(1, 2) * pt(2, 1)).real();
  return {w1, w2};
}

// Entangled iff the partial transpose has a negative eigenvalue; PPT is
// conclusive for separability only up to total dimension 6.
inline Verdict verdict(const BipartiteState& s) {
  const auto [ppt, lambda] = ppt_test(s);
  Verdict v;
  v.min_eig_pt = lambda;
  v.d1 = s.d1();
  v.d2 = s.d2();
  if (s.d1() == 2 && s.d2() == 2) v.determinants = det_shortcut(s);
  if (!ppt)
    v.outcome = Outcome::Entangled;
  else if (s.dim() <= 6)
    v.outcome = Outcome::Separable;
  else
    v.outcome = Outcome::Undecided;
  return v;
}

// Renyi alpha-entropy in nats: von Neumann at alpha = 1, -ln(lambda_max)
// at alpha = infinity. Eigenvalues are clipped to [0, 1] before the logs.
inline double alpha_entropy(const ComplexMatrix& rho, double alpha) {
  if (std::isnan(alpha) || alpha < 1.0)
    throw InvalidAlpha("alpha_entropy: alpha must be 1, a real > 1, or inf");
  validate_density_matrix(rho, "alpha_entropy");
  RealVector lambda = eig_hermitian(rho).eigenvalues;
  for (Index i = 0; i < lambda.size(); ++i)
    lambda[i] = std::clamp(lambda[i], 0.0, 1.0);

  if (std::isinf(alpha)) return -std::log(lambda[lambda.size() - 1]);
  if (alpha == 1.0) {
    double s = 0.0;
    for (Index i = 0; i < lambda.size(); ++i)
      if (lambda[i] > 0.0) s -= lambda[i] * std::log(lambda[i]);
    return s;
  }
  double power_sum = 0.0;
  for (Index i = 0; i < lambda.size(); ++i)
    power_sum += std::pow(lambda[i], alpha);
  return std::log(power_sum) / (1.0 - alpha);
}

// Separability requires the whole to be at least as mixed as each part:
// S_alpha(rho) >= max_i S_alpha(rho_i). A violation certifies entanglement.
inline EntropyReport entropy_inequality(const BipartiteState& s, double alpha) {
  const auto [red1, red2] = reductions(s);
  EntropyReport r;
  r.alpha = alpha;
  r.s_total = alpha_entropy(s.rho(), alpha);
  r.s_red1 = alpha_entropy(red1, alpha);
  r.s_red2 = alpha_entropy(red2, alpha);
  r.satisfied = r.s_total >= std::max(r.s_red1, r.s_red2) - tol::entropy;
  return r;
}

struct ComparisonReport {
  Verdict verdict;
  std::array<EntropyReport, 3> entropy;  // alpha = 1, 2, infinity
};

inline ComparisonReport criterion_comparison(const BipartiteState& s) {
  if (s.d1() != 2 || s.d2() != 2)
    throw WrongDims("criterion_comparison: defined for 2x2 systems only");
  ComparisonReport r{verdict(s),
                     {entropy_inequality(s, 1.0), entropy_inequality(s, 2.0),
                      entropy_inequality(
                          s, std::numeric_limits<double>::infinity())}};
  return r;
}

}  // namespace sepcert
