#pragma once

// Linear maps on operator spaces. Completely positive maps carry a Kraus
// collection; transposition is a distinguished object (it has no Kraus
// form); decomposable maps are cp1 + cp2 composed with transposition.
// Any map converts to a Choi block matrix and back.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "sepcert/linalg.hpp"
#include "sepcert/states.hpp"
#include "sepcert/types.hpp"

namespace sepcert {

// Lambda(X) = sum_i K_i X K_i^dag; completely positive by construction.
struct KrausMap {
  std::vector<ComplexMatrix> kraus_ops;
  Index din = 0;
  Index dout = 0;

  explicit KrausMap(std::vector<ComplexMatrix> ops)
      : kraus_ops(std::move(ops)) {
    if (kraus_ops.empty())
      throw BadParameters("KrausMap: needs at least one Kraus operator");
    dout = kraus_ops.front().rows();
    din = kraus_ops.front().cols();
    if (din < 1 || dout < 1)
      throw BadParameters("KrausMap: empty Kraus operator");
    for (const auto& k : kraus_ops) {
      if (k.rows() != dout || k.cols() != din)
        throw DimMismatch("KrausMap: Kraus operators have mixed shapes");
      if (!all_finite(k)) throw BadParameters("KrausMap: non-finite entry");
    }
  }
};

// Transposition in the standard basis, X -> X^T.
struct TransposeMap {
  Index dim = 0;
};

// Lambda(X) = cp_part(X) + cp_transposed_part(X^T).
struct DecomposableMap {
  KrausMap cp_part;
  KrausMap cp_transposed_part;

  DecomposableMap(KrausMap cp1, KrausMap cp2)
      : cp_part(std::move(cp1)), cp_transposed_part(std::move(cp2)) {
    if (cp_part.din != cp_transposed_part.din ||
        cp_part.dout != cp_transposed_part.dout)
      throw DimMismatch("DecomposableMap: CP parts have mismatched dims");
  }
};

// Block operator of a map: block (i,j) holds Lambda(P_ij) for the matrix
// units P_ij. Hermitian iff the map preserves Hermiticity; PSD iff the map
// is completely positive.
struct ChoiMatrix {
  ComplexMatrix matrix;
  Index din = 0;
  Index dout = 0;

  ChoiMatrix(ComplexMatrix m, Index in, Index out)
      : matrix(std::move(m)), din(in), dout(out) {
    if (din < 1 || dout < 1 || matrix.rows() != din * dout ||
        matrix.cols() != din * dout)
      throw DimMismatch("ChoiMatrix: matrix dim != din*dout");
    if (!all_finite(matrix))
      throw BadParameters("ChoiMatrix: non-finite entry");
  }
};

using OperatorMap =
    std::variant<KrausMap, TransposeMap, DecomposableMap, ChoiMatrix>;

inline Index input_dim(const OperatorMap& m) {
  return std::visit(
      [](const auto& v) -> Index {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TransposeMap>) return v.dim;
        else return v.din;
      },
      m);
}

inline Index output_dim(const OperatorMap& m) {
  return std::visit(
      [](const auto& v) -> Index {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TransposeMap>) return v.dim;
        else return v.dout;
      },
      m);
}

inline ComplexMatrix apply(const KrausMap& m, const ComplexMatrix& x) {
  if (x.rows() != m.din || x.cols() != m.din)
    throw DimMismatch("apply: input dim != map input dim");
  ComplexMatrix out = ComplexMatrix::Zero(m.dout, m.dout);
  for (const auto& k : m.kraus_ops) out += k * x * k.adjoint();
  return out;
}

inline ComplexMatrix apply(const TransposeMap& m, const ComplexMatrix& x) {
  if (x.rows() != m.dim || x.cols() != m.dim)
    throw DimMismatch("apply: input dim != map input dim");
  return x.transpose();
}

inline ComplexMatrix apply(const DecomposableMap& m, const ComplexMatrix& x) {
  return apply(m.cp_part, x) + apply(m.cp_transposed_part, x.transpose());
}

inline ComplexMatrix apply(const ChoiMatrix& m, const ComplexMatrix& x) {
  if (x.rows() != m.din || x.cols() != m.din)
    throw DimMismatch("apply: input dim != map input dim");
  ComplexMatrix out = ComplexMatrix::Zero(m.dout, m.dout);
  for (Index i = 0; i < m.din; ++i)
    for (Index j = 0; j < m.din; ++j)
      out += x(i, j) * m.matrix.block(i * m.dout, j * m.dout, m.dout, m.dout);
  return out;
}

inline ComplexMatrix apply(const OperatorMap& m, const ComplexMatrix& x) {
  return std::visit([&x](const auto& v) { return apply(v, x); }, m);
}

template <typename Map>
ChoiMatrix choi(const Map& m) {
  const OperatorMap as_variant{m};
  const Index din = input_dim(as_variant);
  const Index dout = output_dim(as_variant);
  ComplexMatrix c = ComplexMatrix::Zero(din * dout, din * dout);
  ComplexMatrix unit = ComplexMatrix::Zero(din, din);
  for (Index i = 0; i < din; ++i) {
    for (Index j = 0; j < din; ++j) {
      unit(i, j) = 1.0;
      c.block(i * dout, j * dout, dout, dout) = apply(m, unit);
      unit(i, j) = 0.0;
    }
  }
  return ChoiMatrix(std::move(c), din, dout);
}

inline OperatorMap map_from_choi(ChoiMatrix c) { return OperatorMap{std::move(c)}; }

// Rank-1 projector onto (1/sqrt(d)) sum_i e_i (x) e_i.
inline ComplexMatrix p0_projector(Index d) {
  if (d < 1) throw BadParameters("p0_projector: d must be >= 1");
  ComplexMatrix p = ComplexMatrix::Zero(d * d, d * d);
  const double inv_d = 1.0 / static_cast<double>(d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) p(i * d + i, j * d + j) = inv_d;
  return p;
}

// Swap operator on C^d (x) C^d: V (phi (x) psi) = psi (x) phi.
inline ComplexMatrix flip_operator(Index d) {
  if (d < 1) throw BadParameters("flip_operator: d must be >= 1");
  ComplexMatrix v = ComplexMatrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) v(i * d + j, j * d + i) = 1.0;
  return v;
}

// (I (x) Lambda) rho for side = second (each d2 x d2 block goes through the
// map), or (Lambda (x) I) rho for side = first.
inline ComplexMatrix extend_and_apply(const OperatorMap& m,
                                      const BipartiteState& s, Subsystem side) {
  const Index d1 = s.d1();
  const Index d2 = s.d2();
  const Index dout = output_dim(m);
  if (side == Subsystem::second) {
    if (input_dim(m) != d2)
      throw DimMismatch("extend_and_apply: map input dim != d2");
    ComplexMatrix out(d1 * dout, d1 * dout);
    for (Index mrow = 0; mrow < d1; ++mrow)
      for (Index ncol = 0; ncol < d1; ++ncol)
        out.block(mrow * dout, ncol * dout, dout, dout) =
            apply(m, s.rho().block(mrow * d2, ncol * d2, d2, d2));
    return out;
  }
  if (input_dim(m) != d1)
    throw DimMismatch("extend_and_apply: map input dim != d1");
  // (Lambda (x) I) rho = sum_{m,n} Lambda(P_mn) (x) A_mn over the blocks
  // A_mn = <e_m| rho |e_n> on the first factor.
  ComplexMatrix out = ComplexMatrix::Zero(dout * d2, dout * d2);
  ComplexMatrix unit = ComplexMatrix::Zero(d1, d1);
  for (Index i = 0; i < d1; ++i) {
    for (Index j = 0; j < d1; ++j) {
      unit(i, j) = 1.0;
      out += kron(apply(m, unit), s.rho().block(i * d2, j * d2, d2, d2));
      unit(i, j) = 0.0;
    }
  }
  return out;
}

struct ProbeResult {
  bool all_positive;
  std::optional<size_t> violator;  // index of the first map that detected
};

// Applies each extended map to the state; a non-PSD image certifies
// entanglement. A clean pass certifies nothing beyond "not detected".
inline ProbeResult theorem2_probe(const BipartiteState& s,
                                  const std::vector<OperatorMap>& maps) {
  for (size_t i = 0; i < maps.size(); ++i) {
    const ComplexMatrix image = extend_and_apply(maps[i], s, Subsystem::second);
    if (min_eigenvalue(image) < -tol::psd) return {false, i};
  }
  return {true, std::nullopt};
}

}  // namespace sepcert
