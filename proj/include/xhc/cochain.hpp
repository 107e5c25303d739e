#pragma once

#include "xhc/chains.hpp"

namespace xhc {

/// Hochschild cochain D in C^d(A, A). The value table is indexed by full
/// basis-argument tuples; file-loaded and sampled cochains are normalized
/// (zero whenever an argument is the unit), while the structural cochain m2
/// carries the full multiplication including unit arguments.
struct Cochain {
  const DGAlgebra* algebra = nullptr;
  int arity = 0;
  int map_degree = 0;
  std::vector<SparseVec> values;  // dim^arity entries, args flattened row-major

  /// Suspended total degree |D| = map_degree + arity used in all signs.
  int total_degree() const { return map_degree + arity; }

  long flat(const std::vector<int>& args) const;
  const SparseVec& eval(const std::vector<int>& args) const;
  /// Multilinear evaluation on sparse vector arguments.
  SparseVec eval_vec(const std::vector<SparseVec>& args) const;
  void set(const std::vector<int>& args, SparseVec v);

  bool is_zero() const;
  bool operator==(const Cochain& o) const;
};

Cochain zero_cochain(const DGAlgebra& a, int arity, int map_degree);
Cochain add(const Cochain& x, const Cochain& y);
Cochain scaled(const Cochain& x, const Scalar& c);

/// m1: the differential as an arity-1, map_degree -1 cochain.
Cochain m1_cochain(const DGAlgebra& a);
/// m2: the multiplication as an arity-2, map_degree 0 cochain (not
/// normalized: unit arguments act by the unit law).
Cochain m2_cochain(const DGAlgebra& a);
/// Arity-0 cochain whose value is the unit.
Cochain unit_constant_cochain(const DGAlgebra& a);
/// Arity-1 identity map a -> a on non-unit elements (normalized).
Cochain identity_cochain(const DGAlgebra& a);
/// Deterministic homogeneous normalized cochain with small integer
/// coefficients; same seed gives the same cochain on every platform.
Cochain random_cochain(const DGAlgebra& a, int arity, int map_degree, unsigned long seed);

/// Group-averaged equivariantization (1/|G|) sum_h h o D o (h^{-1})^{x d};
/// the image is the G-equivariant projection of D (same arity/map degree).
Cochain equivariant_average(const Cochain& d, const GroupAction& act);

/// Projection onto the normalized cochain subcomplex: values on tuples with a
/// unit argument are dropped (the complex is built from maps on Abar^{x d}).
Cochain normalized_cochain(const Cochain& d);

/// Empty iff the degree rule holds for every stored value; when
/// require_normalized is set, unit-argument tuples must evaluate to zero.
std::vector<Violation> validate_cochain(const Cochain& d, bool require_normalized);

/// Hochschild coboundary (three-part formula); |delta D| = |D| + 1.
Cochain delta(const Cochain& d);
/// Cup product, arity d+e.
Cochain cup(const Cochain& d, const Cochain& e);
/// Gerstenhaber circle (insertion) product, arity d+e-1; arity-0 first factor
/// gives the zero cochain.
Cochain circle(const Cochain& d, const Cochain& e);
/// Gerstenhaber bracket [D,E] = D o E - (-1)^{(|D|+1)(|E|+1)} E o D.
Cochain bracket(const Cochain& d, const Cochain& e);

/// Twisted Lie derivative L_D^g : C_n -> C_{n-d+1}, assembled termwise from
/// the interior insertion terms (window a_{j+1..j+d}, j = 0..n-d, exponent
/// (|D|+1)P_j + tau(win)) and the wrapped boundary terms (D consuming the
/// g^{-1}-twisted tail followed by the head slots, exponent
/// 1 + |D| + (P_k+1)Q_k + tau(win)). When interior_only is set, only the
/// non-wrapping insertion terms are assembled (the proof-device split).
SparseOperator lie_derivative(const Cochain& d, const GroupAction& act, int g, int n,
                              const SignConvention& conv, bool interior_only = false);

/// Twisted contraction iota_D : C_n -> C_{n-d}, single term
/// (-1)^{|D||a_0| + tau(win)} a_0 D(a_1..a_d) (x) rest; zero map for n < d.
SparseOperator contraction(const Cochain& d, const GroupAction& act, int g, int n,
                           const SignConvention& conv);

/// Twisted suspension S_D : C_n -> C_{n-d+2}: unit-headed double sum over
/// insertion window j and rotation cut k, exponent
/// (|D|+1)P_j + Q_k(P_j + W + M + |D|) + tau(win).
SparseOperator suspension(const Cochain& d, const GroupAction& act, int g, int n,
                          const SignConvention& conv);

}  // namespace xhc
