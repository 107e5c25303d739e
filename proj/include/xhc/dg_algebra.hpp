#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xhc/sparse.hpp"

namespace xhc {

struct BasisElement {
  std::string name;
  int degree = 0;
};

/// Ordered graded basis; the element order is the canonical order used by
/// every matrix in the project.
struct GradedBasis {
  std::vector<BasisElement> elements;
  int unit_index = 0;

  int dim() const { return static_cast<int>(elements.size()); }
  int degree(int i) const { return elements[static_cast<size_t>(i)].degree; }
  const std::string& name(int i) const { return elements[static_cast<size_t>(i)].name; }
  std::optional<int> find(const std::string& name) const;
};

/// One violated axiom with a witness tuple of basis indices.
struct Violation {
  std::string axiom;
  std::vector<int> witness;
  std::string detail;
};

/// Finite-dimensional DG algebra given by structure constants and a
/// differential matrix. d lowers degree by one (homological convention).
struct DGAlgebra {
  GradedBasis basis;
  Field field;
  std::vector<std::vector<SparseVec>> mu;  // mu[i][j] = a_i * a_j over basis
  std::vector<SparseVec> diff;             // diff[i] = d(a_i) over basis

  int dim() const { return basis.dim(); }
  int unit() const { return basis.unit_index; }
  int degree(int i) const { return basis.degree(i); }

  const SparseVec& mul_basis(int i, int j) const;
  SparseVec mul(const SparseVec& a, const SparseVec& b) const;
  SparseVec d(const SparseVec& a) const;
  SparseVec unit_vec() const;
  SparseVec basis_vec(int i) const;
};

/// Checks structural well-formedness; throws StructuralError on broken tables.
void check_structure(const DGAlgebra& a);

/// Empty report iff all five DGAlgebra axioms hold. Deterministic.
std::vector<Violation> validate_dg_algebra(const DGAlgebra& a);

struct GroupAction;  // group.hpp

/// The crossed product A x| G: basis a_i (x) u_h, product
/// (a u_h)(b u_k) = a h(b) u_{hk}, differential d(a u_h) = (da) u_h.
DGAlgebra crossed_product(const DGAlgebra& a, const GroupAction& act);

std::string format_violations(const std::vector<Violation>& v, const GradedBasis& basis);

}  // namespace xhc
