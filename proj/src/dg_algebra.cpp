#include "xhc/dg_algebra.hpp"

#include <sstream>

#include "xhc/group.hpp"

namespace xhc {

std::optional<int> GradedBasis::find(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (elements[static_cast<size_t>(i)].name == name) return i;
  return std::nullopt;
}

const SparseVec& DGAlgebra::mul_basis(int i, int j) const {
  return mu[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

SparseVec DGAlgebra::mul(const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) vec_axpy(out, ca * cb, mul_basis(i, j));
  return out;
}

SparseVec DGAlgebra::d(const SparseVec& a) const {
  SparseVec out;
  for (const auto& [i, c] : a) vec_axpy(out, c, diff[static_cast<size_t>(i)]);
  return out;
}

SparseVec DGAlgebra::unit_vec() const { return basis_vec(unit()); }

SparseVec DGAlgebra::basis_vec(int i) const {
  SparseVec v;
  v.emplace(i, Scalar::one(field));
  return v;
}

void check_structure(const DGAlgebra& a) {
  int n = a.dim();
  if (n == 0) throw StructuralError("empty basis");
  if (a.basis.unit_index < 0 || a.basis.unit_index >= n)
    throw StructuralError("unit index out of range");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a.basis.name(i) == a.basis.name(j))
        throw StructuralError("duplicate basis name '" + a.basis.name(i) + "'");
  if (a.mu.size() != static_cast<size_t>(n)) throw StructuralError("product table has wrong shape");
  for (const auto& row : a.mu) {
    if (row.size() != static_cast<size_t>(n)) throw StructuralError("product table has wrong shape");
    for (const auto& v : row)
      for (const auto& [k, c] : v)
        if (k < 0 || k >= n) throw StructuralError("product coefficient index out of range");
  }
  if (a.diff.size() != static_cast<size_t>(n)) throw StructuralError("differential has wrong shape");
  for (const auto& v : a.diff)
    for (const auto& [k, c] : v)
      if (k < 0 || k >= n) throw StructuralError("differential index out of range");
}

namespace {

bool vec_equal(const SparseVec& a, const SparseVec& b) { return a == b; }

bool vec_homogeneous(const DGAlgebra& alg, const SparseVec& v, int deg) {
  for (const auto& [i, c] : v)
    if (alg.degree(i) != deg) return false;
  return true;
}

}  // namespace

std::vector<Violation> validate_dg_algebra(const DGAlgebra& a) {
  check_structure(a);
  std::vector<Violation> out;
  int n = a.dim();
  int e = a.unit();

  if (a.degree(e) != 0) out.push_back({"unit-degree", {e}, "unit element must have degree 0"});

  for (int i = 0; i < n; ++i) {
    if (!vec_equal(a.mul_basis(e, i), a.basis_vec(i)))
      out.push_back({"unit-law", {e, i}, "e*a != a"});
    if (!vec_equal(a.mul_basis(i, e), a.basis_vec(i)))
      out.push_back({"unit-law", {i, e}, "a*e != a"});
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!vec_homogeneous(a, a.mul_basis(i, j), a.degree(i) + a.degree(j)))
        out.push_back({"degree-additivity", {i, j}, "product not homogeneous of degree |a|+|b|"});

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        SparseVec lhs = a.mul(a.mul_basis(i, j), a.basis_vec(k));
        SparseVec rhs = a.mul(a.basis_vec(i), a.mul_basis(j, k));
        if (!vec_equal(lhs, rhs))
          out.push_back({"associativity", {i, j, k}, "(ab)c != a(bc)"});
      }

  for (int i = 0; i < n; ++i)
    if (!vec_homogeneous(a, a.diff[static_cast<size_t>(i)], a.degree(i) - 1))
      out.push_back({"differential-degree", {i}, "d is not homogeneous of degree -1"});
  if (!a.diff[static_cast<size_t>(e)].empty())
    out.push_back({"unit-closed", {e}, "d(e) != 0"});
  for (int i = 0; i < n; ++i)
    if (!a.d(a.diff[static_cast<size_t>(i)]).empty())
      out.push_back({"d-squared", {i}, "d(d(a)) != 0"});

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseVec lhs = a.d(a.mul_basis(i, j));
      SparseVec rhs = a.mul(a.diff[static_cast<size_t>(i)], a.basis_vec(j));
      Scalar sign = a.degree(i) % 2 == 0 ? Scalar::one(a.field) : -Scalar::one(a.field);
      for (const auto& [k, c] : a.mul(a.basis_vec(i), a.diff[static_cast<size_t>(j)]))
        vec_add(rhs, k, sign * c);
      if (!vec_equal(lhs, rhs))
        out.push_back({"leibniz", {i, j}, "d(ab) != d(a)b + (-1)^|a| a d(b)"});
    }

  return out;
}

DGAlgebra crossed_product(const DGAlgebra& a, const GroupAction& act) {
  int n = a.dim();
  int m = act.group.order();
  DGAlgebra out;
  out.field = a.field;
  out.basis.unit_index = a.unit() * m + act.group.identity;
  for (int i = 0; i < n; ++i)
    for (int h = 0; h < m; ++h)
      out.basis.elements.push_back(
          {a.basis.name(i) + "*u_" + act.group.elements[static_cast<size_t>(h)], a.degree(i)});

  auto idx = [m](int i, int h) { return i * m + h; };

  out.mu.assign(static_cast<size_t>(n * m), std::vector<SparseVec>(static_cast<size_t>(n * m)));
  out.diff.assign(static_cast<size_t>(n * m), SparseVec{});
  for (int i = 0; i < n; ++i)
    for (int h = 0; h < m; ++h) {
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < m; ++k) {
          // (a_i u_h)(a_j u_k) = a_i * h(a_j) (x) u_{hk}
          SparseVec hb = act.matrix(h).col(j);
          SparseVec prod = a.mul(a.basis_vec(i), hb);
          SparseVec& cell = out.mu[static_cast<size_t>(idx(i, h))][static_cast<size_t>(idx(j, k))];
          int hk = act.group.mul(h, k);
          for (const auto& [b, c] : prod) vec_add(cell, idx(b, hk), c);
        }
      SparseVec& dv = out.diff[static_cast<size_t>(idx(i, h))];
      for (const auto& [b, c] : a.diff[static_cast<size_t>(i)]) vec_add(dv, idx(b, h), c);
    }
  return out;
}

std::string format_violations(const std::vector<Violation>& v, const GradedBasis& basis) {
  std::ostringstream os;
  for (const auto& viol : v) {
    os << viol.axiom << " [";
    for (size_t i = 0; i < viol.witness.size(); ++i) {
      if (i) os << ",";
      int w = viol.witness[i];
      os << (w >= 0 && w < basis.dim() ? basis.name(w) : std::to_string(w));
    }
    os << "] " << viol.detail << "\n";
  }
  return os.str();
}

}  // namespace xhc
