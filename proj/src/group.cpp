#include "xhc/group.hpp"

#include <algorithm>

namespace xhc {

int FiniteGroup::inverse(int h) const {
  for (int k = 0; k < order(); ++k)
    if (mul(h, k) == identity) return k;
  throw StructuralError("element has no inverse");
}

std::optional<int> FiniteGroup::find(const std::string& name) const {
  for (int i = 0; i < order(); ++i)
    if (elements[static_cast<size_t>(i)] == name) return i;
  return std::nullopt;
}

FiniteGroup FiniteGroup::trivial() {
  return FiniteGroup{{"e"}, {{0}}, 0};
}

FiniteGroup FiniteGroup::cyclic(int n) {
  FiniteGroup g;
  g.identity = 0;
  for (int i = 0; i < n; ++i)
    g.elements.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  g.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
  if (n == 2) g.elements = {"e", "s"};
  return g;
}

FiniteGroup FiniteGroup::symmetric3() {
  // Permutations of {0,1,2}: e, r=(012), r2=(021), t0=(12), t1=(02), t2=(01).
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  FiniteGroup g;
  g.elements = {"e", "r", "r2", "t0", "t1", "t2"};
  g.identity = 0;
  g.table.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> ab{};
      for (int x = 0; x < 3; ++x)
        ab[static_cast<size_t>(x)] =
            perms[static_cast<size_t>(a)][static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(x)])];
      for (int cidx = 0; cidx < 6; ++cidx)
        if (perms[static_cast<size_t>(cidx)] == ab) g.table[static_cast<size_t>(a)][static_cast<size_t>(b)] = cidx;
    }
  return g;
}

std::vector<Violation> validate_group(const FiniteGroup& g) {
  std::vector<Violation> out;
  int n = g.order();
  if (n == 0) throw StructuralError("empty group");
  if (g.table.size() != static_cast<size_t>(n)) throw StructuralError("group table has wrong shape");
  for (const auto& row : g.table) {
    if (row.size() != static_cast<size_t>(n)) throw StructuralError("group table has wrong shape");
    for (int v : row)
      if (v < 0 || v >= n) throw StructuralError("group table index out of range");
  }
  if (g.identity < 0 || g.identity >= n) throw StructuralError("identity index out of range");

  for (int h = 0; h < n; ++h) {
    if (g.mul(g.identity, h) != h || g.mul(h, g.identity) != h)
      out.push_back({"group-identity", {h}, "identity law fails"});
  }
  for (int h = 0; h < n; ++h) {
    bool has_inv = false;
    for (int k = 0; k < n; ++k)
      if (g.mul(h, k) == g.identity && g.mul(k, h) == g.identity) has_inv = true;
    if (!has_inv) out.push_back({"group-inverse", {h}, "no two-sided inverse"});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          out.push_back({"group-associativity", {a, b, c}, "(ab)c != a(bc)"});
  return out;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  int n = g.order();
  ConjugacyClasses cc;
  cc.class_of.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    if (cc.class_of[static_cast<size_t>(a)] >= 0) continue;
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) {
      int conj = g.mul(g.mul(h, a), g.inverse(h));
      if (cc.class_of[static_cast<size_t>(conj)] < 0) {
        cc.class_of[static_cast<size_t>(conj)] = static_cast<int>(cc.classes.size());
        cls.push_back(conj);
      }
    }
    std::sort(cls.begin(), cls.end());
    cc.classes.push_back(std::move(cls));
  }
  return cc;
}

std::vector<int> centralizer(const FiniteGroup& g, int elem) {
  std::vector<int> out;
  for (int h = 0; h < g.order(); ++h)
    if (g.mul(h, elem) == g.mul(elem, h)) out.push_back(h);
  return out;
}

GroupAction GroupAction::trivial(const DGAlgebra& a) {
  GroupAction act;
  act.group = FiniteGroup::trivial();
  act.rho.push_back(SparseMatrix::identity(a.dim(), a.field));
  return act;
}

std::vector<Violation> validate_action(const DGAlgebra& a, const GroupAction& act) {
  int n = act.group.order();
  if (act.rho.size() != static_cast<size_t>(n)) throw StructuralError("action has wrong number of matrices");
  for (const auto& m : act.rho)
    if (m.rows() != a.dim() || m.cols() != a.dim())
      throw StructuralError("action matrix has wrong shape");
  if (Scalar(n, a.field).is_zero())
    throw StructuralError("order not invertible: |G| = " + std::to_string(n) + " vanishes in " +
                          a.field.str());

  std::vector<Violation> out;
  for (const auto& v : validate_group(act.group)) out.push_back(v);

  int dim = a.dim();
  for (int h = 0; h < n; ++h) {
    const SparseMatrix& rho = act.matrix(h);
    for (int i = 0; i < dim; ++i)
      for (const auto& [j, c] : rho.col(i))
        if (a.degree(j) != a.degree(i)) {
          out.push_back({"action-degree", {h, i}, "rho(h) does not preserve degree"});
          break;
        }
    if (!(rho.col(a.unit()) == a.unit_vec()))
      out.push_back({"action-unital", {h}, "rho(h)(e) != e"});
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        SparseVec lhs = rho.apply(a.mul_basis(i, j));
        SparseVec rhs = a.mul(rho.col(i), rho.col(j));
        if (!(lhs == rhs)) out.push_back({"action-multiplicative", {h, i, j}, "h(ab) != h(a)h(b)"});
      }
    for (int i = 0; i < dim; ++i) {
      SparseVec lhs = rho.apply(a.diff[static_cast<size_t>(i)]);
      SparseVec rhs = a.d(rho.col(i));
      if (!(lhs == rhs)) {
        out.push_back({"action-differential", {h, i}, "rho(h) d != d rho(h)"});
        break;
      }
    }
  }
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      SparseMatrix prod = act.matrix(h) * act.matrix(k);
      if (!(prod == act.matrix(act.group.mul(h, k))))
        out.push_back({"action-homomorphism", {h, k}, "rho(h)rho(k) != rho(hk)"});
    }
  // Invertibility follows from the homomorphism property with the inverse
  // element, but check rho(e) = id explicitly.
  if (!(act.matrix(act.group.identity) == SparseMatrix::identity(dim, a.field)))
    out.push_back({"action-identity", {act.group.identity}, "rho(e) != id"});
  return out;
}

}  // namespace xhc
