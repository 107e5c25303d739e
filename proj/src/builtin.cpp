#include "xhc/builtin.hpp"

namespace xhc {

namespace {

DGAlgebra make(Field f, std::vector<BasisElement> basis,
               std::vector<std::tuple<int, int, int, long>> products,
               std::vector<std::tuple<int, int, long>> diffs) {
  DGAlgebra a;
  a.field = f;
  a.basis.elements = std::move(basis);
  a.basis.unit_index = 0;
  int n = a.dim();
  a.mu.assign(static_cast<size_t>(n), std::vector<SparseVec>(static_cast<size_t>(n)));
  a.diff.assign(static_cast<size_t>(n), SparseVec{});
  for (int i = 0; i < n; ++i) {
    vec_add(a.mu[0][static_cast<size_t>(i)], i, Scalar::one(f));
    if (i != 0) vec_add(a.mu[static_cast<size_t>(i)][0], i, Scalar::one(f));
  }
  for (auto& [i, j, k, c] : products)
    vec_add(a.mu[static_cast<size_t>(i)][static_cast<size_t>(j)], k, Scalar(c, f));
  for (auto& [i, k, c] : diffs) vec_add(a.diff[static_cast<size_t>(i)], k, Scalar(c, f));
  return a;
}

}  // namespace

DGAlgebra builtin_algebra(const std::string& name, Field f) {
  if (name == "ground") return make(f, {{"e", 0}}, {}, {});
  if (name == "dual") return make(f, {{"e", 0}, {"x", 0}}, {}, {});
  if (name == "exterior") return make(f, {{"e", 0}, {"x", 1}}, {}, {});
  if (name == "acyclic")
    return make(f, {{"e", 0}, {"x", 0}, {"y", 1}}, {}, {{2, 1, 1}});
  if (name == "uppertri")
    return make(f, {{"e", 0}, {"a", 0}, {"b", 0}}, {{1, 1, 1, 1}, {1, 2, 2, 1}}, {});
  if (name == "idem")
    return make(f, {{"e", 0}, {"x", 0}, {"y", 1}},
                {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}}, {{2, 1, 1}});
  if (name == "square")
    return make(f, {{"e", 0}, {"x", 1}, {"z", 2}}, {{1, 1, 2, 1}}, {});
  throw ParseError("unknown builtin algebra: " + name);
}

std::vector<std::string> builtin_algebra_names() {
  return {"ground", "dual", "exterior", "acyclic", "uppertri", "idem", "square"};
}

FiniteGroup builtin_group(const std::string& name) {
  if (name == "trivial") return FiniteGroup::trivial();
  if (name == "z2") return FiniteGroup::cyclic(2);
  if (name == "z3") return FiniteGroup::cyclic(3);
  if (name == "s3") return FiniteGroup::symmetric3();
  throw ParseError("unknown builtin group: " + name);
}

std::vector<std::string> builtin_group_names() { return {"trivial", "z2", "z3", "s3"}; }

GroupAction builtin_action(const DGAlgebra& a, const std::string& group,
                           const std::string& action) {
  FiniteGroup g = builtin_group(group);
  if (action == "trivial") {
    GroupAction act = GroupAction::trivial(a);
    act.group = g;
    act.rho.assign(static_cast<size_t>(g.order()), SparseMatrix::identity(a.dim(), a.field));
    return act;
  }
  if (action == "sign") {
    if (g.order() != 2) throw ParseError("the sign action needs the group z2");
    GroupAction act;
    act.group = g;
    SparseMatrix neg(a.dim(), a.dim(), a.field);
    for (int i = 0; i < a.dim(); ++i)
      neg.add(i, i, Scalar(i == a.unit() ? 1 : -1, a.field));
    act.rho = {SparseMatrix::identity(a.dim(), a.field), neg};
    return act;
  }
  throw ParseError("unknown builtin action: " + action);
}

BuiltinPair builtin_pair(const std::string& name, Field f) {
  if (name == "ground-trivial")
    return {name, builtin_algebra("ground", f),
            builtin_action(builtin_algebra("ground", f), "trivial", "trivial")};
  if (name == "ground-s3")
    return {name, builtin_algebra("ground", f),
            builtin_action(builtin_algebra("ground", f), "s3", "trivial")};
  if (name == "dual-z2")
    return {name, builtin_algebra("dual", f),
            builtin_action(builtin_algebra("dual", f), "z2", "sign")};
  if (name == "exterior-z2")
    return {name, builtin_algebra("exterior", f),
            builtin_action(builtin_algebra("exterior", f), "z2", "sign")};
  if (name == "acyclic-z2")
    return {name, builtin_algebra("acyclic", f),
            builtin_action(builtin_algebra("acyclic", f), "z2", "sign")};
  if (name == "uppertri-z3")
    return {name, builtin_algebra("uppertri", f),
            builtin_action(builtin_algebra("uppertri", f), "z3", "trivial")};
  throw ParseError("unknown builtin pair: " + name);
}

std::vector<std::string> builtin_pair_names() {
  return {"ground-trivial", "ground-s3", "dual-z2", "exterior-z2", "acyclic-z2", "uppertri-z3"};
}

std::vector<SignProbe> builtin_probes() {
  Field f = Field::rational();
  std::vector<SignProbe> probes;
  auto add = [&](const std::string& alg, const std::string& grp, const std::string& action) {
    DGAlgebra a = builtin_algebra(alg, f);
    GroupAction act = builtin_action(a, grp, action);
    probes.push_back(SignProbe{alg + "/" + grp + "-" + action, std::move(a), std::move(act)});
  };
  add("uppertri", "trivial", "trivial");
  add("dual", "z2", "sign");
  add("exterior", "z2", "sign");
  add("acyclic", "z2", "sign");
  add("idem", "trivial", "trivial");
  add("square", "trivial", "trivial");
  return probes;
}

}  // namespace xhc
