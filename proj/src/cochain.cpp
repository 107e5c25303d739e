#include "xhc/cochain.hpp"

#include <random>

namespace xhc {

namespace {

Scalar sgn(int exp, const Field& f) { return Scalar((exp & 1) ? -1 : 1, f); }

std::vector<int> slot_degrees(const DGAlgebra& a, const std::vector<int>& t) {
  std::vector<int> e(t.size());
  e[0] = a.degree(t[0]);
  for (size_t i = 1; i < t.size(); ++i) e[i] = a.degree(t[i]) + 1;
  return e;
}

void emit(const ChainSpace& tgt, SparseMatrix& m, long src_col,
          const std::vector<SparseVec>& slots, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  std::vector<int> t(slots.size());
  std::function<void(size_t, const Scalar&)> rec = [&](size_t i, const Scalar& c) {
    if (i == slots.size()) {
      long r = tgt.index(t);
      if (r >= 0) m.add(static_cast<int>(r), static_cast<int>(src_col), c);
      return;
    }
    for (const auto& [b, v] : slots[i]) {
      t[i] = b;
      rec(i + 1, c * v);
    }
  };
  rec(0, coeff);
}

/// Builds a cochain by evaluating fn on every full basis-argument tuple.
Cochain build(const DGAlgebra& a, int arity, int map_degree,
              const std::function<SparseVec(const std::vector<int>&)>& fn) {
  Cochain c = zero_cochain(a, arity, map_degree);
  std::vector<int> args(static_cast<size_t>(arity));
  long total = 1;
  for (int i = 0; i < arity; ++i) total *= a.dim();
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx;
    for (int i = arity - 1; i >= 0; --i) {
      args[static_cast<size_t>(i)] = static_cast<int>(rem % a.dim());
      rem /= a.dim();
    }
    SparseVec v = fn(args);
    if (!v.empty()) c.values[static_cast<size_t>(idx)] = std::move(v);
  }
  return c;
}

}  // namespace

long Cochain::flat(const std::vector<int>& args) const {
  long idx = 0;
  for (int a : args) idx = idx * algebra->dim() + a;
  return idx;
}

const SparseVec& Cochain::eval(const std::vector<int>& args) const {
  return values[static_cast<size_t>(flat(args))];
}

SparseVec Cochain::eval_vec(const std::vector<SparseVec>& args) const {
  SparseVec out;
  std::vector<int> idx(args.size());
  std::function<void(size_t, const Scalar&)> rec = [&](size_t i, const Scalar& c) {
    if (i == args.size()) {
      vec_axpy(out, c, eval(idx));
      return;
    }
    for (const auto& [b, v] : args[i]) {
      idx[i] = b;
      rec(i + 1, c * v);
    }
  };
  rec(0, Scalar::one(algebra->field));
  return out;
}

void Cochain::set(const std::vector<int>& args, SparseVec v) {
  values[static_cast<size_t>(flat(args))] = std::move(v);
}

bool Cochain::is_zero() const {
  for (const auto& v : values)
    if (!v.empty()) return false;
  return true;
}

bool Cochain::operator==(const Cochain& o) const {
  return algebra == o.algebra && arity == o.arity && map_degree == o.map_degree &&
         values == o.values;
}

Cochain zero_cochain(const DGAlgebra& a, int arity, int map_degree) {
  Cochain c;
  c.algebra = &a;
  c.arity = arity;
  c.map_degree = map_degree;
  long total = 1;
  for (int i = 0; i < arity; ++i) total *= a.dim();
  c.values.assign(static_cast<size_t>(total), SparseVec{});
  return c;
}

Cochain add(const Cochain& x, const Cochain& y) {
  if (x.algebra != y.algebra || x.arity != y.arity || x.map_degree != y.map_degree)
    throw StructuralError("cochain shape mismatch in sum");
  Cochain c = x;
  for (size_t i = 0; i < c.values.size(); ++i)
    for (const auto& [b, v] : y.values[i]) vec_add(c.values[i], b, v);
  return c;
}

Cochain scaled(const Cochain& x, const Scalar& s) {
  Cochain c = zero_cochain(*x.algebra, x.arity, x.map_degree);
  for (size_t i = 0; i < c.values.size(); ++i) vec_axpy(c.values[i], s, x.values[i]);
  return c;
}

Cochain m1_cochain(const DGAlgebra& a) {
  return build(a, 1, -1, [&](const std::vector<int>& args) {
    return a.diff[static_cast<size_t>(args[0])];
  });
}

Cochain m2_cochain(const DGAlgebra& a) {
  return build(a, 2, 0, [&](const std::vector<int>& args) {
    return a.mul_basis(args[0], args[1]);
  });
}

Cochain unit_constant_cochain(const DGAlgebra& a) {
  Cochain c = zero_cochain(a, 0, 0);
  c.values[0] = a.unit_vec();
  return c;
}

Cochain identity_cochain(const DGAlgebra& a) {
  return build(a, 1, 0, [&](const std::vector<int>& args) {
    return args[0] == a.unit() ? SparseVec{} : a.basis_vec(args[0]);
  });
}

Cochain random_cochain(const DGAlgebra& a, int arity, int map_degree, unsigned long seed) {
  std::mt19937 eng(static_cast<unsigned int>(seed));
  return build(a, arity, map_degree, [&](const std::vector<int>& args) {
    for (int x : args)
      if (x == a.unit()) return SparseVec{};
    int in_deg = 0;
    for (int x : args) in_deg += a.degree(x);
    SparseVec v;
    for (int b = 0; b < a.dim(); ++b) {
      if (a.degree(b) != in_deg + map_degree) continue;
      long r = static_cast<long>(eng() % 7) - 3;
      vec_add(v, b, Scalar(r, a.field));
    }
    return v;
  });
}

Cochain equivariant_average(const Cochain& d, const GroupAction& act) {
  const DGAlgebra& a = *d.algebra;
  const FiniteGroup& gr = act.group;
  Scalar inv_order(1, a.field);
  inv_order = inv_order / Scalar(gr.order(), a.field);
  return build(a, d.arity, d.map_degree, [&](const std::vector<int>& args) {
    SparseVec acc;
    for (int h = 0; h < gr.order(); ++h) {
      int hinv = gr.inverse(h);
      std::vector<SparseVec> vargs;
      vargs.reserve(args.size());
      for (int x : args) vargs.push_back(act.matrix(hinv).col(x));
      SparseVec val = d.eval_vec(vargs);
      for (const auto& [b, cf] : val) vec_axpy(acc, cf, act.matrix(h).col(b));
    }
    SparseVec out;
    for (const auto& [b, cf] : acc) vec_add(out, b, cf * inv_order);
    return out;
  });
}

Cochain normalized_cochain(const Cochain& d) {
  const DGAlgebra& a = *d.algebra;
  Cochain c = d;
  std::vector<int> args(static_cast<size_t>(d.arity));
  for (long idx = 0; idx < static_cast<long>(c.values.size()); ++idx) {
    long rem = idx;
    for (int i = d.arity - 1; i >= 0; --i) {
      args[static_cast<size_t>(i)] = static_cast<int>(rem % a.dim());
      rem /= a.dim();
    }
    for (int x : args)
      if (x == a.unit()) {
        c.values[static_cast<size_t>(idx)].clear();
        break;
      }
  }
  return c;
}

std::vector<Violation> validate_cochain(const Cochain& d, bool require_normalized) {
  std::vector<Violation> out;
  const DGAlgebra& a = *d.algebra;
  std::vector<int> args(static_cast<size_t>(d.arity));
  for (long idx = 0; idx < static_cast<long>(d.values.size()); ++idx) {
    long rem = idx;
    bool has_unit = false;
    int in_deg = 0;
    for (int i = d.arity - 1; i >= 0; --i) {
      args[static_cast<size_t>(i)] = static_cast<int>(rem % a.dim());
      rem /= a.dim();
    }
    for (int x : args) {
      has_unit = has_unit || x == a.unit();
      in_deg += a.degree(x);
    }
    const SparseVec& v = d.values[static_cast<size_t>(idx)];
    if (v.empty()) continue;
    if (require_normalized && has_unit) {
      out.push_back({"cochain-normalized", args, "nonzero value on a unit argument"});
      continue;
    }
    for (const auto& [b, c] : v) {
      (void)c;
      if (a.degree(b) != in_deg + d.map_degree) {
        out.push_back({"cochain-homogeneous", args,
                       "output component " + a.basis.name(b) + " off degree"});
        break;
      }
    }
  }
  return out;
}

Cochain delta(const Cochain& d) {
  const DGAlgebra& a = *d.algebra;
  int ar = d.arity;
  int td = d.total_degree();
  return build(a, ar + 1, d.map_degree, [&](const std::vector<int>& args) {
    SparseVec out;
    // (-1)^{|D|_map} D(a_1..a_d) a_{d+1}
    {
      std::vector<int> head(args.begin(), args.end() - 1);
      for (const auto& [b, c] : d.eval(head))
        vec_axpy(out, c * sgn(d.map_degree, a.field), a.mul_basis(b, args.back()));
    }
    // +- a_1 D(a_2..a_{d+1}); the exponent carries the suspension-twist
    // corrections so that delta agrees with [m2, .] under the twisted circle.
    {
      std::vector<int> tail(args.begin() + 1, args.end());
      int w1 = a.degree(args[0]);
      int exp = (td + 1) * (w1 + 1) + (ar + 1) * w1;
      for (const auto& [b, c] : d.eval(tail))
        vec_axpy(out, c * sgn(exp, a.field), a.mul_basis(args[0], b));
    }
    // interior merges, sign (-1)^{|D| + j}
    for (int j = 0; j < ar; ++j) {
      int exp = td + j;
      std::vector<SparseVec> margs;
      margs.reserve(static_cast<size_t>(ar));
      for (int i = 0; i < j; ++i) margs.push_back(a.basis_vec(args[static_cast<size_t>(i)]));
      margs.push_back(a.mul_basis(args[static_cast<size_t>(j)], args[static_cast<size_t>(j + 1)]));
      for (int i = j + 2; i <= ar; ++i) margs.push_back(a.basis_vec(args[static_cast<size_t>(i)]));
      vec_axpy(out, sgn(exp, a.field), d.eval_vec(margs));
    }
    return out;
  });
}

Cochain cup(const Cochain& d, const Cochain& e) {
  const DGAlgebra& a = *d.algebra;
  int td_e = e.total_degree();
  return build(a, d.arity + e.arity, d.map_degree + e.map_degree,
               [&](const std::vector<int>& args) {
                 std::vector<int> left(args.begin(), args.begin() + d.arity);
                 std::vector<int> right(args.begin() + d.arity, args.end());
                 int exp = 0;
                 for (int x : left) exp += a.degree(x) + 1;
                 exp *= td_e;
                 SparseVec out;
                 const SparseVec& dv = d.eval(left);
                 const SparseVec& ev = e.eval(right);
                 for (const auto& [b1, c1] : dv)
                   for (const auto& [b2, c2] : ev)
                     vec_axpy(out, c1 * c2 * sgn(exp, a.field), a.mul_basis(b1, b2));
                 return out;
               });
}

namespace {

/// Koszul cost of desuspending an m-tuple slotwise: position i carries m-i
/// suspension crossings past a degree-|x_i| element.
int tau(const std::vector<int>& degs) {
  int m = static_cast<int>(degs.size());
  int s = 0;
  for (int i = 0; i < m; ++i) s += (m - 1 - i) * degs[static_cast<size_t>(i)];
  return s;
}

}  // namespace

Cochain circle(const Cochain& d, const Cochain& e) {
  const DGAlgebra& a = *d.algebra;
  int out_arity = d.arity + e.arity - 1;
  if (d.arity == 0) return zero_cochain(a, std::max(out_arity, 0), d.map_degree + e.map_degree);
  int td_e = e.total_degree();
  return build(a, out_arity, d.map_degree + e.map_degree, [&](const std::vector<int>& args) {
    std::vector<int> adeg(args.size());
    for (size_t i = 0; i < args.size(); ++i) adeg[i] = a.degree(args[i]);
    int tau_all = tau(adeg);
    SparseVec out;
    int exp = 0;
    for (int j = 0; j < d.arity; ++j) {
      if (j > 0) exp += adeg[static_cast<size_t>(j - 1)] + 1;
      std::vector<SparseVec> dargs;
      dargs.reserve(static_cast<size_t>(d.arity));
      for (int i = 0; i < j; ++i) dargs.push_back(a.basis_vec(args[static_cast<size_t>(i)]));
      std::vector<int> eargs(args.begin() + j, args.begin() + j + e.arity);
      dargs.push_back(e.eval(eargs));
      for (int i = j + e.arity; i < out_arity; ++i)
        dargs.push_back(a.basis_vec(args[static_cast<size_t>(i)]));
      // Suspension bookkeeping: the insertion sign is conjugated by the
      // slotwise desuspension twist on the inner tuple, on the outer tuple
      // (with the inserted slot carrying the degree of the e-output), and on
      // the combined tuple.
      std::vector<int> edeg(adeg.begin() + j, adeg.begin() + j + e.arity);
      int inner_deg = e.map_degree;
      for (int x : edeg) inner_deg += x;
      std::vector<int> ddeg;
      ddeg.reserve(static_cast<size_t>(d.arity));
      for (int i = 0; i < j; ++i) ddeg.push_back(adeg[static_cast<size_t>(i)]);
      ddeg.push_back(inner_deg);
      for (int i = j + e.arity; i < out_arity; ++i) ddeg.push_back(adeg[static_cast<size_t>(i)]);
      int s = (td_e + 1) * exp + tau(edeg) + tau(ddeg) + tau_all;
      vec_axpy(out, sgn(s, a.field), d.eval_vec(dargs));
    }
    return out;
  });
}

Cochain bracket(const Cochain& d, const Cochain& e) {
  Cochain de = circle(d, e);
  Cochain ed = circle(e, d);
  int exp = (d.total_degree() + 1) * (e.total_degree() + 1);
  return add(de, scaled(ed, -sgn(exp, d.algebra->field)));
}

namespace {

/// Single interior insertion term of L_D^g: D applied to slots j+1..j+d,
/// signed by nu_j = (|D|+1)P_j + tau(win) with P_j the suspended prefix sum
/// e_0+...+e_j.
SparseOperator lie_interior_term(const Cochain& d, int g, int n, int j,
                                 bool normalized = true) {
  const DGAlgebra& a = *d.algebra;
  int ar = d.arity;
  ChainSpace src{&a, g, n, normalized}, tgt{&a, g, n - ar + 1, normalized};
  SparseOperator op = zero_operator(src, tgt, d.map_degree - ar + 1);
  int td = d.total_degree();
  for (long s = 0; s < src.dim(); ++s) {
    auto t = src.tuple(s);
    auto e = slot_degrees(a, t);
    std::vector<int> args(t.begin() + j + 1, t.begin() + j + 1 + ar);
    const SparseVec& out = d.eval(args);
    if (out.empty()) continue;
    int nu = 0;
    for (int i = 0; i <= j; ++i) nu += e[static_cast<size_t>(i)];
    nu *= td + 1;
    // Desuspension twist of the consumed window.
    {
      std::vector<int> win;
      for (int i = j + 1; i <= j + ar; ++i)
        win.push_back(a.degree(t[static_cast<size_t>(i)]));
      nu += tau(win);
    }
    std::vector<SparseVec> slots;
    slots.reserve(static_cast<size_t>(n - ar + 2));
    for (int i = 0; i <= j; ++i) slots.push_back(a.basis_vec(t[static_cast<size_t>(i)]));
    slots.push_back(out);
    for (int i = j + ar + 1; i <= n; ++i) slots.push_back(a.basis_vec(t[static_cast<size_t>(i)]));
    emit(tgt, op.mat, s, slots, sgn(nu, a.field));
  }
  return op;
}

/// Wrapped term of L_D^g at index k (k = n+1-d .. n): D consumes the twisted
/// tail g^{-1}(a_{k+1}), ..., g^{-1}(a_n) followed by a_0, ..., landing in
/// slot 0, with the slice a_{d-n+k}, ..., a_k left over. The sign is
/// eta_k = 1 + |D| + (B-term exponent at k) + tau(win).
SparseOperator lie_wrapped_term(const Cochain& d, const GroupAction& act, int g, int n, int k,
                                const SignConvention& conv) {
  const DGAlgebra& a = *d.algebra;
  int ar = d.arity;
  ChainSpace src{&a, g, n, true}, tgt{&a, g, n - ar + 1, true};
  SparseOperator op = zero_operator(src, tgt, d.map_degree - ar + 1);
  int td = d.total_degree();
  int head = ar - (n - k);  // entries a_0 .. a_{head-1} consumed by D
  int ginv = act.group.inverse(g);
  for (long s = 0; s < src.dim(); ++s) {
    auto t = src.tuple(s);
    std::vector<SparseVec> dargs;
    dargs.reserve(static_cast<size_t>(ar));
    for (int i = k + 1; i <= n; ++i)
      dargs.push_back(act.matrix(ginv).col(t[static_cast<size_t>(i)]));
    for (int i = 0; i < head; ++i) dargs.push_back(a.basis_vec(t[static_cast<size_t>(i)]));
    SparseVec out = d.eval_vec(dargs);
    if (out.empty()) continue;
    int xi = 1 + td + B_term_exponent(a, t, k, conv);
    // Same desuspension correction as the interior insertions, on the
    // wrapped window (the group action preserves degree).
    {
      std::vector<int> win;
      for (int i = k + 1; i <= n; ++i) win.push_back(a.degree(t[static_cast<size_t>(i)]));
      for (int i = 0; i < head; ++i) win.push_back(a.degree(t[static_cast<size_t>(i)]));
      xi += tau(win);
    }
    std::vector<SparseVec> slots;
    slots.reserve(static_cast<size_t>(n - ar + 2));
    slots.push_back(std::move(out));
    for (int i = head; i <= k; ++i) slots.push_back(a.basis_vec(t[static_cast<size_t>(i)]));
    emit(tgt, op.mat, s, slots, sgn(xi, a.field));
  }
  return op;
}

}  // namespace

SparseOperator lie_derivative(const Cochain& d, const GroupAction& act, int g, int n,
                              const SignConvention& conv, bool interior_only) {
  const DGAlgebra& a = *d.algebra;
  int ar = d.arity;
  ChainSpace src{&a, g, n, true};
  ChainSpace tgt{&a, g, std::max(n - ar + 1, 0), true};
  SparseOperator op = zero_operator(src, tgt, d.map_degree - ar + 1);
  if (n - ar + 1 < 0) return op;
  for (int j = 0; j + ar <= n; ++j)
    op.mat = op.mat + lie_interior_term(d, g, n, j).mat;
  if (!interior_only && ar >= 1)
    for (int k = std::max(n + 1 - ar, 0); k <= n; ++k)
      op.mat = op.mat + lie_wrapped_term(d, act, g, n, k, conv).mat;
  return op;
}

SparseOperator contraction(const Cochain& d, const GroupAction& /*act*/, int g, int n,
                           const SignConvention& /*conv*/) {
  const DGAlgebra& a = *d.algebra;
  int ar = d.arity;
  ChainSpace src{&a, g, n, true};
  ChainSpace tgt{&a, g, std::max(n - ar, 0), true};
  SparseOperator op = zero_operator(src, tgt, d.map_degree - ar);
  if (n < ar) return op;
  int td = d.total_degree();
  for (long s = 0; s < src.dim(); ++s) {
    auto t = src.tuple(s);
    std::vector<int> args(t.begin() + 1, t.begin() + 1 + ar);
    const SparseVec& dv = d.eval(args);
    if (dv.empty()) continue;
    SparseVec headv;
    for (const auto& [b, c] : dv) vec_axpy(headv, c, a.mul_basis(t[0], b));
    std::vector<SparseVec> slots;
    slots.reserve(static_cast<size_t>(n - ar + 1));
    slots.push_back(headv);
    for (int i = ar + 1; i <= n; ++i) slots.push_back(a.basis_vec(t[static_cast<size_t>(i)]));
    int exp = td * a.degree(t[0]);
    // Desuspension twist of the consumed window (vanishes for trivial grading).
    {
      std::vector<int> win;
      for (int i = 1; i <= ar; ++i) win.push_back(a.degree(t[static_cast<size_t>(i)]));
      exp += tau(win);
    }
    emit(tgt, op.mat, s, slots, sgn(exp, a.field));
  }
  return op;
}

SparseOperator suspension(const Cochain& d, const GroupAction& act, int g, int n,
                          const SignConvention& /*conv*/) {
  const DGAlgebra& a = *d.algebra;
  int ar = d.arity;
  ChainSpace src{&a, g, n, true};
  ChainSpace tgt{&a, g, std::max(n - ar + 2, 0), true};
  SparseOperator op = zero_operator(src, tgt, d.map_degree - ar + 2);
  if (n < ar) return op;
  int td = d.total_degree();
  int ginv = act.group.inverse(g);
  // Double sum: for j >= 0 and k >= j + d, emit
  //   e (x) g^{-1}(a_{k+1..n}) (x) a_0 .. a_j (x) D(a_{j+1..j+d}) (x) .. a_k
  // with sign eps_{jk} = (|D|+1)P_j + Q_k(P_j + W + M + |D|) + tau(win).
  for (long s = 0; s < src.dim(); ++s) {
    auto t = src.tuple(s);
    auto e = slot_degrees(a, t);
    for (int j = 0; j + ar <= n; ++j) {
      std::vector<int> args(t.begin() + j + 1, t.begin() + j + 1 + ar);
      const SparseVec& out = d.eval(args);
      if (out.empty()) continue;
      int Pj = 0;
      for (int i = 0; i <= j; ++i) Pj += e[static_cast<size_t>(i)];
      for (int k = j + ar; k <= n; ++k) {
        int Qk = 0;
        for (int i = k + 1; i <= n; ++i) Qk += e[static_cast<size_t>(i)];
        // Koszul bookkeeping in the suspended picture: inserting the
        // suspended cochain at window j costs (|D|+1)P_j; rotating the tail
        // block past the inserted unit, the head pack, the suspended D-output
        // and the middle pack costs Q_k*(1 + P_j + |Dout| + M).
        int M = 0;
        for (int i = j + ar + 1; i <= k; ++i) M += e[static_cast<size_t>(i)];
        int W = 0;
        for (int i = j + 1; i <= j + ar; ++i) W += e[static_cast<size_t>(i)];
        int exp = (td + 1) * Pj + Qk * (Pj + W + M + td);
        {
          std::vector<int> win;
          for (int i = j + 1; i <= j + ar; ++i)
            win.push_back(a.degree(t[static_cast<size_t>(i)]));
          exp += tau(win);
        }
        std::vector<SparseVec> slots;
        slots.reserve(static_cast<size_t>(n - ar + 3));
        slots.push_back(a.unit_vec());
        for (int i = k + 1; i <= n; ++i)
          slots.push_back(act.matrix(ginv).col(t[static_cast<size_t>(i)]));
        for (int i = 0; i <= j; ++i) slots.push_back(a.basis_vec(t[static_cast<size_t>(i)]));
        slots.push_back(out);
        for (int i = j + ar + 1; i <= k; ++i)
          slots.push_back(a.basis_vec(t[static_cast<size_t>(i)]));
        emit(tgt, op.mat, s, slots, sgn(exp, a.field));
      }
    }
  }
  return op;
}

}  // namespace xhc
