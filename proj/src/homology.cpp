#include "xhc/homology.hpp"

#include <array>
#include <limits>

namespace xhc {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

// floor/ceil division by 2 for possibly negative integers
int floor_div2(int x) { return (x >= 0) ? x / 2 : -((-x + 1) / 2); }
int ceil_div2(int x) { return (x >= 0) ? (x + 1) / 2 : -((-x) / 2); }

// Allowed u-powers of the coefficient module before windowing: [lo, hi] with
// kUnbounded standing for an infinite side.
void kind_range(CoefficientW::Kind k, int& lo, int& hi) {
  lo = 0;
  hi = 0;
  switch (k) {
    case CoefficientW::Kind::Hochschild: lo = 0, hi = 0; break;
    case CoefficientW::Kind::Cyclic: lo = -kUnbounded, hi = 0; break;
    case CoefficientW::Kind::Negative: lo = 0, hi = kUnbounded; break;
    case CoefficientW::Kind::Periodic: lo = -kUnbounded, hi = kUnbounded; break;
  }
}

// Effective retained u-powers: the declared window clamped to the module.
void effective_window(const CoefficientW& w, int& lo, int& hi) {
  int klo, khi;
  kind_range(w.kind, klo, khi);
  lo = std::max(w.u_lo, klo);
  hi = std::min(w.u_hi, khi);
  if (lo > hi) throw StructuralError("mixed complex: empty u-window for coefficients " + w.name());
}

// Degree range [lo, hi] achievable by normalized chains of length n, derived
// from the basis degree bounds (a superset of the achieved degrees, which is
// all the validity analysis needs).
struct DegreeBounds {
  int head_lo = 0, head_hi = 0;   // degree range of slot 0 (full basis)
  int slot_lo = 0, slot_hi = 0;   // suspended degree range of slots >= 1
  bool have_slots = false;        // false for the ground field (no non-unit basis)
  bool nonneg = true;             // all basis degrees >= 0
};

DegreeBounds degree_bounds(const DGAlgebra& a) {
  DegreeBounds b;
  b.head_lo = b.head_hi = a.degree(0);
  for (int i = 0; i < a.dim(); ++i) {
    b.head_lo = std::min(b.head_lo, a.degree(i));
    b.head_hi = std::max(b.head_hi, a.degree(i));
    if (a.degree(i) < 0) b.nonneg = false;
    if (i == a.unit()) continue;
    int e = a.degree(i) + 1;
    if (!b.have_slots) {
      b.slot_lo = b.slot_hi = e;
      b.have_slots = true;
    } else {
      b.slot_lo = std::min(b.slot_lo, e);
      b.slot_hi = std::max(b.slot_hi, e);
    }
  }
  return b;
}

// True when the graded piece of total degree s in the truncated complex
// coincides with the untruncated one: every generator u^j (x) (chain of
// length n, degree s + 2j) allowed by the coefficient module satisfies
// n <= n_max and u_lo <= j <= u_hi. Conservative: degree feasibility is
// tested against intervals, so "false" may occasionally be pessimistic but
// "true" is always sound (for algebras concentrated in degrees >= 0).
bool piece_complete(const DegreeBounds& db, const CoefficientW& w, int n_max, int u_lo,
                    int u_hi, int s) {
  if (!db.nonneg) return false;
  int klo, khi;
  kind_range(w.kind, klo, khi);
  // Chains of length n have degree >= n, so c = s + 2j together with the
  // module cap j <= khi bounds the lengths that can appear at degree s.
  if (khi < kUnbounded) {
    int n_cap = s + 2 * khi;  // n <= c <= s + 2*khi
    for (int n = 0; n <= n_cap; ++n) {
      // u-powers j with c = s + 2j achievable at length n
      int j_lo, j_hi;
      if (n == 0) {
        j_lo = ceil_div2(db.head_lo - s);
        j_hi = floor_div2(db.head_hi - s);
      } else if (!db.have_slots) {
        continue;
      } else {
        j_lo = ceil_div2(db.head_lo + n * db.slot_lo - s);
        j_hi = floor_div2(db.head_hi + n * db.slot_hi - s);
      }
      j_lo = std::max(j_lo, klo);
      j_hi = std::min(j_hi, khi);
      if (j_lo > j_hi) continue;
      if (n > n_max) return false;
      if (j_lo < u_lo || j_hi > u_hi) return false;
    }
    return true;
  }
  // Module unbounded above in u (negative/periodic): arbitrarily long chains
  // contribute at every degree where chains exist at all, so only the
  // chain-free case can be complete.
  if (db.have_slots) return false;
  // Ground-field-like algebra: only n = 0 contributes.
  int j_lo = std::max(ceil_div2(db.head_lo - s), klo);
  int j_hi = std::min(floor_div2(db.head_hi - s), khi);
  if (j_lo > j_hi) return true;
  return j_lo >= u_lo && j_hi <= u_hi;
}

// Restriction of M (full-space matrix n_src -> n_tgt) to the column spans
// V_src, V_tgt produced by column_space_basis().
SparseMatrix restrict_to(const SparseMatrix& m, const SparseMatrix& v_src,
                         const SparseMatrix& v_tgt) {
  SparseMatrix r(v_tgt.cols(), v_src.cols(), m.field());
  for (int c = 0; c < v_src.cols(); ++c) {
    SparseVec w = m.apply(v_src.col(c));
    r.set_col(c, v_tgt.coordinates_in_basis(w));
  }
  return r;
}

int column_degree(const ChainSpace& sp, const SparseVec& col) {
  if (col.empty()) throw StructuralError("invariant basis: zero column");
  return sp.degree(col.begin()->first);
}

}  // namespace

std::string CoefficientW::name() const {
  switch (kind) {
    case Kind::Hochschild: return "hochschild";
    case Kind::Cyclic: return "cyclic";
    case Kind::Negative: return "negative";
    case Kind::Periodic: return "periodic";
  }
  return "?";
}

std::map<int, long> complex_homology(const GradedComplex& c) {
  for (const auto& [q, dq] : c.diff) {
    auto below = c.diff.find(q - 1);
    if (below == c.diff.end()) continue;
    if (below->second.cols() != dq.rows()) {
      throw StructuralError("complex_homology: dimension mismatch between degrees " +
                            std::to_string(q) + " and " + std::to_string(q - 1));
    }
    SparseMatrix comp = below->second * dq;
    if (!comp.is_zero()) {
      throw StructuralError("complex_homology: composite differential nonzero at degree " +
                            std::to_string(q));
    }
  }
  std::map<int, long> h;
  for (const auto& [q, dim] : c.dims) {
    auto out = c.diff.find(q);
    auto in = c.diff.find(q + 1);
    long r_out = (out == c.diff.end()) ? 0 : out->second.rank();
    long r_in = (in == c.diff.end()) ? 0 : in->second.rank();
    h[q] = dim - r_out - r_in;
    if (h[q] < 0) throw StructuralError("complex_homology: negative dimension at degree " +
                                        std::to_string(q));
  }
  return h;
}

GradedComplex mixed_complex(const DGAlgebra& a, const GroupAction& act, int g,
                            const CoefficientW& w, int n_max, const SignConvention& conv,
                            bool invariants) {
  int u_lo, u_hi;
  effective_window(w, u_lo, u_hi);

  // Connes' operator squares against b to 1 - theta(g^{-1}) on the twisted
  // sector, so whenever the coefficient module carries u the complex is formed
  // on the <g>-invariant subcomplex (where the cyclic identity closes). The
  // invariants flag asks for the full centralizer Z(g), which contains <g>.
  bool has_u = w.kind != CoefficientW::Kind::Hochschild;
  int g_order = 1;
  for (int k = g; k != act.group.identity; k = act.group.mul(k, g)) ++g_order;
  bool project = invariants || (has_u && g_order > 1);

  auto subgroup_projector = [&](int n) {
    if (invariants) return centralizer_projector(a, act, g, n);
    ChainSpace sp{&a, g, n, true};
    int dim = static_cast<int>(sp.dim());
    SparseMatrix p(dim, dim, a.field);
    Scalar weight = Scalar(1, a.field) / Scalar(g_order, a.field);
    int k = g;
    for (int m = 0; m < g_order; ++m, k = act.group.mul(k, g))
      p = p + sector_action_op(a, act, g, k, n).mat.scaled(weight);
    return p;
  };

  struct Block {
    ChainSpace space;
    SparseMatrix basis;      // invariant basis (empty when !project)
    std::vector<int> degree; // local index -> suspended tuple degree
    int dim = 0;
  };
  std::vector<Block> blocks;
  for (int n = 0; n <= n_max; ++n) {
    Block blk;
    blk.space = ChainSpace{&a, g, n, true};
    if (project) {
      blk.basis = subgroup_projector(n).column_space_basis();
      blk.dim = blk.basis.cols();
      for (int c = 0; c < blk.dim; ++c)
        blk.degree.push_back(column_degree(blk.space, blk.basis.col(c)));
    } else {
      blk.dim = static_cast<int>(blk.space.dim());
      for (int i = 0; i < blk.dim; ++i) blk.degree.push_back(blk.space.degree(i));
    }
    blocks.push_back(std::move(blk));
  }

  std::vector<SparseMatrix> bmat(static_cast<size_t>(n_max) + 1);
  std::vector<SparseMatrix> dmat(static_cast<size_t>(n_max) + 1);
  std::vector<SparseMatrix> Bmat(static_cast<size_t>(n_max) + 1);
  bool need_B = has_u && u_hi > u_lo;
  for (int n = 0; n <= n_max; ++n) {
    if (n >= 1) {
      SparseMatrix m = op_b_g(a, act, g, n, conv).mat;
      bmat[static_cast<size_t>(n)] =
          project ? restrict_to(m, blocks[static_cast<size_t>(n)].basis,
                                   blocks[static_cast<size_t>(n) - 1].basis)
                     : m;
    }
    SparseMatrix md = op_d(a, g, n, conv).mat;
    dmat[static_cast<size_t>(n)] =
        project ? restrict_to(md, blocks[static_cast<size_t>(n)].basis,
                                 blocks[static_cast<size_t>(n)].basis)
                   : md;
    if (need_B && n < n_max) {
      SparseMatrix mB = op_B_g(a, act, g, n, conv).mat;
      Bmat[static_cast<size_t>(n)] =
          project ? restrict_to(mB, blocks[static_cast<size_t>(n)].basis,
                                   blocks[static_cast<size_t>(n) + 1].basis)
                     : mB;
    }
  }

  // Generators (n, j, i), grouped by total degree q = deg(n,i) - 2j.
  std::map<int, std::vector<std::array<int, 3>>> gens;
  std::map<std::array<int, 3>, int> pos;
  for (int n = 0; n <= n_max; ++n) {
    for (int j = u_lo; j <= u_hi; ++j) {
      for (int i = 0; i < blocks[static_cast<size_t>(n)].dim; ++i) {
        int q = blocks[static_cast<size_t>(n)].degree[static_cast<size_t>(i)] - 2 * j;
        std::array<int, 3> gkey{n, j, i};
        pos[gkey] = static_cast<int>(gens[q].size());
        gens[q].push_back(gkey);
      }
    }
  }

  GradedComplex gc;
  for (const auto& [q, v] : gens) gc.dims[q] = static_cast<long>(v.size());

  auto row_of = [&](int n, int j, int i) { return pos.at({n, j, i}); };
  for (const auto& [q, v] : gens) {
    auto below = gens.find(q - 1);
    int rows = (below == gens.end()) ? 0 : static_cast<int>(below->second.size());
    SparseMatrix D(rows, static_cast<int>(v.size()), a.field);
    for (int c = 0; c < static_cast<int>(v.size()); ++c) {
      auto [n, j, i] = v[static_cast<size_t>(c)];
      if (n >= 1) {
        for (const auto& [r, coeff] : bmat[static_cast<size_t>(n)].col(i))
          D.add(row_of(n - 1, j, r), c, coeff);
      }
      for (const auto& [r, coeff] : dmat[static_cast<size_t>(n)].col(i))
        D.add(row_of(n, j, r), c, coeff);
      if (need_B && n < n_max && j + 1 <= u_hi) {
        for (const auto& [r, coeff] : Bmat[static_cast<size_t>(n)].col(i))
          D.add(row_of(n + 1, j + 1, r), c, coeff);
      }
    }
    gc.diff[q] = std::move(D);
  }
  return gc;
}

HomologyTable mixed_homology(const DGAlgebra& a, const GroupAction& act, int g,
                             const CoefficientW& w, int n_max, const SignConvention& conv,
                             bool invariants) {
  GradedComplex gc = mixed_complex(a, act, g, w, n_max, conv, invariants);
  HomologyTable t;
  t.sector = act.group.elements[static_cast<size_t>(g)];
  t.coefficients = w.name();
  effective_window(w, t.u_lo, t.u_hi);
  t.n_max = n_max;
  t.approximate = !w.exact();
  t.convention_hash = conv.hash();
  t.dims = complex_homology(gc);

  // Validity: degree q is reliable when the graded pieces at q-1, q, q+1 are
  // unaffected by both the chain-length cut and the u-window.
  DegreeBounds db = degree_bounds(a);
  // Scan a little past the occupied degrees: degrees with no chains at all can
  // still be reliably reported as zero when their neighborhood is complete.
  int q_min = std::min(gc.dims.empty() ? 0 : gc.dims.begin()->first, -2);
  int q_max = std::max(gc.dims.empty() ? 0 : gc.dims.rbegin()->first, n_max);
  std::vector<int> valid;
  for (int q = q_min; q <= q_max; ++q) {
    bool ok = true;
    for (int s = q - 1; s <= q + 1 && ok; ++s)
      ok = piece_complete(db, w, n_max, t.u_lo, t.u_hi, s);
    if (ok) valid.push_back(q);
  }
  // Largest contiguous run (ties broken toward lower degrees).
  t.valid_lo = 0;
  t.valid_hi = -1;
  for (size_t i = 0; i < valid.size();) {
    size_t j = i;
    while (j + 1 < valid.size() && valid[j + 1] == valid[j] + 1) ++j;
    if (static_cast<int>(j - i) > t.valid_hi - t.valid_lo) {
      t.valid_lo = valid[i];
      t.valid_hi = valid[j];
    }
    i = j + 1;
  }
  return t;
}

HomologyTable twisted_hochschild(const DGAlgebra& a, const GroupAction& act, int g,
                                 int n_max, const SignConvention& conv, bool invariants) {
  return mixed_homology(a, act, g, CoefficientW::hochschild(), n_max, conv, invariants);
}

InvariantComplex invariant_subcomplex(const DGAlgebra& a, const GroupAction& act, int g,
                                      int n_max, const SignConvention& conv) {
  InvariantComplex ic;
  for (int n = 0; n <= n_max; ++n)
    ic.basis.push_back(centralizer_projector(a, act, g, n).column_space_basis());
  ic.b.resize(static_cast<size_t>(n_max) + 1);
  ic.d.resize(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (n >= 1) {
      ic.b[static_cast<size_t>(n)] =
          restrict_to(op_b_g(a, act, g, n, conv).mat, ic.basis[static_cast<size_t>(n)],
                      ic.basis[static_cast<size_t>(n) - 1]);
    }
    ic.d[static_cast<size_t>(n)] = restrict_to(
        op_d(a, g, n, conv).mat, ic.basis[static_cast<size_t>(n)], ic.basis[static_cast<size_t>(n)]);
  }
  return ic;
}

DecompositionReport check_decomposition(const DGAlgebra& a, const GroupAction& act,
                                        int n_max, const SignConvention& conv) {
  DecompositionReport rep;
  DGAlgebra cp = crossed_product(a, act);
  GroupAction triv = GroupAction::trivial(cp);
  rep.lhs = twisted_hochschild(cp, triv, 0, n_max, conv);

  ConjugacyClasses cc = conjugacy_classes(act.group);
  for (const auto& cls : cc.classes) {
    rep.rhs.push_back(twisted_hochschild(a, act, cls.front(), n_max, conv,
                                         /*invariants=*/true));
  }

  rep.valid_lo = rep.lhs.valid_lo;
  rep.valid_hi = rep.lhs.valid_hi;
  for (const auto& t : rep.rhs) {
    rep.valid_lo = std::max(rep.valid_lo, t.valid_lo);
    rep.valid_hi = std::min(rep.valid_hi, t.valid_hi);
  }
  rep.pass = true;
  for (int q = rep.valid_lo; q <= rep.valid_hi; ++q) {
    auto it = rep.lhs.dims.find(q);
    long lhs = (it == rep.lhs.dims.end()) ? 0 : it->second;
    long rhs = 0;
    for (const auto& t : rep.rhs) {
      auto jt = t.dims.find(q);
      if (jt != t.dims.end()) rhs += jt->second;
    }
    rep.compared[q] = {lhs, rhs};
    if (lhs != rhs) rep.pass = false;
  }
  return rep;
}

std::map<int, long> classical_hochschild_oracle(const DGAlgebra& a, int n_max) {
  // Unnormalized complex A^{(x)(n+1)} with the textbook boundary
  //   b = sum_{i<n} (-1)^i (..., a_i a_{i+1}, ...) + (-1)^n (a_n a_0, a_1, ...).
  // No suspension bookkeeping; intended for trivially graded algebras.
  for (int i = 0; i < a.dim(); ++i) {
    if (a.degree(i) != 0)
      throw StructuralError("classical oracle requires a trivially graded algebra");
  }
  int dim = a.dim();
  auto space_dim = [&](int n) {
    long d = 1;
    for (int i = 0; i <= n; ++i) d *= dim;
    return d;
  };
  auto tuple_of = [&](int n, long idx) {
    std::vector<int> t(static_cast<size_t>(n) + 1);
    for (int s = n; s >= 0; --s) {
      t[static_cast<size_t>(s)] = static_cast<int>(idx % dim);
      idx /= dim;
    }
    return t;
  };
  auto index_of = [&](const std::vector<int>& t) {
    long idx = 0;
    for (int x : t) idx = idx * dim + x;
    return idx;
  };

  std::map<int, SparseMatrix> diff;  // n -> b_n : C_n -> C_{n-1}
  for (int n = 1; n <= n_max; ++n) {
    SparseMatrix m(static_cast<int>(space_dim(n - 1)), static_cast<int>(space_dim(n)), a.field);
    for (long c = 0; c < space_dim(n); ++c) {
      std::vector<int> t = tuple_of(n, c);
      for (int i = 0; i < n; ++i) {
        Scalar sgn((i % 2 == 0) ? 1 : -1, a.field);
        for (const auto& [prod, coeff] : a.mul_basis(t[static_cast<size_t>(i)],
                                                     t[static_cast<size_t>(i) + 1])) {
          std::vector<int> out;
          for (int s = 0; s <= n; ++s) {
            if (s == i) out.push_back(prod);
            else if (s != i + 1) out.push_back(t[static_cast<size_t>(s)]);
          }
          m.add(static_cast<int>(index_of(out)), static_cast<int>(c), sgn * coeff);
        }
      }
      Scalar sgn((n % 2 == 0) ? 1 : -1, a.field);
      for (const auto& [prod, coeff] : a.mul_basis(t[static_cast<size_t>(n)], t[0])) {
        std::vector<int> out{prod};
        for (int s = 1; s < n; ++s) out.push_back(t[static_cast<size_t>(s)]);
        m.add(static_cast<int>(index_of(out)), static_cast<int>(c), sgn * coeff);
      }
    }
    diff[n] = std::move(m);
  }
  GradedComplex gc;
  for (int n = 0; n <= n_max; ++n) gc.dims[n] = space_dim(n);
  for (auto& [n, m] : diff) gc.diff[n] = std::move(m);
  std::map<int, long> h = complex_homology(gc);
  // Drop degrees corrupted by the truncation.
  h.erase(n_max);
  return h;
}

}  // namespace xhc
