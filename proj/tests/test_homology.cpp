#include <doctest.h>

#include "xhc/builtin.hpp"
#include "xhc/homology.hpp"

using namespace xhc;

namespace {
const SignConvention kConv = SignConvention{};  // pinned defaults

long dim_at(const HomologyTable& t, int q) {
  auto it = t.dims.find(q);
  return it == t.dims.end() ? 0 : it->second;
}
}  // namespace

TEST_CASE("complex_homology: zero differentials give the chain dimensions") {
  GradedComplex c;
  c.dims = {{0, 3}, {1, 5}, {2, 2}};
  c.diff[1] = SparseMatrix(3, 5, Field::rational());
  c.diff[2] = SparseMatrix(5, 2, Field::rational());
  auto h = complex_homology(c);
  CHECK(h[0] == 3);
  CHECK(h[1] == 5);
  CHECK(h[2] == 2);
}

TEST_CASE("complex_homology: two-term identity complex is acyclic") {
  GradedComplex c;
  c.dims = {{0, 1}, {1, 1}};
  c.diff[1] = SparseMatrix::identity(1, Field::rational());
  auto h = complex_homology(c);
  CHECK(h[0] == 0);
  CHECK(h[1] == 0);
}

TEST_CASE("complex_homology: rejects a non-complex with a witness degree") {
  GradedComplex c;
  c.dims = {{0, 1}, {1, 1}, {2, 1}};
  c.diff[1] = SparseMatrix::identity(1, Field::rational());
  c.diff[2] = SparseMatrix::identity(1, Field::rational());
  CHECK_THROWS_AS(complex_homology(c), StructuralError);
}

TEST_CASE("ground field: Hochschild homology is k in degree 0") {
  auto pr = builtin_pair("ground-trivial", Field::rational());
  DGAlgebra& a = pr.algebra;
  GroupAction& act = pr.action;
  HomologyTable t = twisted_hochschild(a, act, 0, 4, kConv);
  CHECK(dim_at(t, 0) == 1);
  for (int q = 1; q <= 4; ++q) CHECK(dim_at(t, q) == 0);
  CHECK(t.valid_lo <= 0);
  CHECK(t.valid_hi >= 3);
  CHECK_FALSE(t.approximate);
}

TEST_CASE("dual numbers, trivial group: engine matches the classical-sign oracle") {
  DGAlgebra a = builtin_algebra("dual", Field::rational());
  GroupAction act = GroupAction::trivial(a);
  int n_max = 5;
  HomologyTable t = twisted_hochschild(a, act, 0, n_max, kConv);
  auto oracle = classical_hochschild_oracle(a, n_max);
  // Trivially graded: suspended total degree equals the chain length n.
  for (int q = 0; q <= n_max - 1 && q <= t.valid_hi; ++q) {
    CAPTURE(q);
    CHECK(dim_at(t, q) == oracle.at(q));
  }
  CHECK(t.valid_hi >= n_max - 1);
}

TEST_CASE("exterior algebra, trivial group: engine matches the classical-sign oracle") {
  DGAlgebra a = builtin_algebra("exterior", Field::rational());
  GroupAction act = GroupAction::trivial(a);
  // The suspended grading of Lambda(x) with |x| = 1 doubles: chains of length n
  // land in degrees >= n, so compare against the oracle only via the total
  // dimension in the shared window of the *trivially graded* reading. Use the
  // dual-numbers-style degree collapse instead: both gradings agree on total
  // dimension per chain length for b-only complexes of trivially graded
  // algebras; Lambda(x) with |x| = 1 is NOT trivially graded, so the oracle
  // refuses it.
  CHECK_THROWS_AS(classical_hochschild_oracle(a, 3), StructuralError);
  // The uppertriangular algebra is trivially graded; use it for the second
  // oracle comparison.
  DGAlgebra u = builtin_algebra("uppertri", Field::rational());
  GroupAction uact = GroupAction::trivial(u);
  HomologyTable t = twisted_hochschild(u, uact, 0, 4, kConv);
  auto oracle = classical_hochschild_oracle(u, 4);
  for (int q = 0; q <= 3 && q <= t.valid_hi; ++q) {
    CAPTURE(q);
    CHECK(dim_at(t, q) == oracle.at(q));
  }
}

TEST_CASE("acyclic DG algebra is quasi-isomorphic to the ground field") {
  DGAlgebra ac = builtin_algebra("acyclic", Field::rational());
  GroupAction act_ac = GroupAction::trivial(ac);
  auto prg = builtin_pair("ground-trivial", Field::rational());
  DGAlgebra& gr = prg.algebra;
  GroupAction& act_gr = prg.action;
  HomologyTable ta = twisted_hochschild(ac, act_ac, 0, 4, kConv);
  HomologyTable tg = twisted_hochschild(gr, act_gr, 0, 4, kConv);
  int hi = std::min(ta.valid_hi, tg.valid_hi);
  CHECK(hi >= 2);
  for (int q = std::max(ta.valid_lo, tg.valid_lo); q <= hi; ++q) {
    CAPTURE(q);
    CHECK(dim_at(ta, q) == dim_at(tg, q));
  }
}

TEST_CASE("mixed homology with hochschild coefficients equals twisted_hochschild") {
  auto pr = builtin_pair("dual-z2", Field::rational());
  DGAlgebra& a = pr.algebra;
  GroupAction& act = pr.action;
  for (int g = 0; g < act.group.order(); ++g) {
    HomologyTable th = twisted_hochschild(a, act, g, 3, kConv);
    HomologyTable tm = mixed_homology(a, act, g, CoefficientW::hochschild(), 3, kConv);
    CHECK(th.dims == tm.dims);
    CHECK(th.valid_lo == tm.valid_lo);
    CHECK(th.valid_hi == tm.valid_hi);
  }
}

TEST_CASE("cyclic homology of the ground field: 1,0,1,0,...") {
  auto pr = builtin_pair("ground-trivial", Field::rational());
  DGAlgebra& a = pr.algebra;
  GroupAction& act = pr.action;
  HomologyTable t = mixed_homology(a, act, 0, CoefficientW::cyclic(-3), 4, kConv);
  CHECK(t.approximate);
  for (int q = 0; q <= t.valid_hi; ++q) {
    CAPTURE(q);
    CHECK(dim_at(t, q) == (q % 2 == 0 ? 1 : 0));
  }
  CHECK(t.valid_hi >= 3);
}

TEST_CASE("enlarging the u-window never changes in-window entries") {
  auto pr = builtin_pair("exterior-z2", Field::rational());
  DGAlgebra& a = pr.algebra;
  GroupAction& act = pr.action;
  for (int g = 0; g < act.group.order(); ++g) {
    HomologyTable small = mixed_homology(a, act, g, CoefficientW::cyclic(-2), 4, kConv);
    HomologyTable big = mixed_homology(a, act, g, CoefficientW::cyclic(-5), 4, kConv);
    for (int q = small.valid_lo; q <= small.valid_hi; ++q) {
      CAPTURE(g);
      CAPTURE(q);
      CHECK(dim_at(small, q) == dim_at(big, q));
    }
  }
}

TEST_CASE("negative/periodic coefficients: windowed approximation, empty window rejected") {
  auto pr = builtin_pair("ground-trivial", Field::rational());
  DGAlgebra& a = pr.algebra;
  GroupAction& act = pr.action;
  HomologyTable t = mixed_homology(a, act, 0, CoefficientW::negative(3), 4, kConv);
  CHECK(t.approximate);
  for (int q = t.valid_lo; q <= t.valid_hi; ++q) {
    CAPTURE(q);
    // HC^- of the ground field: k in every even non-positive degree.
    CHECK(dim_at(t, q) == ((q <= 0 && q % 2 == 0) ? 1 : 0));
  }
  CoefficientW bad = CoefficientW::cyclic(5);  // forces an empty window
  bad.u_lo = 5;
  CHECK_THROWS_AS(mixed_homology(a, act, 0, bad, 3, kConv), StructuralError);
}

TEST_CASE("invariant subcomplex: trivial group gives the full complex") {
  auto pr = builtin_pair("ground-trivial", Field::rational());
  DGAlgebra& a = pr.algebra;
  GroupAction& act = pr.action;
  InvariantComplex ic = invariant_subcomplex(a, act, 0, 3, kConv);
  for (int n = 0; n <= 3; ++n) {
    ChainSpace sp{&a, 0, n, true};
    CHECK(ic.basis[static_cast<size_t>(n)].cols() == sp.dim());
  }
}

TEST_CASE("invariant subcomplex of (Lambda(x), Z/2): rank 1 per chain length") {
  auto pr = builtin_pair("exterior-z2", Field::rational());
  DGAlgebra& a = pr.algebra;
  GroupAction& act = pr.action;
  int s = 1;  // the sign involution x -> -x
  for (int n = 0; n <= 4; ++n) {
    // Tuples are (slot 0 in {e,x}, slots >= 1 forced to x); the involution acts
    // by (-1)^{number of x entries}, so exactly one parity class survives.
    SparseMatrix p = centralizer_projector(a, act, act.group.identity, n);
    CHECK(p.column_space_basis().cols() == 1);
    SparseMatrix ps = centralizer_projector(a, act, s, n);
    CHECK(ps.column_space_basis().cols() == 1);
  }
}

TEST_CASE("decomposition: trivial group is an identity check") {
  auto pr = builtin_pair("ground-trivial", Field::rational());
  DGAlgebra& a = pr.algebra;
  GroupAction& act = pr.action;
  DecompositionReport rep = check_decomposition(a, act, 3, kConv);
  CHECK(rep.pass);
  CHECK(rep.valid_hi >= 2);
}

TEST_CASE("decomposition theorem at desk scale: exterior and dual numbers with Z/2") {
  for (const char* pair : {"exterior-z2", "dual-z2"}) {
    CAPTURE(pair);
    auto pr = builtin_pair(pair, Field::rational());
    DGAlgebra& a = pr.algebra;
    GroupAction& act = pr.action;
    DecompositionReport rep = check_decomposition(a, act, 3, kConv);
    CHECK(rep.pass);
    CHECK(rep.valid_hi >= rep.valid_lo);
    for (const auto& [q, lr] : rep.compared) {
      CAPTURE(q);
      CHECK(lr.first == lr.second);
    }
  }
}
