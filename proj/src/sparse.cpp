#include "xhc/sparse.hpp"

#include <numeric>

namespace xhc {

SparseMatrix SparseMatrix::identity(int n, Field f) {
  SparseMatrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.add(i, i, Scalar::one(f));
  return m;
}

void SparseMatrix::add(int r, int c, const Scalar& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw StructuralError("matrix index out of range");
  vec_add(data_[static_cast<size_t>(c)], r, v);
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [j, c] : v) {
    if (j < 0 || j >= cols_) throw StructuralError("vector index out of range");
    vec_axpy(out, c, data_[static_cast<size_t>(j)]);
  }
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw StructuralError("matrix shape mismatch in product");
  SparseMatrix out(rows_, o.cols_, field_);
  for (int j = 0; j < o.cols_; ++j) out.data_[static_cast<size_t>(j)] = apply(o.col(j));
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("matrix shape mismatch in sum");
  SparseMatrix out = *this;
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, c] : o.col(j)) vec_add(out.data_[static_cast<size_t>(j)], i, c);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  return *this + o.scaled(-Scalar::one(field_));
}

SparseMatrix SparseMatrix::scaled(const Scalar& a) const {
  SparseMatrix out(rows_, cols_, field_);
  if (a.is_zero()) return out;
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, c] : col(j)) out.data_[static_cast<size_t>(j)].emplace(i, c * a);
  return out;
}

SparseMatrix SparseMatrix::pow(int k) const {
  if (rows_ != cols_) throw StructuralError("pow of non-square matrix");
  SparseMatrix acc = identity(rows_, field_);
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : data_)
    if (!c.empty()) return false;
  return true;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

int SparseMatrix::first_difference(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return 0;
  for (int j = 0; j < cols_; ++j)
    if (col(j) != o.col(j)) return j;
  return -1;
}

long SparseMatrix::nnz() const {
  long n = 0;
  for (const auto& c : data_) n += static_cast<long>(c.size());
  return n;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

long SparseMatrix::rank_block_(const std::vector<int>& block) const {
  // Column elimination: pivots keyed by row index, pivot columns normalized.
  std::map<int, SparseVec> pivots;
  long rank = 0;
  for (int j : block) {
    SparseVec v = col(j);
    while (!v.empty()) {
      int r = v.begin()->first;
      auto it = pivots.find(r);
      if (it == pivots.end()) {
        Scalar inv = v.begin()->second.inverse();
        SparseVec norm;
        for (const auto& [i, c] : v) norm.emplace(i, c * inv);
        pivots.emplace(r, std::move(norm));
        ++rank;
        break;
      }
      Scalar coeff = -v.begin()->second;
      vec_axpy(v, coeff, it->second);
    }
  }
  return rank;
}

long SparseMatrix::rank() const {
  // Split into connected components of the bipartite support graph first;
  // boundary operators of monomial-type algebras fall apart into many tiny
  // blocks and eliminate in near-linear time.
  UnionFind uf(rows_ + cols_);
  for (int j = 0; j < cols_; ++j) {
    const auto& c = col(j);
    if (c.empty()) continue;
    int first = c.begin()->first;
    for (const auto& [i, s] : c) uf.unite(first, i);
    uf.unite(first, rows_ + j);
  }
  std::map<int, std::vector<int>> blocks;
  for (int j = 0; j < cols_; ++j) {
    if (col(j).empty()) continue;
    blocks[uf.find(rows_ + j)].push_back(j);
  }
  long rank = 0;
  for (const auto& [root, cols] : blocks) rank += rank_block_(cols);
  return rank;
}

SparseMatrix SparseMatrix::column_space_basis() const {
  // Reduced column echelon form, deterministic.
  std::map<int, SparseVec> pivots;  // pivot row -> normalized column
  for (int j = 0; j < cols_; ++j) {
    SparseVec v = col(j);
    while (!v.empty()) {
      int r = v.begin()->first;
      auto it = pivots.find(r);
      if (it == pivots.end()) break;
      Scalar coeff = -v.begin()->second;
      vec_axpy(v, coeff, it->second);
    }
    if (v.empty()) continue;
    Scalar inv = v.begin()->second.inverse();
    SparseVec norm;
    for (const auto& [i, c] : v) norm.emplace(i, c * inv);
    int r = norm.begin()->first;
    // Clear this pivot row from previously accepted columns.
    for (auto& [pr, pc] : pivots) {
      auto hit = pc.find(r);
      if (hit == pc.end()) continue;
      Scalar coeff = -hit->second;
      vec_axpy(pc, coeff, norm);
    }
    pivots.emplace(r, std::move(norm));
  }
  SparseMatrix out(rows_, static_cast<int>(pivots.size()), field_);
  int j = 0;
  for (auto& [r, c] : pivots) out.data_[static_cast<size_t>(j++)] = std::move(c);
  return out;
}

SparseVec SparseMatrix::coordinates_in_basis(const SparseVec& v) const {
  SparseVec residual = v;
  SparseVec coords;
  for (int j = 0; j < cols_; ++j) {
    const SparseVec& b = col(j);
    if (b.empty()) continue;
    int pivot_row = b.begin()->first;
    auto it = residual.find(pivot_row);
    if (it == residual.end()) continue;
    Scalar c = it->second;
    vec_add(coords, j, c);
    vec_axpy(residual, -c, b);
  }
  if (!residual.empty()) throw StructuralError("vector not in span of basis");
  return coords;
}

}  // namespace xhc
