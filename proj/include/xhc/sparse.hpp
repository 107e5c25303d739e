#pragma once

#include <map>
#include <vector>

#include "xhc/scalar.hpp"

namespace xhc {

/// Sparse vector: index -> nonzero coefficient.
using SparseVec = std::map<int, Scalar>;

inline void vec_add(SparseVec& v, int i, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = v.find(i);
  if (it == v.end()) {
    v.emplace(i, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

inline void vec_axpy(SparseVec& v, const Scalar& a, const SparseVec& w) {
  if (a.is_zero()) return;
  for (const auto& [i, c] : w) vec_add(v, i, a * c);
}

/// Exact sparse matrix in column-major form.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0), field_(Field::rational()) {}
  SparseMatrix(int rows, int cols, Field f)
      : rows_(rows), cols_(cols), field_(f), data_(static_cast<size_t>(cols)) {}

  static SparseMatrix identity(int n, Field f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  void add(int r, int c, const Scalar& v);
  void set_col(int c, SparseVec v) { data_[static_cast<size_t>(c)] = std::move(v); }
  const SparseVec& col(int c) const { return data_[static_cast<size_t>(c)]; }

  SparseVec apply(const SparseVec& v) const;

  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const Scalar& a) const;
  SparseMatrix pow(int k) const;

  bool is_zero() const;
  bool operator==(const SparseMatrix& o) const;

  long nnz() const;

  /// Exact rank, deterministic (components are split off first, then each is
  /// eliminated with lowest-row-index pivoting).
  long rank() const;

  /// Reduced column echelon basis of the column space. Deterministic: columns
  /// are processed in order, pivots normalized to 1, pivot rows cleared in the
  /// other columns. Output columns are ordered by pivot row.
  SparseMatrix column_space_basis() const;

  /// Coordinates of v in the span of a reduced-column-echelon basis produced
  /// by column_space_basis(). Throws StructuralError if v is not in the span.
  SparseVec coordinates_in_basis(const SparseVec& v) const;

  /// First column (in canonical order) on which this and o differ; -1 if equal.
  int first_difference(const SparseMatrix& o) const;

 private:
  long rank_block_(const std::vector<int>& cols) const;

  int rows_, cols_;
  Field field_;
  std::vector<SparseVec> data_;
};

}  // namespace xhc
