#pragma once

#include <string>
#include <vector>

#include "xhc/dg_algebra.hpp"

namespace xhc {

/// Finite group given by its full multiplication table.
struct FiniteGroup {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;  // table[h][k] = index of h*k
  int identity = 0;

  int order() const { return static_cast<int>(elements.size()); }
  int mul(int h, int k) const { return table[static_cast<size_t>(h)][static_cast<size_t>(k)]; }
  int inverse(int h) const;
  std::optional<int> find(const std::string& name) const;

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric3();
};

/// Empty report iff the table is a group law.
std::vector<Violation> validate_group(const FiniteGroup& g);

struct ConjugacyClasses {
  std::vector<std::vector<int>> classes;  // each sorted; representative = front
  std::vector<int> class_of;              // element -> class index
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);
std::vector<int> centralizer(const FiniteGroup& g, int elem);

/// Grading-preserving action of a finite group on a DG algebra. rho[h] is the
/// matrix of h on the algebra basis.
struct GroupAction {
  FiniteGroup group;
  std::vector<SparseMatrix> rho;

  static GroupAction trivial(const DGAlgebra& a);
  const SparseMatrix& matrix(int h) const { return rho[static_cast<size_t>(h)]; }
};

/// Empty report iff all action axioms hold against the algebra. Throws
/// StructuralError if |G| is not invertible in the scalar field.
std::vector<Violation> validate_action(const DGAlgebra& a, const GroupAction& act);

}  // namespace xhc
