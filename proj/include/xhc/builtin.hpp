#pragma once

#include <string>
#include <vector>

#include "xhc/chains.hpp"

namespace xhc {

/// Built-in algebras:
///   ground    k.e
///   dual      k[x]/(x^2),            |x| = 0, d = 0
///   exterior  k[x]/(x^2),            |x| = 1, d = 0
///   acyclic   k{e,x,y}, dy = x,      |x| = 0, |y| = 1, all other products 0
///   uppertri  k{e,a,b}, a^2=a, ab=b, ba=b^2=0, |a|=|b|=0   (2x2 upper
///             triangular matrices: a = E11, b = E12)
///   idem      k{e,x,y}, x^2=x, xy=yx=y, y^2=0, dy=x, |x|=0, |y|=1
///   square    k{e,x,z}, x^2=z, xz=zx=z^2=0, |x|=1, |z|=2
DGAlgebra builtin_algebra(const std::string& name, Field f);
std::vector<std::string> builtin_algebra_names();

/// Built-in groups: trivial, z2, z3, s3.
FiniteGroup builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

/// Built-in actions on a built-in algebra:
///   trivial   every element acts as the identity
///   sign      the generator of z2 negates every non-unit basis element
GroupAction builtin_action(const DGAlgebra& a, const std::string& group,
                           const std::string& action);

/// Named (algebra, action) pairs shipped as the verification corpus:
///   ground-trivial, ground-s3, dual-z2, exterior-z2, acyclic-z2, uppertri-z3
struct BuiltinPair {
  std::string name;
  DGAlgebra algebra;
  GroupAction action;
};
BuiltinPair builtin_pair(const std::string& name, Field f);
std::vector<std::string> builtin_pair_names();

}  // namespace xhc
