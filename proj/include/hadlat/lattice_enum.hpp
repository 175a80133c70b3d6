#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hadlat/gf2.hpp"
#include "hadlat/hadamard.hpp"

namespace hadlat {

// The two directions of the bijection between integer points of Had and
// affine subspaces of F_2^m.
//
// point_from_affine_subspace(A): the point supported on direction(A)^perp
// with v(a) = (-1)^<a, rep(A)> there, equivalently the uniform average of
// the Hadamard columns indexed by A.
LatticePoint point_from_affine_subspace(const GF2AffineSubspace& a);

// Inverse: reads the Walsh support of a point of Had and reassembles the
// coset.  Throws PreconditionError if v is not an integer point of Had, and
// InternalError if the Walsh support fails to be a uniform coset (impossible
// for members).
GF2AffineSubspace affine_subspace_from_point(const LatticePoint& v);

// All integer points of Had, one per affine subspace.
class UnitPointStream {
 public:
  explicit UnitPointStream(int m);

  std::optional<LatticePoint> next();

 private:
  AffineSubspaceStream inner_;
};

inline constexpr uint64_t kDefaultNodeBudget = uint64_t(1) << 40;

// Worst-case node estimate for the dilate DFS: prod (2d+1) over the n-1 free
// coordinates.
BigInt dilate_enum_cost(int m, int64_t d);

// Depth-first enumeration of the integer points of d * Had.  Coordinate 0 is
// pinned to d; coordinates 1..n-1 range over [-d, d] in ascending order, so
// points come out in lexicographic order of the free coordinates.  A subtree
// is cut as soon as some partial Walsh sum can no longer recover to >= 0
// (each unassigned coordinate moves any row by at most d).
class DilatePointStream {
 public:
  DilatePointStream(int m, int64_t d,
                    uint64_t node_budget = kDefaultNodeBudget);

  std::optional<LatticePoint> next();

 private:
  void shift_row_sums(size_t coord, int64_t delta);
  bool feasible(size_t remaining) const;

  int m_;
  size_t n_;
  int64_t d_;
  std::vector<int64_t> vals_;
  std::vector<int64_t> row_sums_;
  size_t level_ = 0;
  bool descend_ = true;
  bool done_ = false;
};

enum class CountMethod { kOracle, kBijection };

// Number of integer points of d * Had.  kOracle drains the DFS (any d,
// budget-guarded); kBijection evaluates the closed form and requires d = 1.
BigInt count_dilate(int m, int64_t d, CountMethod method,
                    uint64_t node_budget = kDefaultNodeBudget);

// Closed form for |Had cap Z^n|: sum over k of 2^(m-k) [m k]_2.
BigInt cor1_count_formula(int m);

struct EhrhartSample {
  int64_t d;
  BigInt count;
};

// Exact interpolation of the degree n-1 counting polynomial through n = 2^m
// distinct dilations that include d = 0.  Coefficients ascending.
std::vector<BigRational> ehrhart_interpolate(
    int m, const std::vector<EhrhartSample>& counts);

BigRational polynomial_eval(const std::vector<BigRational>& coeffs, int64_t d);

}  // namespace hadlat
