#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hadlat/gf2.hpp"

namespace hadlat {

// Dense integer vector indexed by F_2^m, with an advisory dilation level.
// Level is metadata carried along by constructions; equality ignores it.
class LatticePoint {
 public:
  LatticePoint(int m, std::vector<int64_t> coords, int64_t level = 0);

  static LatticePoint zero(int m, int64_t level = 0);

  int log_dim() const { return m_; }
  size_t dim() const { return coords_.size(); }
  int64_t level() const { return level_; }

  int64_t coord(uint32_t index) const;
  const std::vector<int64_t>& coords() const { return coords_; }

  LatticePoint operator+(const LatticePoint& other) const;  // levels add

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.m_ == b.m_ && a.coords_ == b.coords_;
  }

 private:
  int m_;
  int64_t level_;
  std::vector<int64_t> coords_;
};

// Scaled barycentric coordinates of a point v: scaled[b] = (H v)(b), which is
// n times the weight of vertex column b.  Exact integers throughout.
struct BarycentricProfile {
  int m;
  std::vector<int64_t> scaled;

  bool all_nonnegative() const;
  std::vector<uint32_t> support() const;  // indices with scaled != 0
};

// Entry H(a, b) = (-1)^<a,b> in {-1, +1}.
int hadamard_entry(GF2Vector a, GF2Vector b);

// Column b of H as a point (a vertex of the polytope), level 1.
LatticePoint hadamard_column(int m, GF2Vector b);

// Exact Walsh-Hadamard transform of v (natural index order).  H is symmetric
// and H H = n I, so applying it twice scales by n.  Throws OverflowError when
// n * max|coord| could leave the 62-bit envelope.
BarycentricProfile fwht(const LatticePoint& v);

// v lies in d * Had  iff  v(0) = d and every Walsh coefficient of v is >= 0.
bool dilate_membership(const LatticePoint& v, int64_t d);

// Membership for a point of the projection that deletes coordinate 0: x has
// n - 1 entries for coordinates 1..n-1 and is lifted with coordinate 0 = d.
bool projected_membership(int m, std::span<const int64_t> x, int64_t d);

}  // namespace hadlat
