#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hadlat/gf2.hpp"
#include "hadlat/hadamard.hpp"
#include "hadlat/lattice_enum.hpp"
#include "hadlat/rng.hpp"

namespace hadlat {

// Subspace dimensions admissible for a size-d certificate family: integers
// strictly inside (m/2 - d, m/2 + d), excluding 0 and m.  Ascending.
std::vector<int> case1_admissible_dims(int m, int64_t d);

// A certificate family: d linear Walsh supports with pairwise distinct
// admissible dimensions, their points, and the sum.  Distinct dimension
// multisets give distinct sums, so each family certifies one point of
// d * Had.
struct Case1Family {
  int m;
  int64_t d;
  std::vector<GF2Subspace> subspaces;  // dims ascending
  std::vector<LatticePoint> points;
  LatticePoint sum;  // level d, membership verified on construction
};

// Enumerates every family once: dimension subsets in lexicographic order,
// then an odometer over the per-dimension subspace streams (rightmost
// fastest).  Throws InfeasibleError when fewer than d dims are admissible.
class Case1FamilyStream {
 public:
  Case1FamilyStream(int m, int64_t d);

  std::optional<Case1Family> next();

 private:
  void reload_streams();
  bool advance();
  Case1Family build() const;

  int m_;
  int64_t d_;
  std::vector<int> dims_;
  std::vector<size_t> subset_;
  std::vector<SubspaceStream> streams_;
  std::vector<GF2Subspace> current_;
  bool pending_ = true;
  bool done_ = false;
};

// First `cap` families (all of them if the count is smaller).
std::vector<Case1Family> case1_enumerate_families(int m, int64_t d,
                                                  uint64_t cap);

struct Case1Count {
  BigInt exact;  // sum over admissible dim subsets of prod [m k]_2
  std::vector<int> central_dims;
  BigInt crude;  // prod 2^(k(m-k)) over the central dims, for comparison
  uint64_t crude_log2;
};

// Exact number of certificate families, which lower-bounds the point count
// of d * Had, plus the crude product bound at the most central admissible
// dimension choice.
Case1Count case1_count_lower_bound(int m, int64_t d);

inline constexpr uint64_t kDefaultFamilyBudget = uint64_t(1) << 20;

struct InjectivityReport {
  bool distinct;
  bool sums_member;
  uint64_t family_count;
  std::optional<std::pair<Case1Family, Case1Family>> collision;
};

// Enumerates every family, checks all sums pairwise distinct and members of
// d * Had.  Budget-guarded by the exact family count.
InjectivityReport case1_verify_injectivity(
    int m, int64_t d, uint64_t family_budget = kDefaultFamilyBudget);

// Axis-aligned punctured hypercube in the projected space: coordinates in
// `support` (subset of [1, 2^m), ascending) range over [-radius, radius]
// without 0, all others are 0.
struct HypercubeSpec {
  int m;
  std::vector<uint32_t> support;
  int64_t radius;
};

// One uniform sample, as the n-1 projected coordinates (index i holds
// coordinate i+1).
std::vector<int64_t> sample_hypercube_point(const HypercubeSpec& spec,
                                            SplitMix64& rng);

struct DensityEstimate {
  HypercubeSpec spec;
  int64_t d;
  uint64_t samples;
  uint64_t inside;
  double fraction;
  bool condition_holds;  // 2cD <= d^2 / (2 log2 n), checked exactly
  // 2n exp(-d^2 / (2cD)); only meaningful when the condition holds.
  std::optional<double> hoeffding_bound;
  uint64_t seed;
};

// Draws a random size-c support from [1, n), then `samples` points of the
// punctured hypercube, and measures the fraction that lands in the projected
// dilate.  Fully determined by the seed; threads only change the speed.
DensityEstimate case3_sample_density(int m, int64_t d, int64_t c,
                                     int64_t radius, uint64_t samples,
                                     uint64_t seed, unsigned threads = 1);

struct Case3Bound {
  BigInt exact;  // (1/2) C(n, c) (2D)^c
  double log2_value;
};

// Certified count once the sampled density is at least 1/2: half of
// (number of supports) * (hypercube size).  Requires the Hoeffding condition
// 2cD <= d^2 / (2 log2 n); throws PreconditionError naming it otherwise.
Case3Bound case3_lower_bound_value(int64_t n, int64_t d, int64_t c,
                                   int64_t radius);

enum class Regime { kCase1, kCase2, kCase3a, kCase3b, kGap };

std::string_view regime_name(Regime regime);

struct BoundReport {
  int64_t n;
  int64_t d;
  BigRational epsilon;
  Regime regime;
  double bound_log2;
  std::optional<BigInt> exact_bound;  // case1 / case2 only
  std::string notes;
};

// Lower bound on |d Had cap Z^n| as a function of the dilation regime:
//   d <= m/4              exact family count at d
//   m/4 <= d <= m^1.5     exact family count reused at floor(m/4)
//   m^1.5 <= d <= (nm)^(1/2-eps)   log2 bound eps d^2 / 2
//   (nm)^(1/2+eps) <= d < nm       log2 bound n (2 eps log2 d - 2)
// Dilations between the case3a and case3b windows fall back monotonically to
// the largest covered d' and are flagged in the notes.  Boundaries are
// decided by exact integer comparisons; ties go to the lower case.
// d >= n m is out of range and raises InfeasibleError.
BoundReport theorem1_bound(int64_t n, int64_t d, const BigRational& epsilon);

}  // namespace hadlat
