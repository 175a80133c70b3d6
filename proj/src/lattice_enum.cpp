#include "hadlat/lattice_enum.hpp"

#include <algorithm>
#include <bit>

#include "hadlat/errors.hpp"

namespace hadlat {

LatticePoint point_from_affine_subspace(const GF2AffineSubspace& a) {
  const int m = a.ambient_dim();
  const size_t n = size_t(1) << m;
  std::vector<int64_t> coords(n, 0);
  const uint32_t rep = a.rep().bits();
  // Support is the dual of the direction; signs come from the translate and
  // are independent of the representative chosen for it.
  for (GF2Vector s : orthogonal_complement(a.direction()).elements()) {
    coords[s.bits()] = (std::popcount(s.bits() & rep) & 1) ? -1 : 1;
  }
  return LatticePoint(m, std::move(coords), 1);
}

GF2AffineSubspace affine_subspace_from_point(const LatticePoint& v) {
  if (!dilate_membership(v, 1)) {
    throw PreconditionError("point is not an integer point of the polytope");
  }
  const int m = v.log_dim();
  BarycentricProfile profile = fwht(v);
  std::vector<uint32_t> support = profile.support();
  if (support.empty()) throw InternalError("member with empty walsh support");
  const uint32_t t0 = support[0];
  std::vector<GF2Vector> gens;
  gens.reserve(support.size());
  for (uint32_t t : support) gens.emplace_back(m, t ^ t0);
  GF2Subspace direction = rref_basis(m, gens);
  // The support of a member must be one uniform coset; anything else means a
  // bug upstream, not bad input.
  if (direction.size() != support.size()) {
    throw InternalError("walsh support is not a coset");
  }
  const int64_t weight = profile.scaled[t0];
  for (uint32_t t : support) {
    if (profile.scaled[t] != weight) {
      throw InternalError("walsh support is not uniform");
    }
  }
  return GF2AffineSubspace(direction, GF2Vector(m, t0));
}

UnitPointStream::UnitPointStream(int m) : inner_(m) {}

std::optional<LatticePoint> UnitPointStream::next() {
  auto a = inner_.next();
  if (!a) return std::nullopt;
  return point_from_affine_subspace(*a);
}

BigInt dilate_enum_cost(int m, int64_t d) {
  if (m < 1 || m > kMaxLogDim) throw DomainError("m out of range");
  if (d < 0) throw DomainError("dilation must be nonnegative");
  const unsigned free_coords = (unsigned(1) << m) - 1;
  return boost::multiprecision::pow(BigInt(2 * d + 1), free_coords);
}

DilatePointStream::DilatePointStream(int m, int64_t d, uint64_t node_budget)
    : m_(m), n_(size_t(1) << m), d_(d) {
  BigInt cost = dilate_enum_cost(m, d);  // validates m and d
  if (cost > node_budget) {
    throw BudgetError("estimated " + cost.str() +
                      " nodes exceeds the budget of " +
                      std::to_string(node_budget));
  }
  // Row sums stay within n*d in magnitude and the prune test adds another
  // n*d of slack.
  if (d > 0 && d > (int64_t(1) << 61) / static_cast<int64_t>(n_)) {
    throw OverflowError("dilation too large for exact row bookkeeping");
  }
  vals_.assign(n_, 0);
  vals_[0] = d;
  row_sums_.assign(n_, d);
}

void DilatePointStream::shift_row_sums(size_t coord, int64_t delta) {
  if (delta == 0) return;
  const uint32_t a = static_cast<uint32_t>(coord);
  for (size_t b = 0; b < n_; ++b) {
    row_sums_[b] += (std::popcount(a & static_cast<uint32_t>(b)) & 1)
                        ? -delta
                        : delta;
  }
}

bool DilatePointStream::feasible(size_t remaining) const {
  const int64_t slack = static_cast<int64_t>(remaining) * d_;
  for (int64_t s : row_sums_) {
    if (s + slack < 0) return false;
  }
  return true;
}

std::optional<LatticePoint> DilatePointStream::next() {
  if (done_) return std::nullopt;
  for (;;) {
    if (descend_) {
      ++level_;
      vals_[level_] = -d_;
      shift_row_sums(level_, -d_);
    } else {
      while (level_ >= 1 && vals_[level_] == d_) {
        shift_row_sums(level_, -vals_[level_]);
        vals_[level_] = 0;
        --level_;
      }
      if (level_ == 0) {
        done_ = true;
        return std::nullopt;
      }
      ++vals_[level_];
      shift_row_sums(level_, 1);
    }
    const size_t remaining = (n_ - 1) - level_;
    if (!feasible(remaining)) {
      descend_ = false;
      continue;
    }
    if (remaining == 0) {
      descend_ = false;
      return LatticePoint(m_, vals_, d_);
    }
    descend_ = true;
  }
}

BigInt count_dilate(int m, int64_t d, CountMethod method,
                    uint64_t node_budget) {
  switch (method) {
    case CountMethod::kBijection:
      if (d != 1) {
        throw DomainError(
            "the bijection method counts the unit dilate only (d = 1)");
      }
      return cor1_count_formula(m);
    case CountMethod::kOracle: {
      DilatePointStream stream(m, d, node_budget);
      BigInt count = 0;
      while (stream.next()) ++count;
      return count;
    }
  }
  throw DomainError("unknown counting method");
}

BigInt cor1_count_formula(int m) {
  if (m < 1 || m > kMaxLogDim) throw DomainError("m out of range");
  BigInt total = 0;
  for (int k = 0; k <= m; ++k) {
    total += (BigInt(1) << (m - k)) * gaussian_binomial(m, k);
  }
  return total;
}

std::vector<BigRational> ehrhart_interpolate(
    int m, const std::vector<EhrhartSample>& counts) {
  if (m < 1 || m > kMaxLogDim) throw DomainError("m out of range");
  const size_t n = size_t(1) << m;
  if (counts.size() != n) {
    throw DomainError("interpolation needs exactly 2^m samples");
  }
  bool has_zero = false;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i].d == 0) has_zero = true;
    for (size_t j = i + 1; j < counts.size(); ++j) {
      if (counts[i].d == counts[j].d) {
        throw DomainError("duplicate dilation value " +
                          std::to_string(counts[i].d));
      }
    }
  }
  if (!has_zero) throw DomainError("samples must include d = 0");

  // Lagrange bases, accumulated exactly.
  std::vector<BigRational> acc(n, BigRational(0));
  for (size_t i = 0; i < n; ++i) {
    std::vector<BigInt> basis{1};  // prod_{j != i} (x - d_j), ascending
    BigInt denom = 1;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      basis.push_back(0);
      for (size_t t = basis.size() - 1; t > 0; --t) {
        basis[t] = basis[t - 1] - counts[j].d * basis[t];
      }
      basis[0] *= -counts[j].d;
      denom *= BigInt(counts[i].d) - counts[j].d;
    }
    // The rational constructor rejects negative denominators.
    BigRational scale = denom < 0 ? BigRational(-counts[i].count, -denom)
                                  : BigRational(counts[i].count, denom);
    for (size_t t = 0; t < basis.size(); ++t) {
      acc[t] += scale * BigRational(basis[t]);
    }
  }
  return acc;
}

BigRational polynomial_eval(const std::vector<BigRational>& coeffs,
                            int64_t d) {
  BigRational value(0);
  for (size_t i = coeffs.size(); i-- > 0;) {
    value = value * d + coeffs[i];
  }
  return value;
}

}  // namespace hadlat
