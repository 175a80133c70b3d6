#include "hadlat/hadamard.hpp"

#include <bit>
#include <cstdlib>

#include "hadlat/errors.hpp"

namespace hadlat {

namespace {

void check_log_dim(int m) {
  if (m < 1 || m > kMaxLogDim) {
    throw DomainError("log-dimension m must be in [1, " +
                      std::to_string(kMaxLogDim) + "], got " +
                      std::to_string(m));
  }
}

int sign_at(uint32_t a, uint32_t b) {
  return (std::popcount(a & b) & 1) ? -1 : 1;
}

}  // namespace

LatticePoint::LatticePoint(int m, std::vector<int64_t> coords, int64_t level)
    : m_(m), level_(level), coords_(std::move(coords)) {
  check_log_dim(m);
  if (coords_.size() != (size_t(1) << m)) {
    throw DomainError("point needs 2^m coordinates");
  }
}

LatticePoint LatticePoint::zero(int m, int64_t level) {
  check_log_dim(m);
  return LatticePoint(m, std::vector<int64_t>(size_t(1) << m, 0), level);
}

int64_t LatticePoint::coord(uint32_t index) const {
  if (index >= coords_.size()) throw DomainError("coordinate index out of range");
  return coords_[index];
}

LatticePoint LatticePoint::operator+(const LatticePoint& other) const {
  if (m_ != other.m_) throw DomainError("sum of points of different m");
  std::vector<int64_t> out(coords_.size());
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (__builtin_add_overflow(coords_[i], other.coords_[i], &out[i])) {
      throw OverflowError("coordinate sum overflows int64");
    }
  }
  return LatticePoint(m_, std::move(out), level_ + other.level_);
}

bool BarycentricProfile::all_nonnegative() const {
  for (int64_t x : scaled) {
    if (x < 0) return false;
  }
  return true;
}

std::vector<uint32_t> BarycentricProfile::support() const {
  std::vector<uint32_t> out;
  for (size_t b = 0; b < scaled.size(); ++b) {
    if (scaled[b] != 0) out.push_back(static_cast<uint32_t>(b));
  }
  return out;
}

int hadamard_entry(GF2Vector a, GF2Vector b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DomainError("hadamard_entry: mismatched m");
  }
  return sign_at(a.bits(), b.bits());
}

LatticePoint hadamard_column(int m, GF2Vector b) {
  if (b.ambient_dim() != m) throw DomainError("hadamard_column: mismatched m");
  size_t n = size_t(1) << m;
  std::vector<int64_t> coords(n);
  for (size_t a = 0; a < n; ++a) {
    coords[a] = sign_at(static_cast<uint32_t>(a), b.bits());
  }
  return LatticePoint(m, std::move(coords), 1);
}

BarycentricProfile fwht(const LatticePoint& v) {
  const size_t n = v.dim();
  int64_t max_abs = 0;
  for (int64_t x : v.coords()) {
    int64_t a = std::llabs(x);
    if (a > max_abs) max_abs = a;
  }
  // Butterfly stages at most double the largest magnitude, so the final
  // values stay within n * max|v|; demand that fits 62 bits.
  if (max_abs > (int64_t(1) << 62) / static_cast<int64_t>(n)) {
    throw OverflowError("walsh transform would exceed the 62-bit envelope");
  }
  std::vector<int64_t> a = v.coords();
  for (size_t len = 1; len < n; len <<= 1) {
    for (size_t i = 0; i < n; i += len << 1) {
      for (size_t j = i; j < i + len; ++j) {
        int64_t x = a[j];
        int64_t y = a[j + len];
        a[j] = x + y;
        a[j + len] = x - y;
      }
    }
  }
  return BarycentricProfile{v.log_dim(), std::move(a)};
}

bool dilate_membership(const LatticePoint& v, int64_t d) {
  if (d < 0) throw DomainError("dilation must be nonnegative");
  if (v.coord(0) != d) return false;
  return fwht(v).all_nonnegative();
}

bool projected_membership(int m, std::span<const int64_t> x, int64_t d) {
  check_log_dim(m);
  const size_t n = size_t(1) << m;
  if (x.size() != n - 1) {
    throw DomainError("projected point needs 2^m - 1 coordinates");
  }
  std::vector<int64_t> coords(n);
  coords[0] = d;
  for (size_t i = 0; i < n - 1; ++i) coords[i + 1] = x[i];
  return dilate_membership(LatticePoint(m, std::move(coords), d), d);
}

}  // namespace hadlat
