#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "hadlat/bigint.hpp"

namespace hadlat {

// Everything indexed by F_2^m is kept dense in memory, so m is capped where
// 2^m int64 coordinates still fit comfortably.
inline constexpr int kMaxLogDim = 24;

// Element of F_2^m.  Bit i of the word is the i-th coordinate; the word value
// doubles as the coordinate index into R^n, n = 2^m.
class GF2Vector {
 public:
  GF2Vector(int m, uint32_t bits);

  int ambient_dim() const { return m_; }
  uint32_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }

  GF2Vector operator+(GF2Vector other) const;  // xor

  friend auto operator<=>(const GF2Vector&, const GF2Vector&) = default;

 private:
  int m_;
  uint32_t bits_;
};

// <a, b> over F_2 (parity of the AND).  Dimensions must match.
int dot(GF2Vector a, GF2Vector b);

// Linear subspace of F_2^m held as a reduced-row-echelon basis: each word's
// highest set bit is its pivot, pivots strictly decrease down the list, and
// every pivot bit is clear in all other words.  This representation is
// unique per subspace, so equality is word-list equality.
class GF2Subspace {
 public:
  static GF2Subspace zero(int m);
  static GF2Subspace full(int m);

  int ambient_dim() const { return m_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  uint64_t size() const { return uint64_t(1) << dim(); }

  const std::vector<uint32_t>& basis_words() const { return basis_; }
  std::vector<GF2Vector> basis() const;

  bool contains(GF2Vector v) const;

  // Canonical representative of the coset v + W: v with every pivot bit
  // eliminated.  It is the minimum element of the coset as an integer.
  GF2Vector reduce(GF2Vector v) const;

  // Element for an index in [0, 2^dim): xor of basis words selected by the
  // index bits.  elements() lists all of them in index order.
  GF2Vector element(uint64_t index) const;
  std::vector<GF2Vector> elements() const;

  // Positions in [0, m) that are not pivots, ascending.
  std::vector<int> free_positions() const;

  friend auto operator<=>(const GF2Subspace&, const GF2Subspace&) = default;

  // Basis must already be in reduced row-echelon form; used by enumeration.
  static GF2Subspace from_rref(int m, std::vector<uint32_t> rref_words);

 private:
  GF2Subspace(int m, std::vector<uint32_t> rref_words);

  int m_;
  std::vector<uint32_t> basis_;
};

// Span of arbitrary generators, reduced to the canonical RREF basis.
GF2Subspace rref_basis(int m, const std::vector<GF2Vector>& generators);

// { c : <c, w> = 0 for all w in W }.  Involution: complement twice is W.
GF2Subspace orthogonal_complement(const GF2Subspace& w);

// Minimum-value representative of b + W.
GF2Vector coset_canonical_rep(const GF2Subspace& w, GF2Vector b);

// Coset direction + rep, rep canonical (minimal).
class GF2AffineSubspace {
 public:
  GF2AffineSubspace(GF2Subspace direction, GF2Vector translate);

  int ambient_dim() const { return direction_.ambient_dim(); }
  int dim() const { return direction_.dim(); }
  uint64_t size() const { return direction_.size(); }
  const GF2Subspace& direction() const { return direction_; }
  GF2Vector rep() const;
  bool is_linear() const { return rep_ == 0; }

  bool contains(GF2Vector v) const;
  std::vector<GF2Vector> elements() const;  // rep + each direction element

  friend auto operator<=>(const GF2AffineSubspace&,
                          const GF2AffineSubspace&) = default;

 private:
  GF2Subspace direction_;
  uint32_t rep_;
};

// Gaussian binomial [m k]_2: number of k-dim subspaces of F_2^m.  Exact.
BigInt gaussian_binomial(int m, int k);

// Yields every k-dimensional subspace of F_2^m exactly once, ordered
// lexicographically by the concatenated RREF basis words.  Restartable by
// constructing a fresh stream.
class SubspaceStream {
 public:
  SubspaceStream(int m, int k);

  std::optional<GF2Subspace> next();

 private:
  bool candidate_ok(uint32_t w) const;

  int m_;
  int k_;
  std::vector<uint32_t> words_;
  bool descend_ = true;
  bool done_ = false;
};

// Yields every affine subspace of F_2^m exactly once: dimension ascending,
// directions in SubspaceStream order, representatives ascending.
class AffineSubspaceStream {
 public:
  explicit AffineSubspaceStream(int m);

  std::optional<GF2AffineSubspace> next();

 private:
  bool advance_subspace();

  int m_;
  int k_ = 0;
  SubspaceStream inner_;
  std::optional<GF2Subspace> current_;
  std::vector<int> free_positions_;
  uint64_t rep_index_ = 0;
};

}  // namespace hadlat
