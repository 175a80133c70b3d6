#include "hadlat/gf2.hpp"

#include <algorithm>
#include <bit>

#include "hadlat/errors.hpp"

namespace hadlat {

namespace {

void check_log_dim(int m) {
  if (m < 1 || m > kMaxLogDim) {
    throw DomainError("ambient log-dimension m must be in [1, " +
                      std::to_string(kMaxLogDim) + "], got " +
                      std::to_string(m));
  }
}

int pivot_of(uint32_t word) { return std::bit_width(word) - 1; }

// Eliminates the pivots of `basis` from w.
uint32_t reduce_word(const std::vector<uint32_t>& basis, uint32_t w) {
  for (uint32_t b : basis) {
    if ((w >> pivot_of(b)) & 1u) w ^= b;
  }
  return w;
}

}  // namespace

GF2Vector::GF2Vector(int m, uint32_t bits) : m_(m), bits_(bits) {
  check_log_dim(m);
  if (m < 32 && (bits >> m) != 0) {
    throw DomainError("vector word does not fit in F_2^" + std::to_string(m));
  }
}

GF2Vector GF2Vector::operator+(GF2Vector other) const {
  if (m_ != other.m_) throw DomainError("xor of vectors of different m");
  return GF2Vector(m_, bits_ ^ other.bits_);
}

int dot(GF2Vector a, GF2Vector b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DomainError("dot of vectors of different m");
  }
  return std::popcount(a.bits() & b.bits()) & 1;
}

GF2Subspace::GF2Subspace(int m, std::vector<uint32_t> rref_words)
    : m_(m), basis_(std::move(rref_words)) {}

GF2Subspace GF2Subspace::from_rref(int m, std::vector<uint32_t> rref_words) {
  check_log_dim(m);
  return GF2Subspace(m, std::move(rref_words));
}

GF2Subspace GF2Subspace::zero(int m) {
  check_log_dim(m);
  return GF2Subspace(m, {});
}

GF2Subspace GF2Subspace::full(int m) {
  check_log_dim(m);
  std::vector<uint32_t> words;
  for (int i = m - 1; i >= 0; --i) words.push_back(uint32_t(1) << i);
  return GF2Subspace(m, std::move(words));
}

std::vector<GF2Vector> GF2Subspace::basis() const {
  std::vector<GF2Vector> out;
  out.reserve(basis_.size());
  for (uint32_t w : basis_) out.emplace_back(m_, w);
  return out;
}

bool GF2Subspace::contains(GF2Vector v) const {
  if (v.ambient_dim() != m_) throw DomainError("contains: mismatched m");
  return reduce_word(basis_, v.bits()) == 0;
}

GF2Vector GF2Subspace::reduce(GF2Vector v) const {
  if (v.ambient_dim() != m_) throw DomainError("reduce: mismatched m");
  return GF2Vector(m_, reduce_word(basis_, v.bits()));
}

GF2Vector GF2Subspace::element(uint64_t index) const {
  if (index >= size()) throw DomainError("subspace element index out of range");
  uint32_t w = 0;
  for (size_t j = 0; j < basis_.size(); ++j) {
    if ((index >> j) & 1u) w ^= basis_[j];
  }
  return GF2Vector(m_, w);
}

std::vector<GF2Vector> GF2Subspace::elements() const {
  std::vector<GF2Vector> out;
  out.reserve(size());
  for (uint64_t i = 0; i < size(); ++i) out.push_back(element(i));
  return out;
}

std::vector<int> GF2Subspace::free_positions() const {
  uint32_t pivots = 0;
  for (uint32_t w : basis_) pivots |= uint32_t(1) << pivot_of(w);
  std::vector<int> out;
  for (int i = 0; i < m_; ++i) {
    if (!((pivots >> i) & 1u)) out.push_back(i);
  }
  return out;
}

GF2Subspace rref_basis(int m, const std::vector<GF2Vector>& generators) {
  check_log_dim(m);
  std::vector<uint32_t> basis;  // kept sorted by decreasing pivot
  for (const GF2Vector& g : generators) {
    if (g.ambient_dim() != m) throw DomainError("rref_basis: mismatched m");
    uint32_t w = reduce_word(basis, g.bits());
    if (w == 0) continue;
    int p = pivot_of(w);
    for (uint32_t& b : basis) {  // clear the new pivot column
      if ((b >> p) & 1u) b ^= w;
    }
    auto it = std::lower_bound(basis.begin(), basis.end(), w,
                               [](uint32_t a, uint32_t b) { return a > b; });
    basis.insert(it, w);
  }
  return GF2Subspace::from_rref(m, std::move(basis));
}

GF2Subspace orthogonal_complement(const GF2Subspace& w) {
  const int m = w.ambient_dim();
  const auto& rows = w.basis_words();
  // Kernel of the RREF row matrix: one generator per free position f, with
  // bit f set and bit pivot(row) set whenever the row has bit f.
  std::vector<GF2Vector> gens;
  for (int f : w.free_positions()) {
    uint32_t v = uint32_t(1) << f;
    for (uint32_t row : rows) {
      if ((row >> f) & 1u) v |= uint32_t(1) << pivot_of(row);
    }
    gens.emplace_back(m, v);
  }
  GF2Subspace result = rref_basis(m, gens);
  if (result.dim() != m - w.dim()) {
    throw InternalError("orthogonal complement has wrong dimension");
  }
  return result;
}

GF2Vector coset_canonical_rep(const GF2Subspace& w, GF2Vector b) {
  return w.reduce(b);
}

GF2AffineSubspace::GF2AffineSubspace(GF2Subspace direction, GF2Vector translate)
    : direction_(std::move(direction)),
      rep_(direction_.reduce(translate).bits()) {}

GF2Vector GF2AffineSubspace::rep() const {
  return GF2Vector(direction_.ambient_dim(), rep_);
}

bool GF2AffineSubspace::contains(GF2Vector v) const {
  return direction_.reduce(v).bits() == rep_;
}

std::vector<GF2Vector> GF2AffineSubspace::elements() const {
  std::vector<GF2Vector> out = direction_.elements();
  for (GF2Vector& e : out) {
    e = GF2Vector(direction_.ambient_dim(), e.bits() ^ rep_);
  }
  return out;
}

BigInt gaussian_binomial(int m, int k) {
  if (m < 0 || k < 0 || k > m) {
    throw DomainError("gaussian_binomial requires 0 <= k <= m");
  }
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (BigInt(1) << (m - i)) - 1;
    den *= (BigInt(1) << (k - i)) - 1;
  }
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw InternalError("gaussian binomial division not exact");
  return q;
}

SubspaceStream::SubspaceStream(int m, int k) : m_(m), k_(k) {
  check_log_dim(m);
  if (k < 0 || k > m) throw DomainError("subspace stream requires 0 <= k <= m");
}

bool SubspaceStream::candidate_ok(uint32_t w) const {
  // words_.back() is the cell being assigned; earlier words are the prefix.
  const size_t prefix = words_.size() - 1;
  const int p = pivot_of(w);
  uint32_t prefix_or = 0;
  uint32_t pivot_mask = 0;
  for (size_t i = 0; i < prefix; ++i) {
    prefix_or |= words_[i];
    pivot_mask |= uint32_t(1) << pivot_of(words_[i]);
  }
  if ((prefix_or >> p) & 1u) return false;  // pivot column must be clear above
  if (w & pivot_mask) return false;         // and w clear at earlier pivots
  // Enough positions must stay available for the remaining pivots.
  uint32_t below = (p > 0 ? (uint32_t(1) << p) - 1 : 0) & ~(prefix_or | w);
  return std::popcount(below) >= k_ - static_cast<int>(prefix) - 1;
}

std::optional<GF2Subspace> SubspaceStream::next() {
  if (done_) return std::nullopt;
  if (k_ == 0) {
    done_ = true;
    return GF2Subspace::zero(m_);
  }
  for (;;) {
    if (descend_) {
      words_.push_back(0);  // sentinel; advanced below
      descend_ = false;
    }
    // Advance the top cell to its next valid candidate, backtracking on
    // exhaustion.  Candidates scan upward, so emission stays lexicographic.
    uint32_t w = words_.back() + 1;
    const uint32_t limit = words_.size() == 1
                               ? uint32_t(1) << m_
                               : uint32_t(1) << pivot_of(words_[words_.size() - 2]);
    bool placed = false;
    for (; w < limit; ++w) {
      if (candidate_ok(w)) {
        words_.back() = w;
        placed = true;
        break;
      }
    }
    if (!placed) {
      words_.pop_back();
      if (words_.empty()) {
        done_ = true;
        return std::nullopt;
      }
      continue;
    }
    if (static_cast<int>(words_.size()) == k_) {
      return GF2Subspace::from_rref(m_, words_);
    }
    descend_ = true;
  }
}

AffineSubspaceStream::AffineSubspaceStream(int m) : m_(m), inner_(m, 0) {
  check_log_dim(m);
  advance_subspace();
}

bool AffineSubspaceStream::advance_subspace() {
  for (;;) {
    current_ = inner_.next();
    if (current_) {
      free_positions_ = current_->free_positions();
      rep_index_ = 0;
      return true;
    }
    if (k_ == m_) return false;
    ++k_;
    inner_ = SubspaceStream(m_, k_);
  }
}

std::optional<GF2AffineSubspace> AffineSubspaceStream::next() {
  if (!current_) return std::nullopt;
  if (rep_index_ >= (uint64_t(1) << free_positions_.size())) {
    if (!advance_subspace()) return std::nullopt;
  }
  uint32_t rep = 0;
  for (size_t j = 0; j < free_positions_.size(); ++j) {
    if ((rep_index_ >> j) & 1u) rep |= uint32_t(1) << free_positions_[j];
  }
  ++rep_index_;
  return GF2AffineSubspace(*current_, GF2Vector(m_, rep));
}

}  // namespace hadlat
