#include "hadlat/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <thread>

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

}  // namespace

std::vector<int> case1_admissible_dims(int m, int64_t d) {
  check_log_dim(m);
  if (d < 0) throw DomainError("family size must be nonnegative");
  std::vector<int> dims;
  for (int k = 1; k <= m - 1; ++k) {
    // m/2 - d < k < m/2 + d, both strict, decided in integers.
    if (2 * k > m - 2 * d && 2 * k < m + 2 * d) dims.push_back(k);
  }
  return dims;
}

Case1FamilyStream::Case1FamilyStream(int m, int64_t d)
    : m_(m), d_(d), dims_(case1_admissible_dims(m, d)) {
  if (static_cast<int64_t>(dims_.size()) < d) {
    throw InfeasibleError(
        "admissible dimension window holds " + std::to_string(dims_.size()) +
        " dims, fewer than the family size " + std::to_string(d));
  }
  subset_.resize(static_cast<size_t>(d));
  std::iota(subset_.begin(), subset_.end(), size_t{0});
  if (d > 0) reload_streams();
}

void Case1FamilyStream::reload_streams() {
  streams_.clear();
  current_.clear();
  for (size_t idx : subset_) {
    streams_.emplace_back(m_, dims_[idx]);
    current_.push_back(*streams_.back().next());  // [m k]_2 >= 1 always
  }
}

bool Case1FamilyStream::advance() {
  // Odometer over the subspace streams, rightmost fastest; when every
  // position is exhausted, step to the next dimension subset.
  for (size_t i = subset_.size(); i-- > 0;) {
    if (auto s = streams_[i].next()) {
      current_[i] = std::move(*s);
      for (size_t j = i + 1; j < subset_.size(); ++j) {
        streams_[j] = SubspaceStream(m_, dims_[subset_[j]]);
        current_[j] = *streams_[j].next();
      }
      return true;
    }
  }
  // Next lexicographic combination of subset_ within [0, dims_.size()).
  const size_t k = subset_.size();
  const size_t n = dims_.size();
  size_t i = k;
  while (i-- > 0) {
    if (subset_[i] != i + n - k) {
      ++subset_[i];
      for (size_t j = i + 1; j < k; ++j) subset_[j] = subset_[j - 1] + 1;
      reload_streams();
      return true;
    }
  }
  return false;
}

Case1Family Case1FamilyStream::build() const {
  Case1Family family{m_, d_, current_, {}, LatticePoint::zero(m_)};
  LatticePoint sum = LatticePoint::zero(m_);
  for (const GF2Subspace& t : current_) {
    LatticePoint v =
        point_from_affine_subspace(GF2AffineSubspace(t, GF2Vector(m_, 0)));
    sum = sum + v;
    family.points.push_back(std::move(v));
  }
  family.sum = std::move(sum);
  if (!dilate_membership(family.sum, d_)) {
    throw InternalError("certificate family sum escaped the dilate");
  }
  return family;
}

std::optional<Case1Family> Case1FamilyStream::next() {
  if (done_) return std::nullopt;
  if (d_ == 0) {  // the empty family, once
    done_ = true;
    return Case1Family{m_, 0, {}, {}, LatticePoint::zero(m_)};
  }
  if (!pending_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  pending_ = false;
  return build();
}

std::vector<Case1Family> case1_enumerate_families(int m, int64_t d,
                                                  uint64_t cap) {
  Case1FamilyStream stream(m, d);
  std::vector<Case1Family> out;
  while (out.size() < cap) {
    auto f = stream.next();
    if (!f) break;
    out.push_back(std::move(*f));
  }
  return out;
}

Case1Count case1_count_lower_bound(int m, int64_t d) {
  std::vector<int> dims = case1_admissible_dims(m, d);
  if (static_cast<int64_t>(dims.size()) < d) {
    throw InfeasibleError(
        "admissible dimension window holds " + std::to_string(dims.size()) +
        " dims, fewer than the family size " + std::to_string(d));
  }
  const size_t k = static_cast<size_t>(d);
  std::vector<BigInt> gb(dims.size());
  for (size_t i = 0; i < dims.size(); ++i) gb[i] = gaussian_binomial(m, dims[i]);

  // Sum of products over all size-d subsets of the admissible dims.
  BigInt exact = 0;
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), size_t{0});
  if (k == 0) {
    exact = 1;
  } else {
    for (;;) {
      BigInt prod = 1;
      for (size_t i : idx) prod *= gb[i];
      exact += prod;
      size_t i = k;
      bool more = false;
      while (i-- > 0) {
        if (idx[i] != i + dims.size() - k) {
          ++idx[i];
          for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
          more = true;
          break;
        }
      }
      if (!more) break;
    }
  }

  // Central dimension choice: closest to m/2, ties to the smaller dim.
  std::vector<int> by_center = dims;
  std::stable_sort(by_center.begin(), by_center.end(), [m](int a, int b) {
    int da = std::abs(2 * a - m);
    int db = std::abs(2 * b - m);
    return da != db ? da < db : a < b;
  });
  std::vector<int> central(by_center.begin(), by_center.begin() + k);
  std::sort(central.begin(), central.end());
  uint64_t crude_log2 = 0;
  for (int kk : central) {
    crude_log2 += static_cast<uint64_t>(kk) * static_cast<uint64_t>(m - kk);
  }
  return Case1Count{exact, central, BigInt(1) << crude_log2, crude_log2};
}

InjectivityReport case1_verify_injectivity(int m, int64_t d,
                                           uint64_t family_budget) {
  BigInt total = case1_count_lower_bound(m, d).exact;
  if (total > family_budget) {
    throw BudgetError("family count " + total.str() +
                      " exceeds the budget of " +
                      std::to_string(family_budget));
  }
  std::vector<Case1Family> families =
      case1_enumerate_families(m, d, total.convert_to<uint64_t>());
  if (BigInt(families.size()) != total) {
    throw InternalError("family stream disagrees with the closed-form count");
  }

  InjectivityReport report{true, true, families.size(), std::nullopt};
  for (const Case1Family& f : families) {
    if (!dilate_membership(f.sum, d)) {
      report.sums_member = false;
      break;
    }
  }
  std::vector<size_t> order(families.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return families[a].sum.coords() < families[b].sum.coords();
  });
  for (size_t i = 1; i < order.size(); ++i) {
    if (families[order[i - 1]].sum == families[order[i]].sum) {
      report.distinct = false;
      report.collision = {families[order[i - 1]], families[order[i]]};
      break;
    }
  }
  return report;
}

std::vector<int64_t> sample_hypercube_point(const HypercubeSpec& spec,
                                            SplitMix64& rng) {
  check_log_dim(spec.m);
  const size_t n = size_t(1) << spec.m;
  if (spec.radius < 1) throw DomainError("hypercube radius must be >= 1");
  std::vector<int64_t> x(n - 1, 0);
  const uint64_t two_d = 2 * static_cast<uint64_t>(spec.radius);
  for (uint32_t s : spec.support) {
    if (s < 1 || s >= n) throw DomainError("support index out of [1, n)");
    // Uniform over [-D, -1] u [1, D]: one draw, no rejection.
    const int64_t r = static_cast<int64_t>(rng.next_below(two_d));
    x[s - 1] = r < spec.radius ? r - spec.radius : r - spec.radius + 1;
  }
  return x;
}

DensityEstimate case3_sample_density(int m, int64_t d, int64_t c,
                                     int64_t radius, uint64_t samples,
                                     uint64_t seed, unsigned threads) {
  check_log_dim(m);
  const int64_t n = int64_t(1) << m;
  if (d < 0) throw DomainError("dilation must be nonnegative");
  if (c < 1 || c >= n) throw DomainError("support size must be in [1, n)");
  if (radius < 1) throw DomainError("hypercube radius must be >= 1");
  if (samples == 0) throw DomainError("need at least one sample");

  SplitMix64 master(seed);
  // Partial Fisher-Yates over [1, n): the first c slots become the support.
  std::vector<uint32_t> pool(n - 1);
  std::iota(pool.begin(), pool.end(), uint32_t{1});
  for (int64_t i = 0; i < c; ++i) {
    const uint64_t j = i + master.next_below(uint64_t(n - 1 - i));
    std::swap(pool[i], pool[j]);
  }
  HypercubeSpec spec{m, {pool.begin(), pool.begin() + c}, radius};
  std::sort(spec.support.begin(), spec.support.end());

  // Fixed-size batches with seeds split off the master stream make the
  // result a function of the seed alone, whatever the thread count.
  constexpr uint64_t kBatch = 4096;
  const uint64_t num_batches = (samples + kBatch - 1) / kBatch;
  std::vector<uint64_t> batch_inside(num_batches, 0);
  auto run_batch = [&](uint64_t index) {
    SplitMix64 rng = master.split(index);
    const uint64_t begin = index * kBatch;
    const uint64_t end = std::min(begin + kBatch, samples);
    uint64_t inside = 0;
    for (uint64_t s = begin; s < end; ++s) {
      std::vector<int64_t> x = sample_hypercube_point(spec, rng);
      if (projected_membership(m, x, d)) ++inside;
    }
    batch_inside[index] = inside;
  };

  if (threads <= 1 || num_batches <= 1) {
    for (uint64_t b = 0; b < num_batches; ++b) run_batch(b);
  } else {
    const unsigned workers =
        std::min<uint64_t>(threads, num_batches);
    std::vector<std::thread> pool_threads;
    pool_threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool_threads.emplace_back([&, w]() {
        for (uint64_t b = w; b < num_batches; b += workers) run_batch(b);
      });
    }
    for (auto& t : pool_threads) t.join();
  }
  uint64_t inside = 0;
  for (uint64_t b : batch_inside) inside += b;

  DensityEstimate est{std::move(spec), d,       samples, inside,
                      0.0,             false,   std::nullopt, seed};
  est.fraction = static_cast<double>(inside) / static_cast<double>(samples);
  // 2cD <= d^2 / (2 log2 n), exactly: 4cDm <= d^2.
  est.condition_holds = BigInt(4) * c * radius * m <= BigInt(d) * d;
  if (est.condition_holds) {
    est.hoeffding_bound =
        2.0 * static_cast<double>(n) *
        std::exp(-static_cast<double>(d) * static_cast<double>(d) /
                 (2.0 * static_cast<double>(c) * static_cast<double>(radius)));
  }
  return est;
}

Case3Bound case3_lower_bound_value(int64_t n, int64_t d, int64_t c,
                                   int64_t radius) {
  if (n < 2) throw DomainError("ambient dimension must be >= 2");
  if (c < 1 || c >= n) throw DomainError("support size must be in [1, n)");
  if (radius < 1) throw DomainError("hypercube radius must be >= 1");
  if ((n & (n - 1)) != 0) throw DomainError("n must be a power of two");
  const int m = std::bit_width(static_cast<uint64_t>(n)) - 1;
  if (BigInt(4) * c * radius * m > BigInt(d) * d) {
    throw PreconditionError(
        "2cD <= d^2/(2 log2 n) fails: 4*" + std::to_string(c) + "*" +
        std::to_string(radius) + "*" + std::to_string(m) + " > " +
        std::to_string(d) + "^2");
  }
  BigInt exact = binomial(static_cast<uint64_t>(n), static_cast<uint64_t>(c)) *
                 boost::multiprecision::pow(BigInt(2 * radius),
                                            static_cast<unsigned>(c));
  exact >>= 1;  // (2D)^c is even for c >= 1
  return Case3Bound{exact, log2_value(exact)};
}

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::kCase1:
      return "case1";
    case Regime::kCase2:
      return "case2";
    case Regime::kCase3a:
      return "case3a";
    case Regime::kCase3b:
      return "case3b";
    case Regime::kGap:
      return "gap";
  }
  return "unknown";
}

namespace {

struct RegimeBound {
  double log2_value;
  std::optional<BigInt> exact;
  std::string note;
};

Regime classify(int64_t d, int m, const BigInt& nm, const BigInt& p,
                const BigInt& q) {
  if (4 * d <= m) return Regime::kCase1;
  if (BigInt(d) * d <= BigInt(m) * m * m) return Regime::kCase2;
  const unsigned two_q = 2 * q.convert_to<unsigned>();
  const BigInt d_pow = boost::multiprecision::pow(BigInt(d), two_q);
  const unsigned lo_exp = (q - 2 * p).convert_to<unsigned>();
  if (d_pow <= boost::multiprecision::pow(nm, lo_exp)) return Regime::kCase3a;
  const unsigned hi_exp = (q + 2 * p).convert_to<unsigned>();
  if (d_pow >= boost::multiprecision::pow(nm, hi_exp)) return Regime::kCase3b;
  return Regime::kGap;
}

RegimeBound bound_in_regime(Regime regime, int64_t n, int m, int64_t d,
                            const BigRational& eps) {
  switch (regime) {
    case Regime::kCase1: {
      BigInt exact = case1_count_lower_bound(m, d).exact;
      return {log2_value(exact), exact,
              "exact certificate family count at d"};
    }
    case Regime::kCase2: {
      const int64_t d_prime = m / 4;
      BigInt exact = case1_count_lower_bound(m, d_prime).exact;
      return {log2_value(exact), exact,
              "exact certificate family count reused at d'=" +
                  std::to_string(d_prime) + ", monotone in d"};
    }
    case Regime::kCase3a: {
      // log2 of n^(eps d^2 / (2 log2 n)) collapses to eps d^2 / 2.
      BigRational value = eps * d * d / 2;
      return {rational_to_double(value), std::nullopt,
              "density bound n^(eps*d^2/(2*log2(n)))"};
    }
    case Regime::kCase3b: {
      // log2 of (d^(2 eps) / 4)^n.
      double value = static_cast<double>(n) *
                     (2.0 * rational_to_double(eps) *
                          std::log2(static_cast<double>(d)) -
                      2.0);
      return {value, std::nullopt, "density bound (d^(2*eps)/4)^n"};
    }
    case Regime::kGap:
      break;
  }
  throw InternalError("no direct bound in this regime");
}

}  // namespace

BoundReport theorem1_bound(int64_t n, int64_t d, const BigRational& epsilon) {
  if (n < 2 || (n & (n - 1)) != 0) {
    throw DomainError("n must be a power of two, >= 2");
  }
  const int m = std::bit_width(static_cast<uint64_t>(n)) - 1;
  check_log_dim(m);
  const BigInt p = boost::multiprecision::numerator(epsilon);
  const BigInt q = boost::multiprecision::denominator(epsilon);
  if (epsilon <= 0 || 2 * p >= q) {
    throw DomainError("epsilon must lie strictly between 0 and 1/2");
  }
  if (q > 10000) {
    throw DomainError(
        "epsilon denominator above 10^4; exact boundary checks need a "
        "coarser rational");
  }
  if (d < 1) throw DomainError("dilation must be >= 1");
  const BigInt nm = BigInt(n) * m;
  if (d >= nm) {
    throw InfeasibleError("d out of range: the theorem needs d < n*log2(n)");
  }

  BoundReport report{n, d, epsilon, Regime::kGap, 0.0, std::nullopt, ""};
  report.regime = classify(d, m, nm, p, q);
  if (report.regime != Regime::kGap) {
    RegimeBound rb = bound_in_regime(report.regime, n, m, d, epsilon);
    report.bound_log2 = rb.log2_value;
    report.exact_bound = std::move(rb.exact);
    report.notes = std::move(rb.note);
    return report;
  }
  // Monotone fallback: the largest dilation the theorem covers below d is
  // floor((n m)^(1/2 - eps)).
  const unsigned lo_exp = (q - 2 * p).convert_to<unsigned>();
  const unsigned two_q = 2 * q.convert_to<unsigned>();
  const BigInt d_prime_big =
      integer_kth_root(boost::multiprecision::pow(nm, lo_exp), two_q);
  const int64_t d_prime = d_prime_big.convert_to<int64_t>();
  const Regime fallback = classify(d_prime, m, nm, p, q);
  RegimeBound rb = bound_in_regime(fallback, n, m, d_prime, epsilon);
  report.bound_log2 = rb.log2_value;
  report.notes = "not covered between the case3a and case3b windows; "
                 "monotone fallback from d'=" +
                 std::to_string(d_prime) + " (" +
                 std::string(regime_name(fallback)) + ": " + rb.note + ")";
  return report;
}

}  // namespace hadlat
