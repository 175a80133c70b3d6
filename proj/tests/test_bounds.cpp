#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "hadlat/bounds.hpp"
#include "hadlat/errors.hpp"

using namespace hadlat;

TEST_CASE("integer utilities") {
  SUBCASE("binomial coefficients") {
    CHECK(binomial(64, 10) == BigInt("151473214816"));
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    for (uint64_t n = 1; n <= 20; ++n) {
      for (uint64_t k = 1; k <= n; ++k) {
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
      }
    }
  }

  SUBCASE("integer roots") {
    CHECK(integer_kth_root(0, 3) == 0);
    CHECK(integer_kth_root(1, 5) == 1);
    CHECK(integer_kth_root(63, 3) == 3);
    CHECK(integer_kth_root(64, 3) == 4);
    CHECK(integer_kth_root(boost::multiprecision::pow(BigInt(10), 28), 2) ==
          boost::multiprecision::pow(BigInt(10), 14));
    CHECK(integer_kth_root(boost::multiprecision::pow(BigInt(10), 29), 2) ==
          BigInt("316227766016837"));
    CHECK_THROWS_AS(integer_kth_root(8, 0), DomainError);
    CHECK_THROWS_AS(integer_kth_root(-1, 2), DomainError);
    for (int shift = 1; shift <= 200; shift += 13) {
      for (unsigned k = 1; k <= 7; ++k) {
        BigInt x = (BigInt(1) << shift) + shift;
        BigInt r = integer_kth_root(x, k);
        CHECK(boost::multiprecision::pow(r, k) <= x);
        CHECK(boost::multiprecision::pow(r + 1, k) > x);
      }
    }
  }

  SUBCASE("log2 of big integers") {
    CHECK(log2_value(1) == 0.0);
    CHECK(log2_value(1024) == 10.0);
    CHECK(log2_value(3) == doctest::Approx(std::log2(3.0)));
    CHECK(log2_value(BigInt(1) << 200) == 200.0);
    CHECK(log2_value((BigInt(1) << 200) + (BigInt(1) << 199)) ==
          doctest::Approx(200.0 + std::log2(1.5)));
    CHECK_THROWS_AS(log2_value(0), DomainError);
  }

  SUBCASE("rational parsing") {
    CHECK(rational_from_string("0.25") == BigRational(1, 4));
    CHECK(rational_from_string(".5") == BigRational(1, 2));
    CHECK(rational_from_string("3") == 3);
    CHECK(rational_from_string("1/10") == BigRational(1, 10));
    CHECK(rational_from_string("-2/6") == BigRational(-1, 3));
    CHECK(rational_from_string("2.") == 2);
    CHECK_THROWS_AS(rational_from_string(""), DomainError);
    CHECK_THROWS_AS(rational_from_string("/3"), DomainError);
    CHECK_THROWS_AS(rational_from_string("1/"), DomainError);
    CHECK_THROWS_AS(rational_from_string("1/0"), DomainError);
    CHECK_THROWS_AS(rational_from_string("abc"), DomainError);
    CHECK_THROWS_AS(rational_from_string("1.2.3"), DomainError);
    CHECK(rational_to_double(BigRational(1, 4)) == 0.25);
  }
}

TEST_CASE("admissible dimension windows") {
  CHECK(case1_admissible_dims(4, 1) == std::vector<int>{2});
  CHECK(case1_admissible_dims(4, 2) == std::vector<int>{1, 2, 3});
  CHECK(case1_admissible_dims(4, 3) == std::vector<int>{1, 2, 3});
  CHECK(case1_admissible_dims(2, 1) == std::vector<int>{1});
  CHECK(case1_admissible_dims(3, 1) == std::vector<int>{1, 2});
  CHECK(case1_admissible_dims(5, 1) == std::vector<int>{2, 3});
  CHECK(case1_admissible_dims(8, 2) == std::vector<int>{3, 4, 5});
  CHECK(case1_admissible_dims(4, 0).empty());
  CHECK_THROWS_AS(case1_admissible_dims(4, -1), DomainError);

  SUBCASE("window is symmetric about m/2 and never touches 0 or m") {
    for (int m = 1; m <= 10; ++m) {
      for (int64_t d = 0; d <= 6; ++d) {
        auto dims = case1_admissible_dims(m, d);
        for (size_t i = 0; i < dims.size(); ++i) {
          CHECK(dims[i] >= 1);
          CHECK(dims[i] <= m - 1);
          CHECK(std::count(dims.begin(), dims.end(), m - dims[i]) == 1);
        }
      }
    }
  }
}

TEST_CASE("certificate family enumeration") {
  SUBCASE("frozen counts") {
    CHECK(case1_enumerate_families(4, 1, UINT64_MAX).size() == 35);
    CHECK(case1_enumerate_families(4, 2, UINT64_MAX).size() == 1275);
    CHECK(case1_enumerate_families(4, 3, UINT64_MAX).size() == 7875);
  }

  SUBCASE("family structure") {
    for (const Case1Family& f : case1_enumerate_families(4, 2, UINT64_MAX)) {
      REQUIRE(f.subspaces.size() == 2);
      REQUIRE(f.points.size() == 2);
      CHECK(f.subspaces[0].dim() < f.subspaces[1].dim());
      auto dims = case1_admissible_dims(4, 2);
      for (const GF2Subspace& t : f.subspaces) {
        CHECK(std::count(dims.begin(), dims.end(), t.dim()) == 1);
      }
      LatticePoint total = f.points[0] + f.points[1];
      CHECK(total == f.sum);
      CHECK(f.sum.level() == 2);
      CHECK(dilate_membership(f.sum, 2));
    }
  }

  SUBCASE("m = 2 families by hand") {
    auto families = case1_enumerate_families(2, 1, UINT64_MAX);
    std::set<std::vector<int64_t>> sums;
    for (const auto& f : families) sums.insert(f.sum.coords());
    CHECK(sums == std::set<std::vector<int64_t>>{
                      {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 1}});
  }

  SUBCASE("cap truncates") {
    CHECK(case1_enumerate_families(4, 2, 10).size() == 10);
    CHECK(case1_enumerate_families(4, 2, 0).empty());
  }

  SUBCASE("too few admissible dimensions") {
    CHECK_THROWS_AS(Case1FamilyStream(2, 2), InfeasibleError);
    CHECK_THROWS_AS(Case1FamilyStream(1, 1), InfeasibleError);
    CHECK_THROWS_AS(Case1FamilyStream(3, 3), InfeasibleError);
  }

  SUBCASE("the empty family at d = 0") {
    auto families = case1_enumerate_families(3, 0, UINT64_MAX);
    REQUIRE(families.size() == 1);
    CHECK(families[0].subspaces.empty());
    CHECK(families[0].sum == LatticePoint::zero(3));
  }
}

TEST_CASE("family count lower bound") {
  CHECK(case1_count_lower_bound(4, 1).exact == 35);
  CHECK(case1_count_lower_bound(4, 2).exact == 1275);
  CHECK(case1_count_lower_bound(4, 3).exact == 7875);
  CHECK(case1_count_lower_bound(2, 1).exact == 3);
  CHECK(case1_count_lower_bound(3, 1).exact == 14);
  CHECK(case1_count_lower_bound(3, 0).exact == 1);
  CHECK_THROWS_AS(case1_count_lower_bound(2, 2), InfeasibleError);

  SUBCASE("closed form matches the stream") {
    for (auto [m, d] : {std::pair{4, 2}, {4, 3}, {5, 1}, {5, 2}, {6, 1}}) {
      CHECK(case1_count_lower_bound(m, d).exact ==
            BigInt(case1_enumerate_families(m, d, UINT64_MAX).size()));
    }
  }

  SUBCASE("bounds the true point count from below") {
    // Unit dilate for m = 2: 3 certified out of 11 points.
    CHECK(case1_count_lower_bound(2, 1).exact <
          count_dilate(2, 1, CountMethod::kBijection));
  }

  SUBCASE("central dimension choice and the crude product") {
    auto c1 = case1_count_lower_bound(4, 1);
    CHECK(c1.central_dims == std::vector<int>{2});
    CHECK(c1.crude_log2 == 4);
    CHECK(c1.crude == 16);

    auto c2 = case1_count_lower_bound(4, 2);
    CHECK(c2.central_dims == std::vector<int>{1, 2});
    CHECK(c2.crude_log2 == 7);
    CHECK(c2.crude == 128);

    auto c3 = case1_count_lower_bound(4, 3);
    CHECK(c3.central_dims == std::vector<int>{1, 2, 3});
    CHECK(c3.crude_log2 == 10);

    auto c4 = case1_count_lower_bound(8, 2);
    CHECK(c4.central_dims == std::vector<int>{3, 4});
    CHECK(c4.crude_log2 == 31);

    // The subset sum dominates the single product it contains.
    CHECK(c2.exact >= c2.crude);
  }
}

TEST_CASE("family injectivity check") {
  auto tiny = case1_verify_injectivity(2, 1);
  CHECK(tiny.distinct);
  CHECK(tiny.sums_member);
  CHECK(tiny.family_count == 3);
  CHECK_FALSE(tiny.collision.has_value());

  auto mid = case1_verify_injectivity(4, 2);
  CHECK(mid.distinct);
  CHECK(mid.sums_member);
  CHECK(mid.family_count == 1275);

  auto big = case1_verify_injectivity(4, 3);
  CHECK(big.distinct);
  CHECK(big.sums_member);
  CHECK(big.family_count == 7875);

  CHECK_THROWS_AS(case1_verify_injectivity(4, 3, 100), BudgetError);
}

TEST_CASE("hypercube sampling") {
  SUBCASE("values stay in the punctured box") {
    HypercubeSpec spec{3, {1, 4, 6}, 3};
    SplitMix64 rng(2024);
    std::set<int64_t> seen;
    for (int i = 0; i < 1000; ++i) {
      std::vector<int64_t> x = sample_hypercube_point(spec, rng);
      REQUIRE(x.size() == 7);
      for (size_t j = 0; j < x.size(); ++j) {
        const uint32_t coord = uint32_t(j) + 1;
        const bool on = coord == 1 || coord == 4 || coord == 6;
        if (on) {
          CHECK(x[j] != 0);
          CHECK(std::abs(x[j]) <= 3);
          seen.insert(x[j]);
        } else {
          CHECK(x[j] == 0);
        }
      }
    }
    CHECK(seen == std::set<int64_t>{-3, -2, -1, 1, 2, 3});
  }

  SUBCASE("validation") {
    SplitMix64 rng(1);
    HypercubeSpec bad_zero{2, {0}, 1};
    CHECK_THROWS_AS(sample_hypercube_point(bad_zero, rng), DomainError);
    HypercubeSpec bad_high{2, {4}, 1};
    CHECK_THROWS_AS(sample_hypercube_point(bad_high, rng), DomainError);
    HypercubeSpec bad_radius{2, {1}, 0};
    CHECK_THROWS_AS(sample_hypercube_point(bad_radius, rng), DomainError);
  }
}

TEST_CASE("density estimation") {
  SUBCASE("deterministic in the seed, whatever the thread count") {
    DensityEstimate a = case3_sample_density(2, 3, 2, 1, 10000, 42, 1);
    DensityEstimate b = case3_sample_density(2, 3, 2, 1, 10000, 42, 4);
    CHECK(a.inside == b.inside);
    CHECK(a.fraction == b.fraction);
    CHECK(a.spec.support == b.spec.support);
    CHECK(a.samples == 10000);
    CHECK(a.seed == 42);
    CHECK(a.fraction ==
          double(a.inside) / 10000.0);
  }

  SUBCASE("support is a sorted c-subset of the free coordinates") {
    DensityEstimate est = case3_sample_density(3, 2, 4, 1, 100, 7);
    REQUIRE(est.spec.support.size() == 4);
    CHECK(std::is_sorted(est.spec.support.begin(), est.spec.support.end()));
    std::set<uint32_t> uniq(est.spec.support.begin(), est.spec.support.end());
    CHECK(uniq.size() == 4);
    for (uint32_t s : est.spec.support) {
      CHECK(s >= 1);
      CHECK(s < 8);
    }
  }

  SUBCASE("a dilation deep enough swallows the whole box") {
    // d = 3, one coordinate in {-1, 1}: every row sum stays >= 2.
    DensityEstimate est = case3_sample_density(2, 3, 1, 1, 500, 11);
    CHECK(est.inside == 500);
    CHECK(est.fraction == 1.0);
    CHECK(est.condition_holds);  // 4*1*1*2 = 8 <= 9
    REQUIRE(est.hoeffding_bound.has_value());
    CHECK(*est.hoeffding_bound == doctest::Approx(8.0 * std::exp(-4.5)));
  }

  SUBCASE("the zero dilate rejects every punctured point") {
    DensityEstimate est = case3_sample_density(1, 0, 1, 1, 100, 5);
    CHECK(est.inside == 0);
    CHECK(est.fraction == 0.0);
    CHECK_FALSE(est.condition_holds);
    CHECK_FALSE(est.hoeffding_bound.has_value());
  }

  SUBCASE("condition failure leaves the tail bound empty") {
    DensityEstimate est = case3_sample_density(2, 2, 1, 1, 100, 9);
    CHECK_FALSE(est.condition_holds);  // 8 > 4
    CHECK_FALSE(est.hoeffding_bound.has_value());
  }

  SUBCASE("validation") {
    CHECK_THROWS_AS(case3_sample_density(2, 1, 0, 1, 10, 1), DomainError);
    CHECK_THROWS_AS(case3_sample_density(2, 1, 4, 1, 10, 1), DomainError);
    CHECK_THROWS_AS(case3_sample_density(2, 1, 1, 0, 10, 1), DomainError);
    CHECK_THROWS_AS(case3_sample_density(2, 1, 1, 1, 0, 1), DomainError);
    CHECK_THROWS_AS(case3_sample_density(2, -1, 1, 1, 10, 1), DomainError);
  }
}

TEST_CASE("certified sampling bound") {
  Case3Bound b = case3_lower_bound_value(64, 23, 10, 1);
  CHECK(b.exact == BigInt("77554285985792"));
  CHECK(b.log2_value == doctest::Approx(std::log2(77554285985792.0)));

  CHECK(case3_lower_bound_value(4, 6, 1, 2).exact == 8);

  SUBCASE("requires the concentration condition") {
    CHECK_THROWS_AS(case3_lower_bound_value(64, 10, 10, 1),
                    PreconditionError);
  }

  SUBCASE("validation") {
    CHECK_THROWS_AS(case3_lower_bound_value(48, 23, 10, 1), DomainError);
    CHECK_THROWS_AS(case3_lower_bound_value(1, 1, 1, 1), DomainError);
    CHECK_THROWS_AS(case3_lower_bound_value(64, 23, 0, 1), DomainError);
    CHECK_THROWS_AS(case3_lower_bound_value(64, 23, 64, 1), DomainError);
    CHECK_THROWS_AS(case3_lower_bound_value(64, 23, 10, 0), DomainError);
  }
}

TEST_CASE("dilation regime bounds") {
  const BigRational tenth(1, 10);

  SUBCASE("regime names") {
    CHECK(regime_name(Regime::kCase1) == "case1");
    CHECK(regime_name(Regime::kCase2) == "case2");
    CHECK(regime_name(Regime::kCase3a) == "case3a");
    CHECK(regime_name(Regime::kCase3b) == "case3b");
    CHECK(regime_name(Regime::kGap) == "gap");
  }

  SUBCASE("n = 16 sweeps every regime but case3a") {
    BoundReport r1 = theorem1_bound(16, 1, tenth);
    CHECK(r1.regime == Regime::kCase1);
    REQUIRE(r1.exact_bound.has_value());
    CHECK(*r1.exact_bound == 35);
    CHECK(r1.bound_log2 == doctest::Approx(std::log2(35.0)));
    CHECK(r1.n == 16);
    CHECK(r1.d == 1);

    BoundReport r2 = theorem1_bound(16, 2, tenth);
    CHECK(r2.regime == Regime::kCase2);
    REQUIRE(r2.exact_bound.has_value());
    CHECK(*r2.exact_bound == 35);
    CHECK(r2.notes.find("d'=1") != std::string::npos);

    // d^2 = m^3 exactly: the tie stays in the lower case.
    CHECK(theorem1_bound(16, 8, tenth).regime == Regime::kCase2);

    BoundReport r9 = theorem1_bound(16, 9, tenth);
    CHECK(r9.regime == Regime::kGap);
    CHECK_FALSE(r9.exact_bound.has_value());
    CHECK(r9.bound_log2 == doctest::Approx(std::log2(35.0)));
    CHECK(r9.notes.find("d'=5") != std::string::npos);
    CHECK(r9.notes.find("case2") != std::string::npos);

    CHECK(theorem1_bound(16, 12, tenth).regime == Regime::kGap);
    CHECK(theorem1_bound(16, 13, tenth).regime == Regime::kCase3b);
    CHECK(theorem1_bound(16, 63, tenth).regime == Regime::kCase3b);
    CHECK_THROWS_AS(theorem1_bound(16, 64, tenth), InfeasibleError);
  }

  SUBCASE("n = 1024 hits case3a, including the near-tie at d = 40") {
    BoundReport r32 = theorem1_bound(1024, 32, tenth);
    CHECK(r32.regime == Regime::kCase3a);
    CHECK(r32.bound_log2 == doctest::Approx(51.2));
    CHECK_FALSE(r32.exact_bound.has_value());

    // 40^20 <= 10240^8 holds with a 10% margin; floats would guess wrong
    // either way at 41.
    BoundReport r40 = theorem1_bound(1024, 40, tenth);
    CHECK(r40.regime == Regime::kCase3a);
    CHECK(r40.bound_log2 == doctest::Approx(80.0));

    BoundReport r41 = theorem1_bound(1024, 41, tenth);
    CHECK(r41.regime == Regime::kGap);
    CHECK(r41.bound_log2 == doctest::Approx(80.0));
    CHECK(r41.notes.find("d'=40") != std::string::npos);
    CHECK(r41.notes.find("case3a") != std::string::npos);

    BoundReport rb = theorem1_bound(1024, 2048, tenth);
    CHECK(rb.regime == Regime::kCase3b);
    CHECK(rb.bound_log2 == doctest::Approx(1024.0 * (2.2 - 2.0)));

    BoundReport rc1 = theorem1_bound(1024, 2, tenth);
    CHECK(rc1.regime == Regime::kCase1);
    CHECK(*rc1.exact_bound == case1_count_lower_bound(10, 2).exact);

    CHECK(theorem1_bound(1024, 31, tenth).regime == Regime::kCase2);
    CHECK_THROWS_AS(theorem1_bound(1024, 10240, tenth), InfeasibleError);
  }

  SUBCASE("input validation") {
    CHECK_THROWS_AS(theorem1_bound(48, 3, tenth), DomainError);
    CHECK_THROWS_AS(theorem1_bound(1, 1, tenth), DomainError);
    CHECK_THROWS_AS(theorem1_bound(16, 0, tenth), DomainError);
    CHECK_THROWS_AS(theorem1_bound(16, 3, BigRational(0)), DomainError);
    CHECK_THROWS_AS(theorem1_bound(16, 3, BigRational(1, 2)), DomainError);
    CHECK_THROWS_AS(theorem1_bound(16, 3, BigRational(3, 5)), DomainError);
    CHECK_THROWS_AS(theorem1_bound(16, 3, BigRational(-1, 10)), DomainError);
    CHECK_THROWS_AS(theorem1_bound(16, 3, BigRational(1, 10001)), DomainError);
  }
}
