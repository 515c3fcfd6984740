#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "horn/formula.hpp"
#include "horn/meanfield.hpp"

using namespace horn;

// Reference values below were computed with 50-digit arithmetic (mpmath)
// directly from the closed forms, independently of this code.

TEST(FlowAt, TimeZeroWithoutUnits) {
  MeanFieldState s = flow_at(0.0, {100.0, 0.0, 0.0, 2.5});
  EXPECT_EQ(s.d1, 0.0);
  EXPECT_EQ(s.d2, 0.0);
  EXPECT_EQ(s.d3, 2.5);
  EXPECT_EQ(s.n, 100.0);
}

TEST(FlowAt, HighPrecisionReference) {
  MeanFieldState s = flow_at(0.1, {1.0, 0.1, 0.0, 1.8});
  EXPECT_NEAR(s.d1, 0.017838967641699282, 1e-15);
  EXPECT_NEAR(s.d2, 0.324, 1e-15);
  EXPECT_NEAR(s.d3, 1.458, 1e-15);
  EXPECT_NEAR(s.n, 0.9, 1e-15);
}

TEST(FlowAt, NoClausesKeepsUnitDensityAtZero) {
  for (double d1 : {0.0, 0.2, 0.7}) EXPECT_DOUBLE_EQ(flow_at(0.0, {1.0, d1, 0.0, 0.0}).d1, d1);
}

TEST(FlowAt, RejectsTimeOutsideDomain) {
  for (double t : {1.0, 1.5, -0.1, std::nan("")}) {
    try {
      flow_at(t, {1.0, 0.1, 0.0, 1.0});
      ADD_FAILURE() << "t=" << t;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DomainError);
    }
  }
}

TEST(RecursionStep, FixedPoints) {
  MeanFieldState a = recursion_step({1000, 0.0, 0.0, 1.8});
  EXPECT_EQ(a.n, 1000.0);
  EXPECT_EQ(a.d1, 0.0);
  EXPECT_EQ(a.d2, 0.0);
  EXPECT_EQ(a.d3, 1.8);

  MeanFieldState b = recursion_step({1000, 0.5, 0.0, 0.0});
  EXPECT_EQ(b.n, 500.0);
  EXPECT_EQ(b.d1, 0.0);
  EXPECT_EQ(b.d2, 0.0);
  EXPECT_EQ(b.d3, 0.0);
}

TEST(RecursionStep, HighPrecisionReference) {
  MeanFieldState s = recursion_step({1e6, 0.1, 0.0, 1.8});
  EXPECT_NEAR(s.n, 9e5, 1e-8);
  EXPECT_NEAR(s.d1, 0.017838967641699282, 1e-15);
  EXPECT_NEAR(s.d2, 0.324, 1e-15);
  EXPECT_NEAR(s.d3, 1.458, 1e-15);
}

TEST(RecursionStep, AgreesWithFlowRunToTimeD1) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.0, 0.95), dens(0.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    MeanFieldState s{1e5, unit(rng), dens(rng), dens(rng)};
    MeanFieldState r = recursion_step(s);
    MeanFieldState f = flow_at(s.d1, s);
    EXPECT_NEAR(r.d1, f.d1, 1e-12);
    EXPECT_NEAR(r.d2, f.d2, 1e-12 * (1 + f.d2));
    EXPECT_NEAR(r.d3, f.d3, 1e-12 * (1 + f.d3));
    EXPECT_NEAR(r.n, f.n, 1e-7);
    EXPECT_EQ(r.d1, 1.0 - std::exp(-s.d1 * (s.d2 + s.d1 * s.d3)));
    EXPECT_GE(r.d1, 0.0);
    EXPECT_LT(r.d1, 1.0);
    EXPECT_LE(r.n, s.n);
    EXPECT_LE(r.d3, s.d3);
  }
}

TEST(PredictH, ZeroUnitsGiveZeroRounds) {
  for (double n : {1.0, 1e3, 1e9}) EXPECT_EQ(predict_h(n, 0.0, 3.7).h, 0u);
}

TEST(PredictH, HighPrecisionGoldenValues) {
  EXPECT_EQ(predict_h(1e6, 0.1, 1.8).h, 12u);
  EXPECT_EQ(predict_h(1e5, 0.1, 1.8).h, 9u);
  EXPECT_EQ(predict_h(16384, 0.1, 1.8).h, 7u);
  // Logarithmic: well under 2 ln n.
  EXPECT_LE(predict_h(1e6, 0.1, 1.8).h, 2 * std::log(1e6));
}

TEST(PredictH, CriticalPointIsMuchDeeper) {
  const double c = critical_d1(3.0);
  EXPECT_EQ(predict_h(1e4, c, 3.0).h, 68u);
  EXPECT_EQ(predict_h(1e5, c, 3.0).h, 230u);
  EXPECT_EQ(predict_h(1e6, c, 3.0).h, 747u);
  EXPECT_GE(predict_h(1e6, c, 3.0).h, 10 * predict_h(1e6, 0.1, 1.8).h);
}

TEST(PredictH, ReportsNonTermination) {
  Prediction p = predict_h(1e6, critical_d1(3.0), 3.0, 5);
  EXPECT_FALSE(p.terminated);
  EXPECT_EQ(p.h, 5u);
  EXPECT_TRUE(predict_h(1e6, critical_d1(3.0), 3.0, 747).terminated);
  EXPECT_FALSE(predict_h(1e6, critical_d1(3.0), 3.0, 746).terminated);
}

TEST(PredictH, InvalidParams) {
  for (auto [n, d1, d3] : {std::tuple{0.5, 0.1, 1.0}, {10.0, 1.5, 1.0}, {10.0, 0.1, -1.0}}) {
    try {
      predict_h(n, d1, d3);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidParams);
    }
  }
}

TEST(PredictH, UnitCountEventuallyDecreasesBelowTwo) {
  // d3 < 2: along each trajectory d1*n eventually decreases strictly.
  for (double d3 : {0.5, 1.0, 1.8, 1.99}) {
    for (double d1 : {0.01, 0.1, 0.3, 0.6, 0.9}) {
      MeanFieldState s{1e7, d1, 0.0, d3};
      std::vector<double> units;
      while (s.d1 * s.n >= 1.0 && units.size() < 10000) {
        units.push_back(s.d1 * s.n);
        s = recursion_step(s);
        ASSERT_GE(s.d1, 0.0);
        ASSERT_LT(s.d1, 1.0);
      }
      ASSERT_LT(units.size(), 10000u) << d1 << ' ' << d3;
      std::size_t peak = std::max_element(units.begin(), units.end()) - units.begin();
      for (std::size_t i = peak + 1; i < units.size(); ++i) EXPECT_LT(units[i], units[i - 1]);
    }
  }
}

TEST(CriticalD1, ReferenceValues) {
  EXPECT_NEAR(critical_d1(3.0), 0.098257422037058488, 1e-14);
  EXPECT_NEAR(critical_d1(3.0), 0.0983, 0.0005);
  EXPECT_NEAR(critical_d1(2.0), 0.17563936464993593, 1e-14);
  EXPECT_NEAR(critical_d1(4.0), 0.069990749577524897, 1e-14);
}

TEST(CriticalD1, NoCriticalPointBelowTwo) {
  try {
    critical_d1(1.9);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoCriticalPoint);
  }
}

TEST(CriticalD1, ContinuousAndDecreasing) {
  double prev = critical_d1(2.0);
  for (double d3 = 2.001; d3 <= 50.0; d3 += 0.001) {
    double cur = critical_d1(d3);
    EXPECT_LT(cur, prev);
    EXPECT_LT(prev - cur, 0.01);
    prev = cur;
  }
}
