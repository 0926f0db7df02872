#include "thetaratio/jacobi_theta.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace thetaratio;

namespace {

const Real kTol("1e-30");

Real R(const char* s) { return Real(s); }

}  // namespace

TEST(PrecisionReal, SumAndProductBoundsCoverTruth) {
  PrecisionReal a(R("1.5"), R("1e-10"));
  PrecisionReal b(R("2.25"), R("2e-10"));
  PrecisionReal s = a + b;
  EXPECT_TRUE(s.contains(R("3.75")));
  EXPECT_GE(s.err_bound(), R("3e-10"));
  PrecisionReal p = a * b;
  EXPECT_GE(p.err_bound(), R("1.5") * R("2e-10") + R("2.25") * R("1e-10"));
}

TEST(PrecisionReal, NegativeErrorRejected) {
  EXPECT_THROW(PrecisionReal(R("1"), R("-1")), DomainError);
}

TEST(PrecisionReal, OverlapIsIndeterminate) {
  PrecisionReal a(R("1"), R("0.1"));
  PrecisionReal b(R("1.05"), R("0.1"));
  EXPECT_FALSE(a.try_compare(b).has_value());
  EXPECT_THROW((void)(a < b), IndeterminateComparison);
  PrecisionReal c(R("2"), R("0.1"));
  EXPECT_TRUE(a < c);
  EXPECT_TRUE(c > a);
}

TEST(PrecisionReal, DivisionByIntervalAroundZeroFails) {
  PrecisionReal a(R("1"));
  PrecisionReal z(R("0.01"), R("0.02"));
  EXPECT_THROW(a / z, PrecisionPropagationError);
}

TEST(PrecisionReal, ExpAndSqrtEnclose) {
  PrecisionReal x(R("0.5"), R("1e-20"));
  EXPECT_TRUE(exp(x).contains(boost::multiprecision::exp(R("0.5"))));
  EXPECT_TRUE(sqrt(x).contains(boost::multiprecision::sqrt(R("0.5"))));
  EXPECT_TRUE(pow(x, 5).contains(boost::multiprecision::pow(R("0.5"), 5)));
}

TEST(ThetaArgument, RejectsNonPositive) {
  EXPECT_THROW(ThetaArgument(Real(0)), DomainError);
  EXPECT_THROW(ThetaArgument(Real(-1)), DomainError);
  EXPECT_NO_THROW(ThetaArgument(R("1e-3")));
}

TEST(Theta, MatchesDirectSums) {
  for (const char* s : {"0.1", "0.25", "0.5", "1", "2", "5"}) {
    Real tau(s);
    ThetaArgument arg(tau);
    PrecisionReal t2 = theta2(arg, kTol), t3 = theta3(arg, kTol), t4 = theta4(arg, kTol);
    EXPECT_LE(t2.err_bound(), kTol);
    EXPECT_LE(t3.err_bound(), kTol);
    EXPECT_LE(abs(t2.value() - oracle::theta2(tau)), R("1e-25")) << s;
    EXPECT_LE(abs(t3.value() - oracle::theta3(tau)), R("1e-25")) << s;
    EXPECT_LE(abs(t4.value() - oracle::theta4(tau)), R("1e-25")) << s;
  }
}

TEST(Theta, AtOneAndLargeTau) {
  PrecisionReal t3 = theta3(ThetaArgument(Real(1)), kTol);
  // pi^(1/4) / Gamma(3/4)
  Real expected = boost::multiprecision::pow(oracle::pi(), Real(0.25)) / boost::multiprecision::tgamma(Real(0.75));
  EXPECT_TRUE(t3.widened(R("1e-40")).contains(expected));
  EXPECT_LT(abs(theta3(ThetaArgument(Real(40)), kTol).value() - 1), R("1e-50"));
  EXPECT_LT(theta2(ThetaArgument(Real(40)), kTol).value(), R("1e-12"));
}

TEST(Theta, QuarticAndModularIdentities) {
  for (const char* s : {"0.1", "0.25", "0.5", "1", "2", "5"}) {
    Real tau(s);
    ThetaArgument arg(tau);
    PrecisionReal t2 = theta2(arg, kTol), t3 = theta3(arg, kTol), t4 = theta4(arg, kTol);
    PrecisionReal q = pow(t2, 4) + pow(t4, 4) - pow(t3, 4);
    EXPECT_LE(abs(q.value()), 10 * kTol * pow(t3.value(), 3) * 4) << s;
    PrecisionReal dual = theta3(ThetaArgument(1 / tau), kTol) / sqrt(PrecisionReal::exact(tau));
    EXPECT_LE(abs(t3.value() - dual.value()), 10 * kTol) << s;
    // theta3(z) + theta4(z) = 2 theta3(4z), theta3(z) - theta4(z) = 2 theta2(4z)
    ThetaArgument four(4 * tau);
    EXPECT_LE(abs((t3 + t4).value() - 2 * theta3(four, kTol).value()), 10 * kTol) << s;
    EXPECT_LE(abs((t3 - t4).value() - 2 * theta2(four, kTol).value()), 10 * kTol) << s;
  }
}

TEST(Theta, QuarterTauViaTransformation) {
  PrecisionReal a = theta3(ThetaArgument(R("0.25")), kTol);
  PrecisionReal b = theta3(ThetaArgument(Real(4)), kTol);
  EXPECT_LE(abs(a.value() - 2 * b.value()), 10 * kTol);
}

TEST(Theta, ToleranceBelowGranularity) {
  EXPECT_THROW(theta3(ThetaArgument(Real(1)), R("1e-300")), ToleranceUnachievable);
  EXPECT_THROW(theta3(ThetaArgument(Real(1)), Real(0)), DomainError);
}

TEST(TOfTau, KnownValues) {
  PrecisionReal t1 = t_of_tau(Real(1), kTol);
  EXPECT_LE(abs(t1.value() - 1 / boost::multiprecision::sqrt(Real(2))), kTol);
  Real t2 = oracle::theta4(Real(2)) / oracle::theta3(Real(2));
  EXPECT_LE(abs(t_of_tau(Real(2), kTol).value() - t2 * t2), R("1e-25"));
  EXPECT_LT(t_of_tau(R("0.01"), kTol).value(), R("1e-40"));
  EXPECT_GT(t_of_tau(Real(30), kTol).value(), 1 - R("1e-35"));
}

TEST(TOfTau, StrictlyIncreasing) {
  PrecisionReal prev = t_of_tau(R("0.05"), kTol);
  for (int i = 1; i <= 100; ++i) {
    Real tau = R("0.05") + Real(i) * R("0.05");
    PrecisionReal cur = t_of_tau(tau, kTol);
    EXPECT_TRUE(prev < cur) << tau;
    prev = cur;
  }
}

TEST(HEval, Values) {
  EXPECT_EQ(h_eval(Real(0)), 1);
  EXPECT_EQ(h_eval(Real(1)), 1);
  EXPECT_EQ(h_eval(R("0.5")), R("0.8125"));
  EXPECT_LE(abs(h_eval(1 / boost::multiprecision::sqrt(Real(2))) - R("0.75")), R("1e-45"));
  EXPECT_THROW(h_eval(R("1.5")), DomainError);
  EXPECT_THROW(h_eval(R("-0.1")), DomainError);
  EXPECT_EQ(h_eval_unchecked(Real(2)), 13);
  EXPECT_EQ(h_value(Rational(1, 2)), Rational(13, 16));
}

TEST(Theta3UpperBound, ClosedFormAndDominance) {
  Real half_expected = boost::multiprecision::sqrt(Real(2)) + boost::multiprecision::exp(-2 * (oracle::pi() - 1));
  EXPECT_LE(abs(theta3_upper_bound(R("0.5")).value() - half_expected), R("1e-45"));
  EXPECT_LE(abs(theta3_upper_bound(R("0.5")).value() - R("1.4280122015")), R("1e-9"));
  EXPECT_LE(abs(theta3_upper_bound(R("0.999999")).value() - R("1.117464")), R("1e-5"));
}

TEST(Theta3UpperBound, StrictlyAboveThetaOnGrid) {
  // Near tau = 0.01 the gap is about exp(-214), so separate at 150 digits.
  WorkingPrecision wide(150);
  const Real tol("1e-130");
  for (int i = 1; i <= 200; ++i) {
    Real tau = R("0.01") + Real(i) * R("0.98") / 201;
    EXPECT_TRUE(theta3(ThetaArgument(tau), tol) < theta3_upper_bound(tau)) << tau;
  }
  EXPECT_THROW(theta3_upper_bound(Real(1)), DomainError);
  EXPECT_THROW(theta3_upper_bound(Real(0)), DomainError);
}

TEST(SqrtTauTheta3, AgreesWithProduct) {
  for (const char* s : {"0.3", "1", "2.5"}) {
    Real tau(s);
    PrecisionReal a = sqrt_tau_theta3(tau, kTol);
    Real b = boost::multiprecision::sqrt(tau) * oracle::theta3(tau);
    EXPECT_LE(abs(a.value() - b), R("1e-25")) << s;
  }
}
