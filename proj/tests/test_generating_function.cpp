#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cis/generating_function.hpp"
#include "cis/muckenhoupt.hpp"
#include "oracles.hpp"

using namespace cis;
using oracle::pi;

namespace {

Eigen::VectorXd jittered_core(std::mt19937_64& rng, Index N, double amp) {
  std::uniform_real_distribution<double> u(-amp, amp);
  Eigen::VectorXd core(2 * N + 1);
  for (Index n = -N; n <= N; ++n) core[n + N] = double(n) + u(rng);
  return core;
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("construction checks") {
  CHECK_THROWS_AS(GeneratingFunction::sine_tail(1, Eigen::Vector3d(-2.1, 0.0, 1.0)), Error);
  CHECK_THROWS_AS(GeneratingFunction::sine_tail(1, Eigen::Vector3d(-1.0, 0.0, 2.05)), Error);
  CHECK_THROWS_AS(GeneratingFunction::sine_tail(1, Eigen::Vector2d(-1.0, 0.0)), Error);
  CHECK(GeneratingFunction::tail_compatible(IndexedSequence::integers(-3, 3)));
  CHECK_FALSE(GeneratingFunction::tail_compatible(IndexedSequence::integers(-3, 4)));
  CHECK(GeneratingFunction::for_nodes(IndexedSequence::integers(-3, 3)).is_sine_tail());
  CHECK_FALSE(GeneratingFunction::for_nodes(IndexedSequence::integers(0, 6)).is_sine_tail());
}

TEST_CASE("sine evaluation") {
  const auto F = GeneratingFunction::sine();
  CHECK(eval(F, 0.5) == doctest::Approx(1.0 / pi).epsilon(1e-15));
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int k = 0; k < 200; ++k) {
    const Complex z(u(rng), u(rng));
    CHECK(rel(eval(F, z), oracle::sine_over_pi(z)) <= 1e-12);
  }
  CHECK(eval(F, Complex(0.3, 0.0)).imag() == 0.0);
}

TEST_CASE("sine tail matches the naive product") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-12.0, 12.0), v(-3.0, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::VectorXd core = jittered_core(rng, 8, 0.2);
    const auto F = GeneratingFunction::sine_tail(8, core);
    for (int k = 0; k < 50; ++k) {
      const Complex z(u(rng), v(rng));
      CHECK(rel(eval(F, z), oracle::naive_sine_tail(to_std(core), z)) <= 1e-11);
    }
    for (Index n = -20; n <= 20; ++n) CHECK(eval(F, F.node(n)) == 0.0);
  }
}

TEST_CASE("symmetric product against the sine") {
  const auto P = GeneratingFunction::symmetric_product(IndexedSequence::integers(-100000, 100000), 1e5);
  CHECK(std::abs(eval(P, 0.5) - 1.0 / pi) * pi <= 1e-3);
  for (Index n = -50; n <= 50; ++n) CHECK(eval(P, double(n)) == 0.0);

  // Same node set both ways: truncation error O(|z|^2/R).
  const auto Q = GeneratingFunction::symmetric_product(IndexedSequence::integers(-1000, 1000), 1000.5);
  for (double re : {-2.0, -0.7, 1.3}) {
    for (double im : {-2.0, 1.0}) {
      const Complex z(re, im);
      CHECK(rel(eval(Q, z), oracle::sine_over_pi(z)) <= 4.0 * std::norm(z) / 1000.0);
    }
  }

  // Factor z for a zero node, plain factors otherwise.
  Eigen::Vector3d nodes(-1.5, 0.0, 2.0);
  const auto R = GeneratingFunction::symmetric_product(IndexedSequence(-1, nodes));
  const Complex z(0.4, 0.3);
  CHECK(rel(eval(R, z), (1.0 + z / 1.5) * z * (1.0 - z / 2.0)) <= 1e-14);
}

TEST_CASE("overflow is reported, logs are not") {
  const auto F = GeneratingFunction::sine();
  CHECK_THROWS_AS(eval(F, Complex(0.25, 400.0)), Error);
  try {
    eval(F, Complex(0.25, 400.0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NumericFailure);
    REQUIRE(e.log_value().has_value());
    CHECK(*e.log_value() == doctest::Approx(400.0 * pi - std::log(2.0 * pi)).epsilon(1e-12));
  }
  CHECK(log_modulus(F, Complex(0.25, 400.0)) == doctest::Approx(400.0 * pi - std::log(2.0 * pi)).epsilon(1e-12));
}

TEST_CASE("log derivative") {
  const auto F = GeneratingFunction::sine();
  CHECK(std::abs(eval_log_derivative(F, Complex(0.5, 0.0))) <= 1e-15);
  CHECK_THROWS_AS(eval_log_derivative(F, 3.0), Error);

  std::mt19937_64 rng(23);
  const auto G = GeneratingFunction::sine_tail(8, jittered_core(rng, 8, 0.2));
  auto logabs = [&G](double x) { return std::log(std::abs(eval(G, x))); };
  for (double x : {0.3, -4.37, 9.71}) {
    CHECK(eval_log_derivative(G, x) == doctest::Approx(oracle::central_difference(logabs, x)).epsilon(1e-6));
  }
  // Positive near the left end of each gap, negative near the right end.
  for (Index n = -10; n <= 10; ++n) {
    const double a = G.node(n - 1), b = G.node(n);
    CHECK(eval_log_derivative(G, a + 1e-3 * (b - a)) > 0.0);
    CHECK(eval_log_derivative(G, b - 1e-3 * (b - a)) < 0.0);
  }
}

TEST_CASE("derivatives at the zeros") {
  const PositiveSequence d = derivative_at_zeros(GeneratingFunction::sine(), -30, 30);
  CHECK((d.values().array() - 1.0).abs().maxCoeff() <= 1e-14);
  const PositiveSequence d3 = derivative_at_zeros(GeneratingFunction::sine(3.0), -30, 30);
  CHECK((d3.values().array() - 9.0).abs().maxCoeff() <= 1e-13);

  const auto G = GeneratingFunction::sine_tail(0, Eigen::VectorXd::Constant(1, 0.1));
  auto f = [&G](double x) { return eval(G, x); };
  const double fd = oracle::central_difference(f, 0.1, 1e-5);
  CHECK(derivative_at_zeros(G)(0) == doctest::Approx(fd * fd).epsilon(1e-8));

  std::mt19937_64 rng(24);
  const auto H = GeneratingFunction::sine_tail(8, jittered_core(rng, 8, 0.2));
  for (Index n = -12; n <= 12; ++n) {
    auto h = [&H](double x) { return eval(H, x); };
    CHECK(derivative_at_node(H, n) == doctest::Approx(oracle::central_difference(h, H.node(n), 1e-5)).epsilon(1e-8));
  }
}

TEST_CASE("critical data") {
  const CriticalData sine = critical_data(GeneratingFunction::sine(), -50, 50);
  for (Index n = -50; n <= 50; ++n) {
    CHECK(std::abs(sine.points[n + 50] - (n - 0.5)) <= 1e-10);
    CHECK(std::abs(std::abs(sine.values(n)) - 1.0 / pi) <= 1e-10);
  }
  CHECK(critical_data(GeneratingFunction::sine(), 4, 4).points.size() == 1);

  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const auto G = GeneratingFunction::sine_tail(8, jittered_core(rng, 8, 0.2));
    const CriticalData cd = critical_data(G, -12, 12);
    for (Index n = -12; n <= 12; ++n) {
      const double x = cd.points[n + 12];
      CHECK(G.node(n - 1) < x);
      CHECK(x < G.node(n));
      CHECK(detail::parity_sign(n) * cd.values(n) > 0.0);
      CHECK(std::abs(eval_log_derivative(G, x)) <= 1e-9);
      // A maximum of |F| on the gap.
      const auto [xm, fm] = oracle::golden_max([&G](double t) { return std::abs(eval(G, t)); }, G.node(n - 1), G.node(n));
      CHECK(std::abs(cd.values(n)) == doctest::Approx(fm).epsilon(1e-10));
    }
  }
}

TEST_CASE("derivative over critical value ratio") {
  const auto r = derivative_critical_ratio(GeneratingFunction::sine(), -50, 50);
  CHECK((r.ratios.array() - pi).abs().maxCoeff() <= 1e-10);
  std::mt19937_64 rng(26);
  const auto G = GeneratingFunction::sine_tail(8, jittered_core(rng, 8, 0.2));
  const auto j = derivative_critical_ratio(G, -8, 8);
  CHECK(j.min > 0.0);
  CHECK(j.max / j.min <= 10.0);
}

TEST_CASE("cartwright integral") {
  for (double T : {1.0, 10.0, 100.0}) CHECK(cartwright_integral(GeneratingFunction::sine(), T) == 0.0);

  const auto F = GeneratingFunction::sine(3.0 * pi);
  double prev = 0.0;
  for (double T : {1.0, 10.0, 100.0, 1000.0}) {
    const double v = cartwright_integral(F, T);
    CHECK(v >= prev);
    prev = v;
  }
  const double a = cartwright_integral(F, 100.0), b = cartwright_integral(F, 1000.0);
  CHECK(std::abs(a - b) / b <= 0.02);
  // Same integrand by Simpson on a fine grid, zeros avoided by the 1/2 shift.
  auto integrand = [&F](double t) { return std::max(0.0, std::log(std::abs(eval(F, t)))) / (1 + t * t); };
  CHECK(cartwright_integral(F, 10.0) == doctest::Approx(oracle::simpson(integrand, -10.0, 10.0, 400000)).epsilon(1e-6));
  CHECK_THROWS_AS(cartwright_integral(F, 0.0), Error);
}

TEST_CASE("line bounds and scans") {
  const auto F = GeneratingFunction::sine();
  const LineBounds b = line_modulus_bounds(F, 1.0, -20.0, 20.0, 0.01);
  CHECK(std::abs(b.min - std::sinh(pi) / pi) <= 1e-2);
  CHECK(std::abs(b.max - std::cosh(pi) / pi) <= 1e-2);
  const LineBounds s = line_modulus_bounds(F, 1.0, -19.0, 21.0, 0.01);
  CHECK(s.min == doctest::Approx(b.min).epsilon(1e-10));
  CHECK(s.max == doctest::Approx(b.max).epsilon(1e-10));

  const auto samples = line_scan(F, 1.0, 0.0, 1.0, 0.25);
  REQUIRE(samples.size() == 5);
  CHECK(samples[2].x == 0.5);
  CHECK(samples[2].abs_F == doctest::Approx(std::cosh(pi) / pi).epsilon(1e-14));

  std::mt19937_64 rng(27);
  const auto G = GeneratingFunction::sine_tail(8, jittered_core(rng, 8, 0.2));
  CHECK(line_modulus_bounds(G, 1.0, -30.0, 30.0, 0.05).min > 0.0);
  CHECK_THROWS_AS(line_modulus_bounds(F, 0.0, -1.0, 1.0, 0.1), Error);
}

TEST_CASE("type estimate") {
  const std::vector<double> radii{10.0, 20.0, 50.0, 100.0};
  const auto est = type_estimate(GeneratingFunction::sine(), radii);
  CHECK(est[2] == doctest::Approx(pi - std::log(2 * pi) / 50).epsilon(1e-9));
  for (std::size_t k = 1; k < est.size(); ++k) CHECK(est[k] > est[k - 1]);
  const auto scaled = type_estimate(GeneratingFunction::sine(5.0), radii);
  for (std::size_t k = 0; k < est.size(); ++k) CHECK(scaled[k] - est[k] == doctest::Approx(std::log(5.0) / radii[k]));
  const std::vector<double> bad{5.0, 2.0};
  CHECK_THROWS_AS(type_estimate(GeneratingFunction::sine(), bad), Error);
}

TEST_CASE("weight trace and continuous A2 of the sine") {
  CHECK_THROWS_AS(WeightTrace(GeneratingFunction::sine(), 0.0), Error);
  const WeightTrace w(GeneratingFunction::sine());
  CHECK(w(0.3) == doctest::Approx(std::norm(oracle::sine_over_pi(Complex(0.3, 1.0)))).epsilon(1e-14));

  const std::vector<double> lengths = default_a2_lengths();
  const std::vector<double> centers = default_a2_centers();
  const double coarse = continuous_a2_scan(std::cref(w), lengths, centers).report.max_ratio;
  std::vector<double> fine_lengths, fine_centers;
  for (int k = -4; k <= 12; ++k) fine_lengths.push_back(std::pow(2.0, k / 2.0));
  for (double c = -10.0; c <= 10.0; c += 0.125) fine_centers.push_back(c);
  const double fine = continuous_a2_scan(std::cref(w), fine_lengths, fine_centers).report.max_ratio;
  CHECK(coarse >= 1.0);
  CHECK(std::abs(fine - coarse) / coarse <= 0.01);
}
