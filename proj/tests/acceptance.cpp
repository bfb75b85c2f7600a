// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cis/comb.hpp"
#include "cis/muckenhoupt.hpp"
#include "cis/paley_wiener.hpp"

using namespace cis;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records a failed check without stopping the criterion.
struct Check {
  Outcome& out;
  void operator()(bool ok, const std::string& what) {
    if (!ok) {
      out.pass = false;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += what;
    }
  }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

int failures = 0;

void criterion(int id, const char* name, double time_limit_s, const std::function<void(Check&)>& body) {
  Outcome out;
  Check check{out};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit_s > 0.0) check(elapsed <= time_limit_s, "runtime " + num(elapsed) + " s > " + num(time_limit_s) + " s");
  if (!out.pass) ++failures;
  std::printf("[%s] %2d %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL", id, name, elapsed,
              out.detail.empty() ? "" : " :: ", out.detail.c_str());
}

IndexedSequence alternating(double d, Index n) {
  return IndexedSequence::generate(-n, n, [d](Index k) { return double(k) + d * detail::parity_sign(k); });
}

}  // namespace

int main() {
  criterion(1, "product and sine-tail forms agree with sin(pi z)/pi", 5.0, [](Check& check) {
    const Index R = 100000;
    const auto product = GeneratingFunction::symmetric_product(IndexedSequence::integers(-R, R), double(R));
    const auto tail = GeneratingFunction::sine();
    double worst_product = 0.0, worst_tail = 0.0;
    for (double re : {-1.75, 0.3, 1.6}) {
      for (double im : {-2.0, 0.5, 2.0}) {
        const Complex z(re, im);
        const Complex exact = std::sin(pi * z) / pi;
        worst_product = std::max(worst_product, std::abs(eval(product, z) - exact) / std::abs(exact));
        worst_tail = std::max(worst_tail, std::abs(eval(tail, z) - exact) / std::abs(exact));
      }
    }
    check(worst_product <= 1e-3, "product rel err " + num(worst_product));
    check(worst_tail <= 1e-12, "sine-tail rel err " + num(worst_tail));
  });

  criterion(2, "Kadets check is sharp at 1/4", 0.0, [](Check& check) {
    for (double d : {0.2, 0.24, 0.25, 0.3}) {
      const bool passes = kadets_check(alternating(d, 50)).passes;
      check(passes == (d < 0.25), "d = " + num(d) + " gave " + (passes ? "true" : "false"));
    }
  });

  criterion(3, "power-law weights: bounded for alpha 1/4, growing for alpha 1/2", 20.0, [](Check& check) {
    auto timed = [](const std::function<double()>& f, double& seconds) {
      const auto t0 = std::chrono::steady_clock::now();
      const double v = f();
      seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return v;
    };
    double t_small = 0.0, t_large = 0.0;
    const double small = timed([] { return discrete_ratio(power_law_sequence(0.25, -2048, 2048)).max_ratio; }, t_small);
    const double large = timed([] { return discrete_ratio(power_law_sequence(0.25, -4096, 4096)).max_ratio; }, t_large);
    check(std::abs(large - small) / small <= 0.10, "alpha 1/4 change " + num((large - small) / small));
    check(t_small <= 10.0 && t_large <= 10.0, "alpha 1/4 runtime " + num(t_large) + " s");

    double t_q2 = 0.0, t_q4 = 0.0;
    const double q2 = timed([] { return discrete_ratio(power_law_sequence(0.5, 1, 100)).max_ratio; }, t_q2);
    const double q4 = timed([] { return discrete_ratio(power_law_sequence(0.5, 1, 10000)).max_ratio; }, t_q4);
    check(q4 >= 1.5 * q2, "alpha 1/2 ratio(1e4)/ratio(1e2) = " + num(q4 / q2));
    check(t_q4 <= 10.0, "alpha 1/2 runtime " + num(t_q4) + " s");
  });

  criterion(4, "critical data of the sine", 0.0, [](Check& check) {
    const CriticalData cd = critical_data(GeneratingFunction::sine(), -50, 50);
    double point_err = 0.0, value_err = 0.0;
    bool alternating_signs = true;
    for (Index n = -50; n <= 50; ++n) {
      point_err = std::max(point_err, std::abs(cd.points[n + 50] - (double(n) - 0.5)));
      value_err = std::max(value_err, std::abs(std::abs(cd.values(n)) - 1.0 / pi));
      alternating_signs = alternating_signs && detail::parity_sign(n) * cd.values(n) > 0.0;
    }
    check(point_err <= 1e-10, "x_n err " + num(point_err));
    check(value_err <= 1e-10, "|c_n| err " + num(value_err));
    check(alternating_signs, "signs do not alternate");
  });

  criterion(5, "|F'(lambda_n)| / |c_n| is pi for the sine, bounded spread when jittered", 0.0, [](Check& check) {
    const CriticalRatioReport sine = derivative_critical_ratio(GeneratingFunction::sine(), -50, 50);
    const double err = (sine.ratios.array() - pi).abs().maxCoeff();
    check(err <= 1e-10, "sine ratio err " + num(err));

    std::mt19937_64 rng(20261019);
    std::uniform_real_distribution<double> jitter(-0.2, 0.2);
    Eigen::VectorXd core(17);
    for (Index n = -8; n <= 8; ++n) core[n + 8] = double(n) + jitter(rng);
    const CriticalRatioReport jittered = derivative_critical_ratio(GeneratingFunction::sine_tail(8, core), -8, 8);
    const double spread = jittered.max / jittered.min;
    check(spread <= 10.0, "jittered spread " + num(spread));
    std::printf("     jittered N = 8 ratio range [%.6g, %.6g], spread %.6g\n", jittered.min, jittered.max, spread);
  });

  criterion(6, "boundary trace of log sin maps gaps onto slit levels", 0.0, [](Check& check) {
    const double eps = 1e-3;
    const auto traces = boundary_trace(BranchTrackedLog{GeneratingFunction::sine()}, eps, -5, 5);
    double level_err = 0.0, re_err = 0.0, arg_err = 0.0;
    for (std::size_t k = 0; k < traces.size(); ++k) {
      if (k > 0) level_err = std::max(level_err, std::abs(std::abs(traces[k].im_level - traces[k - 1].im_level) - pi));
      re_err = std::max(re_err, std::abs(traces[k].re_max - std::log(1.0 / pi)));
      arg_err = std::max(arg_err, std::abs(traces[k].argmax - (double(traces[k].gap) - 0.5)));
    }
    check(level_err <= 1e-3 * pi, "level err " + num(level_err));
    check(re_err <= 1e-4, "re_max err " + num(re_err));
    check(arg_err <= 1e-4, "argmax err " + num(arg_err));
  });

  criterion(7, "synthesis round trip from prescribed critical values", 60.0, [](Check& check) {
    const Index N = 8;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> offset(-0.5, 0.5);
    Eigen::VectorXd tips(2 * N + 1);
    for (Index n = -N; n <= N; ++n) tips[n + N] = detail::parity_sign(n) * std::exp(std::log(1.0 / pi) + offset(rng));
    const SynthesisResult res = synthesize(SynthesisProblem{SignedCriticalSequence(-N, tips)});
    check(res.converged && res.residual <= 1e-10, "residual " + num(res.residual));

    // Independent re-extraction; tail_value 1/pi means unit normalization.
    const CriticalData cd = critical_data(GeneratingFunction::sine_tail(res.nodes.slice(-N, N)), -N, N);
    double log_err = 0.0;
    for (Index n = -N; n <= N; ++n) {
      log_err = std::max(log_err, std::abs(std::log(std::abs(cd.values(n))) - std::log(std::abs(tips[n + N]))));
    }
    check(log_err <= 1e-6, "log-modulus err " + num(log_err));

    Eigen::VectorXd flat(2 * N + 1);
    for (Index n = -N; n <= N; ++n) flat[n + N] = detail::parity_sign(n) / pi;
    const SynthesisResult fixed = synthesize(SynthesisProblem{SignedCriticalSequence(-N, flat)});
    double node_err = 0.0;
    for (Index n = fixed.nodes.n_min(); n <= fixed.nodes.n_max(); ++n) {
      node_err = std::max(node_err, std::abs(fixed.nodes(n) - double(n)));
    }
    check(node_err <= 1e-8, "flat targets node err " + num(node_err));
  });

  criterion(8, "finite-section Riesz bounds", 0.0, [](Check& check) {
    const RieszBoundsReport ints = riesz_bounds(IndexedSequence::integers(-50, 50), 101);
    check(ints.lower == 2.0 * pi && ints.upper == 2.0 * pi,
          "integers bounds [" + num(ints.lower) + ", " + num(ints.upper) + "]");
    const IndexedSequence kadets = alternating(0.2, 100);
    const RieszBoundsReport s101 = riesz_bounds(kadets, 101);
    const RieszBoundsReport s201 = riesz_bounds(kadets, 201);
    check(s101.lower > 0.0 && s201.lower > 0.0, "nonpositive lower bound");
    const double change = std::abs(s201.lower - s101.lower) / s101.lower;
    check(change <= 0.05, "lower bound change " + num(change));
  });

  criterion(9, "cardinal-series interpolation and norm equivalence", 0.0, [](Check& check) {
    const IndexedSequence ints = IndexedSequence::integers(-50, 50);
    Eigen::VectorXcd delta = Eigen::VectorXcd::Zero(101);
    delta[50] = 1.0;
    const InterpolationProblem cardinal(ints, delta);
    double card_err = std::abs(interpolate_eval(cardinal, 0.0) - 1.0);
    for (Index m = -50; m <= 50; ++m) {
      if (m != 0) card_err = std::max(card_err, std::abs(interpolate_eval(cardinal, double(m))));
    }
    check(card_err <= 1e-12, "cardinal err " + num(card_err));

    std::mt19937_64 rng(9);
    std::normal_distribution<double> gauss;
    const IndexedSequence nodes = alternating(0.2, 50);
    Eigen::VectorXcd data(101);
    for (auto& a : data) a = Complex(gauss(rng), gauss(rng));
    const InterpolationProblem random(nodes, data);
    double node_err = 0.0;
    for (Index m = -25; m <= 25; ++m) {
      node_err = std::max(node_err, std::abs(interpolate_eval(random, nodes(m)) - data[m + 50]));
    }
    check(node_err <= 1e-9, "interior node err " + num(node_err));

    Eigen::VectorXcd supported = Eigen::VectorXcd::Zero(101);
    for (Index n = -20; n <= 20; ++n) supported[n + 50] = gauss(rng);
    const NormEquivalenceReport ne = norm_equivalence_check(InterpolationProblem(ints, supported), 500.0);
    check(std::abs(ne.ratio - 1.0) <= 0.02, "norm ratio " + num(ne.ratio));
  });

  criterion(10, "two-sided power-mean inequality at random samples", 0.0, [](Check& check) {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> log_pq(-5.0, 5.0);
    std::uniform_real_distribution<double> alpha(-0.5, 0.5);
    int violations = 0;
    for (int k = 0; k < 10000; ++k) {
      if (!ungl_inequality(std::exp(log_pq(rng)), std::exp(log_pq(rng)), alpha(rng))) ++violations;
    }
    check(violations == 0, std::to_string(violations) + " violations");
  });

  criterion(11, "sine-type bounds of |sin(pi(x+i))/pi|", 0.0, [](Check& check) {
    const LineBounds b = line_modulus_bounds(GeneratingFunction::sine(), 1.0, -20.0, 20.0, 0.01);
    check(std::abs(b.min - std::sinh(pi) / pi) <= 1e-2, "min " + num(b.min));
    check(std::abs(b.max - std::cosh(pi) / pi) <= 1e-2, "max " + num(b.max));
  });

  criterion(12, "exponential type estimate approaches pi", 0.0, [](Check& check) {
    const std::vector<double> radii{10.0, 20.0, 50.0, 100.0};
    const std::vector<double> est = type_estimate(GeneratingFunction::sine(), radii);
    const double expected = pi - std::log(2.0 * pi) / 50.0;
    check(std::abs(est[2] - expected) <= 1e-6, "R = 50 estimate " + num(est[2]));
    bool increasing = true;
    for (std::size_t k = 1; k < est.size(); ++k) increasing = increasing && est[k] > est[k - 1] && est[k] < pi;
    check(increasing, "estimates not increasing toward pi");
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
