#include "cis/muckenhoupt.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cis/quadrature.hpp"

namespace cis {

namespace {

/// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace

MuckenhouptReport discrete_ratio(const PositiveSequence& d, double p, Index window_cap) {
  if (!(p > 1.0) || !std::isfinite(p)) invalid_input("discrete_ratio: p must exceed 1");
  if (window_cap < 1 || window_cap > d.size()) {
    invalid_input("discrete_ratio: window_cap must lie in [1, " + std::to_string(d.size()) + "]");
  }

  const Index size = d.size();
  const bool quadratic = (p == 2.0);
  const double dual_exp = -1.0 / (p - 1.0);
  Eigen::VectorXd dual(size);
  for (Index k = 0; k < size; ++k) dual[k] = quadratic ? 1.0 / d.values()[k] : std::pow(d.values()[k], dual_exp);

  MuckenhouptReport rep;
  rep.p = p;
  rep.window_cap = window_cap;
  rep.max_ratio = -std::numeric_limits<double>::infinity();

  for (Index start = 0; start < size; ++start) {
    CompensatedSum primal_sum, dual_sum;
    const Index stop = std::min(size, start + window_cap);
    for (Index end = start; end < stop; ++end) {
      primal_sum.add(d.values()[end]);
      dual_sum.add(dual[end]);
      const double len = static_cast<double>(end - start + 1);
      const double ratio = quadratic ? primal_sum.value() * dual_sum.value() / (len * len)
                                     : primal_sum.value() * std::pow(dual_sum.value(), p - 1.0) / std::pow(len, p);
      if (ratio > rep.max_ratio) {
        rep.max_ratio = ratio;
        rep.witness = {d.n_min() + start, d.n_min() + end};
      }
    }
  }
  return rep;
}

PositiveSequence power_law_sequence(double alpha, Index n_min, Index n_max) {
  if (n_max < n_min) invalid_input("power_law_sequence: n_min > n_max");
  Eigen::VectorXd v(n_max - n_min + 1);
  for (Index n = n_min; n <= n_max; ++n) {
    v[n - n_min] = std::pow(1.0 + std::abs(static_cast<double>(n)), 2.0 * alpha);
  }
  return PositiveSequence(n_min, std::move(v));
}

SignedCriticalSequence signed_from_weights(const PositiveSequence& d) {
  Eigen::VectorXd c(d.size());
  for (Index n = d.n_min(); n <= d.n_max(); ++n) c[n - d.n_min()] = detail::parity_sign(n) * std::sqrt(d(n));
  return SignedCriticalSequence(d.n_min(), std::move(c));
}

PositiveSequence weights_from_signed(const SignedCriticalSequence& c) {
  if (c.has_zero()) invalid_input("weights_from_signed: zero critical value");
  return PositiveSequence(c.n_min(), c.values().array().square().matrix());
}

LogIncrementReport log_increment_bound(const SignedCriticalSequence& c, double C_ratio) {
  if (c.has_zero()) invalid_input("log_increment_bound: zero critical value");
  if (!(C_ratio > 0.0)) invalid_input("log_increment_bound: C_ratio must be positive");
  const Eigen::ArrayXd logs = c.values().array().abs().log();
  const double half_log_c = 0.5 * std::log(C_ratio);

  LogIncrementReport rep;
  rep.worst_excess = -std::numeric_limits<double>::infinity();
  for (Index i = 0; i < logs.size(); ++i) {
    for (Index j = i + 1; j < logs.size(); ++j) {
      const double lhs = std::abs(logs[i] - logs[j]);
      const double rhs = half_log_c + std::log(static_cast<double>(j - i) + 1.0);
      const double excess = lhs - rhs;
      if (excess > rep.worst_excess) {
        rep.worst_excess = excess;
        rep.worst_pair = {c.n_min() + i, c.n_min() + j};
      }
    }
  }
  if (logs.size() < 2) rep.worst_excess = 0.0;
  rep.holds = rep.worst_excess <= 0.0;
  return rep;
}

double neighbor_tip_bound(const SignedCriticalSequence& c) {
  if (c.has_zero()) invalid_input("neighbor_tip_bound: zero critical value");
  const Eigen::ArrayXd logs = c.values().array().abs().log();
  double worst = 0.0;
  for (Index k = 0; k + 1 < logs.size(); ++k) worst = std::max(worst, std::abs(logs[k] - logs[k + 1]));
  return worst;
}

ContinuousA2Report continuous_a2_scan(const WeightFunction& w, std::span<const double> lengths,
                                      std::span<const double> centers, double rel_tol) {
  if (lengths.empty() || centers.empty()) invalid_input("continuous_a2_scan: empty interval family");
  auto weight = [&w](double x) {
    const double v = w(x);
    if (!(v > 0.0)) numeric_failure("continuous_a2_scan: weight not positive at x = " + std::to_string(x));
    return v;
  };
  auto inverse = [&weight](double x) { return 1.0 / weight(x); };
  const QuadratureOptions opts{rel_tol, 0.0, 4000};

  ContinuousA2Report out;
  out.report.p = 2.0;
  out.report.max_ratio = -std::numeric_limits<double>::infinity();
  for (double len : lengths) {
    if (!(len > 0.0)) invalid_input("continuous_a2_scan: interval lengths must be positive");
    for (double center : centers) {
      const double a = center - 0.5 * len;
      const double b = center + 0.5 * len;
      const double primal = integrate(weight, a, b, opts).value;
      const double dual = integrate(inverse, a, b, opts).value;
      const double ratio = primal * dual / (len * len);
      if (ratio > out.report.max_ratio) {
        out.report.max_ratio = ratio;
        out.worst_center = center;
        out.worst_length = len;
      }
    }
  }
  return out;
}

std::vector<double> default_a2_lengths() {
  std::vector<double> out;
  for (int k = -2; k <= 6; ++k) out.push_back(std::ldexp(1.0, k));
  return out;
}

std::vector<double> default_a2_centers() {
  std::vector<double> out;
  for (int k = -40; k <= 40; ++k) out.push_back(0.25 * k);
  return out;
}

bool ungl_inequality(double p, double q, double alpha) {
  if (!(p > 0.0) || !(q > 0.0)) invalid_input("ungl_inequality: p and q must be positive");
  if (!(alpha >= -0.5 && alpha <= 0.5)) invalid_input("ungl_inequality: alpha must lie in [-1/2, 1/2]");
  const double lower = 2.0 * p * q;
  const double middle = std::pow(p, 1.0 + 2.0 * alpha) * std::pow(q, 1.0 - 2.0 * alpha) +
                        std::pow(p, 1.0 - 2.0 * alpha) * std::pow(q, 1.0 + 2.0 * alpha);
  const double upper = p * p + q * q;
  const double slack = 8.0 * std::numeric_limits<double>::epsilon() * upper;
  return lower <= middle + slack && middle <= upper + slack;
}

}  // namespace cis
