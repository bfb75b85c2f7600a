#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "cis/error.hpp"

namespace cis {

struct QuadratureOptions {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;
  int max_intervals = 20000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes (1, 3, 5, 7).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <typename Fn>
Segment kronrod_segment(Fn& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto eval = [&](double x) {
    const double y = f(x);
    if (!std::isfinite(y)) numeric_failure("quadrature: non-finite integrand at x = " + std::to_string(x));
    return y;
  };
  const double fc = eval(mid);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = eval(mid - dx) + eval(mid + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod 7/15 integration over the panels given
/// by consecutive breakpoints. Bisects the panel with the largest error
/// estimate until the summed estimate meets max(abs_tol, rel_tol |I|).
/// Throws NumericFailure when the interval budget runs out or the
/// integrand returns a non-finite value.
template <typename Fn>
QuadratureResult integrate(Fn&& f, std::span<const double> breakpoints, const QuadratureOptions& opts = {}) {
  if (breakpoints.size() < 2) invalid_input("integrate: need at least two breakpoints");
  std::priority_queue<detail::Segment> heap;
  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    if (!(breakpoints[k + 1] > breakpoints[k])) invalid_input("integrate: breakpoints must increase");
    heap.push(detail::kronrod_segment(f, breakpoints[k], breakpoints[k + 1]));
  }

  auto totals = [&heap] {
    // Re-summing from scratch keeps cancellation error out of the
    // running totals; the heap is small enough for this to be cheap.
    auto copy = heap;
    double value = 0.0, error = 0.0, comp = 0.0;
    while (!copy.empty()) {
      const double y = copy.top().value - comp;
      const double t = value + y;
      comp = (t - value) - y;
      value = t;
      error += copy.top().error;
      copy.pop();
    }
    return std::pair{value, error};
  };

  double value = 0.0, error = 0.0;
  double running_error = 0.0;
  {
    auto [v, e] = totals();
    value = v;
    error = e;
    running_error = e;
  }
  int intervals = static_cast<int>(heap.size());
  while (running_error > std::max(opts.abs_tol, opts.rel_tol * std::abs(value))) {
    if (intervals >= opts.max_intervals) {
      numeric_failure("quadrature: no convergence after " + std::to_string(intervals) +
                      " intervals (error estimate " + std::to_string(running_error) + ")");
    }
    const detail::Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) numeric_failure("quadrature: interval collapsed below resolution");
    heap.pop();
    const auto left = detail::kronrod_segment(f, worst.a, mid);
    const auto right = detail::kronrod_segment(f, mid, worst.b);
    heap.push(left);
    heap.push(right);
    ++intervals;
    value += left.value + right.value - worst.value;
    running_error += left.error + right.error - worst.error;
    if (intervals % 256 == 0 || running_error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value))) {
      auto [v, e] = totals();
      value = v;
      running_error = e;
    }
  }
  error = running_error;
  return {value, error, intervals};
}

template <typename Fn>
QuadratureResult integrate(Fn&& f, double a, double b, const QuadratureOptions& opts = {}) {
  const std::array<double, 2> ends{a, b};
  return integrate(std::forward<Fn>(f), std::span<const double>(ends), opts);
}

/// Breakpoints a, a+width, ..., b (last panel may be shorter).
std::vector<double> uniform_breakpoints(double a, double b, double width);

}  // namespace cis
