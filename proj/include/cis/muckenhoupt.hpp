#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "cis/sequence.hpp"

namespace cis {

/// Worst window found by a Muckenhoupt scan.
///
/// For the discrete scan the witness holds the first and last sequence
/// index of the maximizing window and window_cap the longest window
/// length scanned. For the continuous scan the witness is unused (0, 0);
/// see ContinuousA2Report for the interval.
struct MuckenhouptReport {
  double p = 2.0;
  double max_ratio = 0.0;
  std::pair<Index, Index> witness{0, 0};
  Index window_cap = 0;
};

/// max over windows I of consecutive indices, |I| <= window_cap, of
///   (sum_I d) (sum_I d^{-1/(p-1)})^{p-1} / |I|^p.
/// Window sums are accumulated start-by-start with Neumaier compensation,
/// O(size * window_cap). Ties keep the first window found.
MuckenhouptReport discrete_ratio(const PositiveSequence& d, double p, Index window_cap);

inline MuckenhouptReport discrete_ratio(const PositiveSequence& d, double p = 2.0) {
  return discrete_ratio(d, p, d.size());
}

/// d_n = (1 + |n|)^{2 alpha}. No restriction on alpha.
PositiveSequence power_law_sequence(double alpha, Index n_min, Index n_max);

/// c_n = (-1)^n sqrt(d_n).
SignedCriticalSequence signed_from_weights(const PositiveSequence& d);

/// d_n = c_n^2; rejects zero entries.
PositiveSequence weights_from_signed(const SignedCriticalSequence& c);

struct LogIncrementReport {
  bool holds = true;
  /// Pair (p, q) with the largest value of lhs - rhs; the first violation
  /// in scan order when several share it.
  std::pair<Index, Index> worst_pair{0, 0};
  double worst_excess = 0.0;
};

/// Checks |log|c_p| - log|c_q|| <= log(C_ratio)/2 + log(|p - q| + 1) for
/// every pair in the window. This is the pairwise consequence of
/// c_p^2 / c_q^2 <= C (|p - q| + 1)^2 for a window containing p and q.
LogIncrementReport log_increment_bound(const SignedCriticalSequence& c, double C_ratio);

/// max_n |log|c_n| - log|c_{n+1}||; 0 for a single-entry window.
double neighbor_tip_bound(const SignedCriticalSequence& c);

/// Positive weight x -> w(x).
using WeightFunction = std::function<double(double)>;

struct ContinuousA2Report {
  MuckenhouptReport report;
  double worst_center = 0.0;
  double worst_length = 0.0;
};

/// max over the interval family {[c - l/2, c + l/2] : l in lengths, c in centers}
/// of (int_I w)(int_I 1/w) / |I|^2, each integral by adaptive quadrature at
/// relative tolerance rel_tol. Necessary-condition scan only.
ContinuousA2Report continuous_a2_scan(const WeightFunction& w, std::span<const double> lengths,
                                      std::span<const double> centers, double rel_tol = 1e-8);

/// Default family: lengths 2^k, k = -2..6; centers -10..10 step 1/4.
std::vector<double> default_a2_lengths();
std::vector<double> default_a2_centers();

/// Both sides of 2pq <= p^{1+2a} q^{1-2a} + p^{1-2a} q^{1+2a} <= p^2 + q^2,
/// with a rounding slack of a few ulps relative to p^2 + q^2.
bool ungl_inequality(double p, double q, double alpha);

}  // namespace cis
