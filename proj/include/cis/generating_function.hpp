#pragma once

#include <complex>
#include <limits>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "cis/sequence.hpp"

namespace cis {

using Complex = std::complex<double>;

/// prod_{|lambda_n| < R} (1 - z / lambda_n), with a zero node contributing z.
struct SymmetricProduct {
  IndexedSequence nodes;
  double radius = std::numeric_limits<double>::infinity();
};

/// sin(pi z)/pi * prod_{|n| <= N} (z - lambda_n)/(z - n): lambda_n = n
/// outside the core indices [-N, N]. Exact, no truncation.
struct SineTail {
  Index half_width = 0;
  Eigen::VectorXd core;  // core[n + N] = lambda_n
};

/// Real entire function with simple real zeros, in one of two
/// representations, times a nonzero real normalization.
class GeneratingFunction {
 public:
  using Representation = std::variant<SymmetricProduct, SineTail>;

  /// Nodes with |lambda| >= radius are ignored.
  static GeneratingFunction symmetric_product(IndexedSequence nodes,
                                              double radius = std::numeric_limits<double>::infinity(),
                                              double normalization = 1.0);

  /// core must be indexed exactly [-N, N], strictly increasing, and
  /// interlace the integer tail: lambda_{-N} > -N - 1, lambda_N < N + 1.
  static GeneratingFunction sine_tail(Index half_width, Eigen::VectorXd core, double normalization = 1.0);
  static GeneratingFunction sine_tail(const IndexedSequence& core, double normalization = 1.0);

  /// sin(pi z)/pi: the N = 0 sine tail with lambda_0 = 0.
  static GeneratingFunction sine(double normalization = 1.0);

  /// Sine tail when the window is [-N, N] and interlaces the integer
  /// tail, symmetric product over the whole window otherwise.
  static GeneratingFunction for_nodes(const IndexedSequence& nodes, double normalization = 1.0);

  static bool tail_compatible(const IndexedSequence& nodes);

  const Representation& representation() const { return rep_; }
  bool is_sine_tail() const { return std::holds_alternative<SineTail>(rep_); }
  double normalization() const { return normalization_; }
  GeneratingFunction with_normalization(double normalization) const;

  /// Index range of the zeros this function knows about. Unbounded for a
  /// sine tail.
  Index first_index() const { return first_; }
  Index last_index() const { return last_; }
  bool has_node(Index n) const { return n >= first_ && n <= last_; }

  /// Zero lambda_n.
  double node(Index n) const;

  /// Index range used when the caller does not pass one: the core for a
  /// sine tail, the included nodes for a product.
  std::pair<Index, Index> natural_range() const;

  /// Zeros inside [a, b], ascending.
  std::vector<double> nodes_between(double a, double b) const;

 private:
  GeneratingFunction(Representation rep, double normalization, Index first, Index last)
      : rep_(std::move(rep)), normalization_(normalization), first_(first), last_(last) {}

  Representation rep_;
  double normalization_ = 1.0;
  Index first_ = 0;
  Index last_ = 0;
};

/// F(z). Real arguments take a real path, so the imaginary part is exactly
/// zero. Throws NumericFailure (log value attached) when |F| overflows.
Complex eval(const GeneratingFunction& F, Complex z);
double eval(const GeneratingFunction& F, double x);

/// log|F(z)|, never overflowing; -inf at a zero.
double log_modulus(const GeneratingFunction& F, Complex z);

/// log|F(z)| + i Arg F(z) with Arg in (-pi, pi], valid where F itself
/// would overflow.
Complex principal_log(const GeneratingFunction& F, Complex z);

/// F'(z)/F(z). Throws Pole at a zero.
Complex eval_log_derivative(const GeneratingFunction& F, Complex z);
double eval_log_derivative(const GeneratingFunction& F, double x);

/// F(z)/(z - lambda_k), the function with the k-th zero factored out.
Complex eval_removed(const GeneratingFunction& F, Complex z, Index k);

/// F'(lambda_k) by factor removal.
double derivative_at_node(const GeneratingFunction& F, Index k);

/// |F'(lambda_n)|^2 for n in [first, last] (natural range by default).
PositiveSequence derivative_at_zeros(const GeneratingFunction& F);
PositiveSequence derivative_at_zeros(const GeneratingFunction& F, Index first, Index last);

/// Critical point x_n in each gap (lambda_{n-1}, lambda_n), n = first..last,
/// and c_n = sign * F(x_n). sign is +-1, chosen so (-1)^n c_n >= 0.
struct CriticalData {
  Eigen::VectorXd points;
  SignedCriticalSequence values;
  double sign = 1.0;
};

CriticalData critical_data(const GeneratingFunction& F, Index first_gap, Index last_gap);

/// |F'(lambda_n)| / |c_n| over n = first..last (gap n ends at lambda_n).
struct CriticalRatioReport {
  Index first = 0;
  Eigen::VectorXd ratios;
  double min = 0.0;
  double max = 0.0;
};

CriticalRatioReport derivative_critical_ratio(const GeneratingFunction& F, Index first, Index last);

/// int_{-T}^{T} log+|F(t)| / (1 + t^2) dt.
double cartwright_integral(const GeneratingFunction& F, double T, double rel_tol = 1e-8);

struct LineSample {
  double x;
  double abs_F;
};

/// |F(x + iy)| on x = x0, x0 + step, ..., <= x1.
std::vector<LineSample> line_scan(const GeneratingFunction& F, double y, double x0, double x1, double step);

struct LineBounds {
  double min = 0.0;
  double max = 0.0;
};

LineBounds line_modulus_bounds(const GeneratingFunction& F, double y, double x0, double x1, double step);

/// log|F(iR)|/R for each R (increasing).
std::vector<double> type_estimate(const GeneratingFunction& F, std::span<const double> radii);

/// x -> |F(x + iy)|^2, y != 0.
class WeightTrace {
 public:
  WeightTrace(GeneratingFunction F, double y = 1.0);

  double operator()(double x) const;
  const GeneratingFunction& function() const { return F_; }
  double y() const { return y_; }

 private:
  GeneratingFunction F_;
  double y_;
};

}  // namespace cis
