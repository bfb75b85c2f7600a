#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <utility>

#include "cis/error.hpp"

namespace cis {

using Index = Eigen::Index;

namespace detail {

/// Finite window n_min..n_min+size-1 of a bi-infinite sequence.
class Window {
 public:
  Index n_min() const { return n_min_; }
  Index n_max() const { return n_min_ + values_.size() - 1; }
  Index size() const { return values_.size(); }
  bool contains(Index n) const { return n >= n_min() && n <= n_max(); }

  /// Entry with sequence index n (not storage position).
  double operator()(Index n) const { return values_[n - n_min_]; }
  const Eigen::VectorXd& values() const { return values_; }

  friend bool operator==(const Window& a, const Window& b) {
    return a.n_min_ == b.n_min_ && a.values_.size() == b.values_.size() && a.values_ == b.values_;
  }

 protected:
  Window(Index n_min, Eigen::VectorXd values) : n_min_(n_min), values_(std::move(values)) {}

  Index n_min_;
  Eigen::VectorXd values_;
};

inline double parity_sign(Index n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace detail

/// Strictly increasing real nodes lambda_n, n = n_min..n_max, at least two entries.
class IndexedSequence : public detail::Window {
 public:
  IndexedSequence(Index n_min, Eigen::VectorXd values);

  template <typename Fn>
  static IndexedSequence generate(Index n_min, Index n_max, Fn&& fn) {
    if (n_max < n_min) invalid_input("generate: empty index range");
    Eigen::VectorXd v(n_max - n_min + 1);
    for (Index n = n_min; n <= n_max; ++n) v[n - n_min] = static_cast<double>(fn(n));
    return IndexedSequence(n_min, std::move(v));
  }

  static IndexedSequence integers(Index n_min, Index n_max) {
    return generate(n_min, n_max, [](Index n) { return static_cast<double>(n); });
  }

  IndexedSequence slice(Index first, Index last) const;
};

/// Strictly positive weights d_n.
class PositiveSequence : public detail::Window {
 public:
  PositiveSequence(Index n_min, Eigen::VectorXd values);

  PositiveSequence slice(Index first, Index last) const;
};

/// Values with (-1)^n c_n >= 0. Zero entries are allowed here; the
/// operations that take logarithms reject them.
class SignedCriticalSequence : public detail::Window {
 public:
  SignedCriticalSequence(Index n_min, Eigen::VectorXd values);

  bool has_zero() const { return (values_.array() == 0.0).any(); }
};

// Window statistics. The sup/inf over Z of the bi-infinite setting become
// max/min over the finite window, so delta is an upper estimate of the true
// separation constant and Delta a lower estimate of the true gap constant.

struct SeparationReport {
  double delta = 0.0;
  double Delta = 0.0;
  bool is_separated = false;
};

struct KadetsReport {
  double sup_deviation = 0.0;
  bool passes = false;
};

struct DensityReport {
  double r = 0.0;
  double d_plus = 0.0;
  double d_minus = 0.0;
};

SeparationReport separation(const IndexedSequence& seq);

/// Largest |lambda_n - n| over the window; passes iff strictly below 1/4.
KadetsReport kadets_check(const IndexedSequence& seq);

/// Window-r node counts over [x - r, x + r) for every center x whose window
/// lies inside [lambda_first, lambda_last]. Centers: a grid of step delta/2
/// plus every node.
DensityReport density(const IndexedSequence& seq, double r);

/// True iff no gap exceeds 2 eps, i.e. every [x - eps, x + eps] inside the
/// data span meets a node.
bool relative_density_check(const IndexedSequence& seq, double eps);

}  // namespace cis
