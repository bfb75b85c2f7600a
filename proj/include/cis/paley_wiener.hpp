#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>

#include "cis/generating_function.hpp"

namespace cis {

/// Data a_n on the nodes, to be interpolated by f in PW^2_pi.
class InterpolationProblem {
 public:
  /// F defaults to GeneratingFunction::for_nodes(nodes).
  InterpolationProblem(IndexedSequence nodes, Eigen::VectorXcd data);
  InterpolationProblem(IndexedSequence nodes, Eigen::VectorXcd data, GeneratingFunction F);

  const IndexedSequence& nodes() const { return nodes_; }
  const Eigen::VectorXcd& data() const { return data_; }
  const GeneratingFunction& function() const { return F_; }
  /// F'(lambda_n) over the window.
  const Eigen::VectorXd& derivatives() const { return derivatives_; }

 private:
  IndexedSequence nodes_;
  Eigen::VectorXcd data_;
  GeneratingFunction F_;
  Eigen::VectorXd derivatives_;
};

/// Lagrange-type series sum_n a_n F(z) / (F'(lambda_n)(z - lambda_n)) over
/// the data window. Exact at every node; truncation only shows away from
/// the window interior.
Complex interpolate_eval(const InterpolationProblem& problem, Complex z);

/// 2 sin(pi x)/x with value 2 pi at 0; exact zero at nonzero integers.
template <typename Scalar>
Scalar gram_kernel(Scalar diff) {
  using std::abs;
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  if (abs(diff) < Scalar(1e-6)) {
    const Scalar t = pi * diff;
    return Scalar(2) * pi * (Scalar(1) - t * t / Scalar(6));
  }
  const Scalar m = std::round(diff);
  const Scalar sign = (static_cast<long long>(m) % 2 == 0) ? Scalar(1) : Scalar(-1);
  return Scalar(2) * sign * std::sin(pi * (diff - m)) / diff;
}

/// G(n, m) = int_{-pi}^{pi} exp(i (lambda_n - lambda_m) t) dt, closed form.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> gram_matrix(const IndexedSequence& nodes) {
  const Index n = nodes.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> G(n, n);
  for (Index j = 0; j < n; ++j) {
    G(j, j) = Scalar(2) * std::numbers::pi_v<Scalar>;
    for (Index k = j + 1; k < n; ++k) {
      const Scalar v = gram_kernel(static_cast<Scalar>(nodes.values()[j] - nodes.values()[k]));
      G(j, k) = v;
      G(k, j) = v;
    }
  }
  return G;
}

struct RieszBoundsReport {
  Index size = 0;
  double lower = 0.0;
  double upper = 0.0;
};

/// Extreme eigenvalues of the centered size x size principal Gram section:
/// finite-section estimates of the Riesz bounds of {exp(i lambda_n t)}.
/// A nonpositive lower value is reported as is.
RieszBoundsReport riesz_bounds(const IndexedSequence& nodes, Index size);

struct NormEquivalenceReport {
  double l2_data = 0.0;
  double l2_function = 0.0;
  /// l2_data / l2_function; NaN when both vanish.
  double ratio = 0.0;
  bool degenerate = false;
};

/// sum |a_n|^2 against int_{-T}^{T} |f|^2 (relative tolerance rel_tol).
NormEquivalenceReport norm_equivalence_check(const InterpolationProblem& problem, double T, double rel_tol = 1e-6);

}  // namespace cis
