#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "cis/comb.hpp"

namespace cis {

namespace {

bool ordered_core(const Eigen::VectorXd& core, Index N) {
  const double n = static_cast<double>(N);
  if (!(core[0] > -n - 1.0) || !(core[core.size() - 1] < n + 1.0)) return false;
  for (Index k = 0; k + 1 < core.size(); ++k) {
    if (!(core[k + 1] > core[k])) return false;
  }
  return true;
}

class TipModel {
 public:
  TipModel(const SynthesisProblem& problem)
      : N_(problem.targets.n_max()),
        normalization_(std::numbers::pi * problem.tail_value),
        target_logs_(problem.targets.values().array().abs().log().matrix()) {}

  GeneratingFunction function(const Eigen::VectorXd& core) const {
    return GeneratingFunction::sine_tail(N_, core, normalization_);
  }

  /// log|c_n| - log|target_n| on the target gaps.
  Eigen::VectorXd residual(const Eigen::VectorXd& core) const {
    const CriticalData cd = critical_data(function(core), -N_, N_);
    return cd.values.values().array().abs().log().matrix() - target_logs_;
  }

 private:
  Index N_;
  double normalization_;
  Eigen::VectorXd target_logs_;
};

}  // namespace

SynthesisResult synthesize(const SynthesisProblem& problem) {
  const SignedCriticalSequence& targets = problem.targets;
  if (targets.n_min() != -targets.n_max()) invalid_input("synthesize: targets must be indexed [-N, N]");
  if (targets.has_zero()) invalid_input("synthesize: zero target critical value");
  if (!(problem.tail_value > 0.0) || !std::isfinite(problem.tail_value)) {
    invalid_input("synthesize: tail_value must be positive");
  }
  if (problem.padding < 0 || problem.max_iter < 0 || !(problem.fd_step > 0.0)) {
    invalid_input("synthesize: bad solver controls");
  }

  const Index N = targets.n_max();
  const Index size = 2 * N + 1;
  const TipModel model(problem);

  Eigen::VectorXd core(size);
  for (Index k = 0; k < size; ++k) core[k] = static_cast<double>(k - N);
  Eigen::VectorXd r = model.residual(core);
  double cost = r.squaredNorm();

  int iterations = 0;
  // One extra step once the tolerance is met: the sum of squares bounds
  // each tip error only by its square root.
  bool polished = false;
  while (!polished && iterations < problem.max_iter) {
    polished = cost <= problem.residual_tol;
    // Forward-difference Jacobian; the probe direction keeps the node
    // inside its ordering interval.
    Eigen::MatrixXd J(size, size);
    for (Index j = 0; j < size; ++j) {
      Eigen::VectorXd probe = core;
      double h = problem.fd_step;
      probe[j] += h;
      if (!ordered_core(probe, N)) {
        h = -h;
        probe[j] = core[j] + h;
      }
      J.col(j) = (model.residual(probe) - r) / h;
    }
    const Eigen::VectorXd step = J.colPivHouseholderQr().solve(-r);
    if (!step.allFinite()) throw Error(ErrorCode::SolverDiverged, "synthesize: singular Gauss-Newton system");

    double t = 1.0;
    bool ordered_found = false;
    bool improved = false;
    Eigen::VectorXd trial;
    Eigen::VectorXd r_trial;
    while (t > 1e-10) {
      trial = core + t * step;
      if (ordered_core(trial, N)) {
        ordered_found = true;
        r_trial = model.residual(trial);
        if (r_trial.squaredNorm() < cost) {
          improved = true;
          break;
        }
      }
      t *= 0.5;
    }
    if (!ordered_found) throw Error(ErrorCode::SolverDiverged, "synthesize: no step keeps the nodes ordered");
    ++iterations;
    if (!improved) break;

    const double moved = (t * step).lpNorm<Eigen::Infinity>();
    core = trial;
    r = r_trial;
    cost = r.squaredNorm();
    if (moved <= problem.step_tol) break;
  }

  const GeneratingFunction F = model.function(core);
  const CriticalData achieved = critical_data(F, -N, N);

  double tail_mismatch = 0.0;
  if (problem.padding > 0) {
    const double tail_log = std::log(problem.tail_value);
    const CriticalData left = critical_data(F, -N - problem.padding, -N - 1);
    const CriticalData right = critical_data(F, N + 1, N + problem.padding);
    for (const CriticalData* side : {&left, &right}) {
      const Eigen::ArrayXd logs = side->values.values().array().abs().log();
      tail_mismatch = std::max(tail_mismatch, (logs - tail_log).abs().maxCoeff());
    }
  }

  const Index reach = N + std::max<Index>(problem.padding, 1);
  IndexedSequence nodes = IndexedSequence::generate(-reach, reach, [&F](Index n) { return F.node(n); });
  return SynthesisResult{std::move(nodes), N, achieved.values, cost, iterations, cost <= problem.residual_tol,
                         tail_mismatch};
}

}  // namespace cis
