#include "cis/paley_wiener.hpp"

#include <Eigen/Eigenvalues>

#include <limits>
#include <string>

#include "cis/quadrature.hpp"

namespace cis {

InterpolationProblem::InterpolationProblem(IndexedSequence nodes, Eigen::VectorXcd data)
    : InterpolationProblem(nodes, std::move(data), GeneratingFunction::for_nodes(nodes)) {}

InterpolationProblem::InterpolationProblem(IndexedSequence nodes, Eigen::VectorXcd data, GeneratingFunction F)
    : nodes_(std::move(nodes)), data_(std::move(data)), F_(std::move(F)) {
  if (data_.size() != nodes_.size()) invalid_input("InterpolationProblem: data and nodes differ in length");
  if (!data_.allFinite()) invalid_input("InterpolationProblem: non-finite data");
  derivatives_.resize(nodes_.size());
  for (Index n = nodes_.n_min(); n <= nodes_.n_max(); ++n) {
    if (!F_.has_node(n) || F_.node(n) != nodes_(n)) {
      invalid_input("InterpolationProblem: zero " + std::to_string(n) + " of F does not match the node");
    }
    const double fp = derivative_at_node(F_, n);
    if (fp == 0.0 || !std::isfinite(fp)) numeric_failure("InterpolationProblem: F'(lambda_n) vanishes");
    derivatives_[n - nodes_.n_min()] = fp;
  }
}

Complex interpolate_eval(const InterpolationProblem& problem, Complex z) {
  const IndexedSequence& nodes = problem.nodes();
  const GeneratingFunction& F = problem.function();
  const Complex Fz = eval(F, z);
  Complex sum = 0.0;
  for (Index k = 0; k < nodes.size(); ++k) {
    const Index n = nodes.n_min() + k;
    const Complex a = problem.data()[k];
    if (a == 0.0) continue;
    const Complex dz = z - nodes.values()[k];
    // Removable singularity: evaluate F(z)/(z - lambda_n) with the factor taken out.
    const Complex cardinal = (std::abs(dz) < 1e-8) ? eval_removed(F, z, n) : Fz / dz;
    sum += a * cardinal / problem.derivatives()[k];
  }
  return sum;
}

RieszBoundsReport riesz_bounds(const IndexedSequence& nodes, Index size) {
  if (size < 1 || size % 2 == 0) invalid_input("riesz_bounds: size must be odd and positive");
  if (size > nodes.size()) invalid_input("riesz_bounds: size exceeds the node window");
  const Index start = (nodes.size() - size) / 2;
  const Eigen::MatrixXd G = gram_matrix<double>(nodes).block(start, start, size, size);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(G, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) numeric_failure("riesz_bounds: eigen-decomposition failed");
  return {size, solver.eigenvalues()[0], solver.eigenvalues()[size - 1]};
}

NormEquivalenceReport norm_equivalence_check(const InterpolationProblem& problem, double T, double rel_tol) {
  if (!(T > 0.0) || !std::isfinite(T)) invalid_input("norm_equivalence_check: T must be positive");
  NormEquivalenceReport rep;
  rep.l2_data = problem.data().squaredNorm();
  if (rep.l2_data == 0.0) {
    rep.degenerate = true;
    rep.ratio = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  auto integrand = [&problem](double x) { return std::norm(interpolate_eval(problem, Complex(x, 0.0))); };
  const std::vector<double> breaks = uniform_breakpoints(-T, T, 1.0);
  rep.l2_function = integrate(integrand, std::span<const double>(breaks), QuadratureOptions{rel_tol, 0.0, 1000000}).value;
  rep.ratio = rep.l2_data / rep.l2_function;
  return rep;
}

}  // namespace cis
