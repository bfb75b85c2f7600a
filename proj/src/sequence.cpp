#include "cis/sequence.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace cis {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::NumericFailure: return "NUMERIC_FAILURE";
    case ErrorCode::Pole: return "POLE";
    case ErrorCode::SolverDiverged: return "SOLVER_DIVERGED";
    case ErrorCode::NotConverged: return "NOT_CONVERGED";
  }
  return "UNKNOWN";
}

namespace {

void require_finite(const Eigen::VectorXd& v, const char* what) {
  if (!v.allFinite()) invalid_input(std::string(what) + ": non-finite entry");
}

}  // namespace

IndexedSequence::IndexedSequence(Index n_min, Eigen::VectorXd values) : Window(n_min, std::move(values)) {
  if (values_.size() < 2) invalid_input("IndexedSequence: need at least 2 entries");
  require_finite(values_, "IndexedSequence");
  for (Index k = 0; k + 1 < values_.size(); ++k) {
    if (!(values_[k + 1] > values_[k])) {
      invalid_input("IndexedSequence: values not strictly increasing at index " + std::to_string(n_min_ + k));
    }
  }
}

IndexedSequence IndexedSequence::slice(Index first, Index last) const {
  if (!contains(first) || !contains(last) || last < first) invalid_input("IndexedSequence::slice: range outside window");
  return IndexedSequence(first, values_.segment(first - n_min_, last - first + 1));
}

PositiveSequence::PositiveSequence(Index n_min, Eigen::VectorXd values) : Window(n_min, std::move(values)) {
  if (values_.size() < 1) invalid_input("PositiveSequence: empty");
  require_finite(values_, "PositiveSequence");
  if ((values_.array() <= 0.0).any()) invalid_input("PositiveSequence: nonpositive entry");
}

PositiveSequence PositiveSequence::slice(Index first, Index last) const {
  if (!contains(first) || !contains(last) || last < first) invalid_input("PositiveSequence::slice: range outside window");
  return PositiveSequence(first, values_.segment(first - n_min_, last - first + 1));
}

SignedCriticalSequence::SignedCriticalSequence(Index n_min, Eigen::VectorXd values)
    : Window(n_min, std::move(values)) {
  if (values_.size() < 1) invalid_input("SignedCriticalSequence: empty");
  require_finite(values_, "SignedCriticalSequence");
  for (Index k = 0; k < values_.size(); ++k) {
    if (detail::parity_sign(n_min_ + k) * values_[k] < 0.0) {
      invalid_input("SignedCriticalSequence: sign alternation violated at index " + std::to_string(n_min_ + k));
    }
  }
}

SeparationReport separation(const IndexedSequence& seq) {
  const Eigen::VectorXd& v = seq.values();
  const Eigen::VectorXd gaps = v.tail(v.size() - 1) - v.head(v.size() - 1);
  SeparationReport rep;
  rep.delta = gaps.minCoeff();
  rep.Delta = gaps.maxCoeff();
  rep.is_separated = rep.delta > 0.0;
  return rep;
}

KadetsReport kadets_check(const IndexedSequence& seq) {
  double worst = 0.0;
  for (Index n = seq.n_min(); n <= seq.n_max(); ++n) {
    worst = std::max(worst, std::abs(seq(n) - static_cast<double>(n)));
  }
  return {worst, worst < 0.25};
}

DensityReport density(const IndexedSequence& seq, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) invalid_input("density: r must be positive");
  const Eigen::VectorXd& v = seq.values();
  const double lo = v[0];
  const double hi = v[v.size() - 1];
  const double x_lo = lo + r;
  const double x_hi = hi - r;
  if (x_hi < x_lo) invalid_input("density: r exceeds half the window span");

  const double* first = v.data();
  const double* last = v.data() + v.size();
  double best = 0.0;
  double worst = std::numeric_limits<double>::infinity();
  auto visit = [&](double x) {
    // Half-open window [x - r, x + r).
    const auto a = std::lower_bound(first, last, x - r);
    const auto b = std::lower_bound(first, last, x + r);
    const double count = static_cast<double>(b - a);
    best = std::max(best, count);
    worst = std::min(worst, count);
  };

  const double step = 0.5 * separation(seq).delta;
  const auto steps = static_cast<Index>(std::floor((x_hi - x_lo) / step));
  for (Index k = 0; k <= steps; ++k) visit(std::min(x_lo + static_cast<double>(k) * step, x_hi));
  visit(x_hi);
  for (Index k = 0; k < v.size(); ++k) {
    if (v[k] >= x_lo && v[k] <= x_hi) visit(v[k]);
  }
  return {r, best / (2.0 * r), worst / (2.0 * r)};
}

bool relative_density_check(const IndexedSequence& seq, double eps) {
  if (!(eps > 0.0)) invalid_input("relative_density_check: eps must be positive");
  return separation(seq).Delta <= 2.0 * eps;
}

}  // namespace cis
