#pragma once

#include <numbers>
#include <span>
#include <vector>

#include "cis/generating_function.hpp"
#include "cis/muckenhoupt.hpp"

namespace cis {

/// Omega(s): the plane minus the leftward slits {x + i n pi : x <= log|c_n|}.
class CombDomain {
 public:
  explicit CombDomain(SignedCriticalSequence tips);

  const SignedCriticalSequence& tips() const { return tips_; }

  /// End point log|c_n| + i n pi of slit n.
  Complex tip(Index n) const;

  /// False on a slit of the window, true elsewhere.
  bool contains(Complex w) const;

 private:
  SignedCriticalSequence tips_;
};

/// phi = log F on the closed lower half-plane minus the zeros, pinned at
/// the anchor with Im phi(anchor) = Arg F(anchor) in (-pi, pi].
struct BranchTrackedLog {
  GeneratingFunction F;
  Complex anchor{0.0, -1.0};
};

/// phi(z) by continuation of log F along the segment anchor -> z.
/// Requires Im z <= 0 and Im anchor < 0. Re phi(z) = log|F(z)|.
Complex phi_eval(const BranchTrackedLog& L, Complex z, Complex anchor);
inline Complex phi_eval(const BranchTrackedLog& L, Complex z) { return phi_eval(L, z, L.anchor); }

/// phi at the last vertex of a polyline that starts at the pinned anchor.
Complex phi_along(const BranchTrackedLog& L, std::span<const Complex> polyline);

/// Continues a known value phi_from at z_from along the segment to z_to.
/// Steps are halved until the argument increment agrees with the
/// log-derivative prediction, so no 2 pi jump is missed.
Complex continue_log(const GeneratingFunction& F, Complex z_from, Complex phi_from, Complex z_to);

struct TracePoint {
  double x = 0.0;
  double re_phi = 0.0;
  double im_phi = 0.0;
};

struct GapTrace {
  Index gap = 0;
  /// Im phi at the maximizer of Re phi on the gap.
  double im_level = 0.0;
  /// max |Im phi - im_level| over the central half of the gap.
  double deviation = 0.0;
  double re_max = 0.0;
  double argmax = 0.0;
  std::vector<TracePoint> points;
};

/// phi along (lambda_{n-1} + eps, lambda_n - eps) - i eps for each gap n in
/// [first_gap, last_gap], one continuous branch from the anchor. Consecutive
/// im_level values differ by pi: the gaps map onto the slit levels.
std::vector<GapTrace> boundary_trace(const BranchTrackedLog& L, double eps, Index first_gap, Index last_gap,
                                     Index samples_per_gap = 201);

// ---------------------------------------------------------------------------
// Synthesis: prescribed critical values -> nodes.

struct SynthesisProblem {
  /// Desired c_n on [-N, N]; only |c_n| enters the fit.
  SignedCriticalSequence targets;
  /// |c_n| far out in the tail; fixes the normalization pi * tail_value.
  double tail_value = 1.0 / std::numbers::pi;
  /// Extra gaps on each side that are extracted and reported.
  Index padding = 4;
  int max_iter = 200;
  double residual_tol = 1e-10;
  double step_tol = 1e-12;
  double fd_step = 1e-6;
};

struct SynthesisResult {
  /// Zeros on [-N - P, N + P], P = max(padding, 1): the solved core plus
  /// the integer tail next to it.
  IndexedSequence nodes;
  Index half_width = 0;
  SignedCriticalSequence achieved;
  /// Sum of squared log-modulus errors over the target gaps.
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  /// max |log|c_n| - log tail_value| over the padding gaps.
  double tail_mismatch = 0.0;
};

/// Solves for the core nodes of a sine-tail generating function whose
/// critical values on gaps [-N, N] have the target moduli. Damped
/// Gauss-Newton in log-modulus with a forward-difference Jacobian, starting
/// from the integers. Steps are halved until the nodes stay strictly
/// ordered and interlace the integer tail.
///
/// Throws SolverDiverged when no ordered step exists. A residual above
/// residual_tol at the iteration limit is returned with converged = false.
SynthesisResult synthesize(const SynthesisProblem& problem);

// ---------------------------------------------------------------------------
// Certificate

enum class Verdict {
  ConsistentWithCis,
  FailsSeparation,
  FailsDensity,
  A2UnboundedTrend,
};

const char* to_string(Verdict v);

struct CertifyOptions {
  /// Allowed |D+- - 1| at r = span/4.
  double density_tol = 0.1;
  /// Relative growth of the discrete A2 constant from the central half
  /// window to the full window that flags an unbounded trend.
  double trend_threshold = 0.25;
};

struct CertifyReport {
  bool separated = false;
  SeparationReport separation;
  MuckenhouptReport a2_report;
  MuckenhouptReport a2_half_report;
  DensityReport densities;
  bool sine_tail = false;
  Verdict verdict = Verdict::ConsistentWithCis;
};

/// Desk-scale check of the node window against separation, density one,
/// and a bounded discrete A2 constant for d_n = |F'(lambda_n)|^2.
CertifyReport certify(const IndexedSequence& nodes, Index window_cap, const CertifyOptions& opts = {});
inline CertifyReport certify(const IndexedSequence& nodes) { return certify(nodes, nodes.size()); }

}  // namespace cis
