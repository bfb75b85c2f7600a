#include "cis/comb.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cis {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a <= -kPi ? a + 2.0 * kPi : a;
}

}  // namespace

CombDomain::CombDomain(SignedCriticalSequence tips) : tips_(std::move(tips)) {
  if (tips_.has_zero()) invalid_input("CombDomain: zero critical value");
}

Complex CombDomain::tip(Index n) const {
  if (!tips_.contains(n)) invalid_input("CombDomain::tip: index outside window");
  return {std::log(std::abs(tips_(n))), static_cast<double>(n) * kPi};
}

bool CombDomain::contains(Complex w) const {
  const double level = w.imag() / kPi;
  const double nearest = std::round(level);
  if (level != nearest) return true;
  const auto n = static_cast<Index>(nearest);
  if (!tips_.contains(n)) return true;
  return w.real() > std::log(std::abs(tips_(n)));
}

// ---------------------------------------------------------------------------
// Branch tracking

Complex continue_log(const GeneratingFunction& F, Complex z_from, Complex phi_from, Complex z_to) {
  const Complex span = z_to - z_from;
  if (span == 0.0) return phi_from;

  // Throws Pole when the endpoint is a zero.
  principal_log(F, z_to);

  Complex z = z_from;
  Complex last_log = principal_log(F, z_from);
  double im_phi = phi_from.imag();
  double t = 0.0;
  double h = 1.0 / 64.0;
  while (t < 1.0) {
    h = std::min(h, 1.0 - t);
    const double t_next = (1.0 - t - h < 1e-15) ? 1.0 : t + h;
    const Complex z_next = (t_next == 1.0) ? z_to : z_from + t_next * span;
    const Complex log_next = principal_log(F, z_next);
    const double delta = wrap_angle(log_next.imag() - last_log.imag());
    const Complex mid = 0.5 * (z + z_next);
    const double predicted = (eval_log_derivative(F, mid) * (z_next - z)).imag();
    const bool accept = std::abs(delta) < 0.5 * kPi && std::abs(delta - predicted) < 0.25;
    if (!accept) {
      h *= 0.5;
      if (h < 1e-14) throw Error(ErrorCode::NumericFailure, "continue_log: step subdivision did not converge");
      continue;
    }
    im_phi += delta;
    last_log = log_next;
    z = z_next;
    t = t_next;
    h = std::min(2.0 * h, 1.0 / 8.0);
  }
  // Snap to the exact principal argument plus the tracked multiple of 2 pi.
  const double turns = std::round((im_phi - last_log.imag()) / (2.0 * kPi));
  return {last_log.real(), last_log.imag() + 2.0 * kPi * turns};
}

Complex phi_eval(const BranchTrackedLog& L, Complex z, Complex anchor) {
  if (!(anchor.imag() < 0.0)) invalid_input("phi_eval: anchor must lie in the open lower half-plane");
  if (z.imag() > 0.0) invalid_input("phi_eval: z must satisfy Im z <= 0");
  const Complex pinned = principal_log(L.F, anchor);
  return continue_log(L.F, anchor, pinned, z);
}

Complex phi_along(const BranchTrackedLog& L, std::span<const Complex> polyline) {
  if (polyline.empty()) invalid_input("phi_along: empty polyline");
  if (!(polyline.front().imag() < 0.0)) invalid_input("phi_along: polyline must start in the open lower half-plane");
  Complex phi = principal_log(L.F, polyline.front());
  for (std::size_t k = 1; k < polyline.size(); ++k) {
    if (polyline[k].imag() > 0.0) invalid_input("phi_along: vertex in the upper half-plane");
    phi = continue_log(L.F, polyline[k - 1], phi, polyline[k]);
  }
  return phi;
}

std::vector<GapTrace> boundary_trace(const BranchTrackedLog& L, double eps, Index first_gap, Index last_gap,
                                     Index samples_per_gap) {
  if (!(eps > 0.0)) invalid_input("boundary_trace: eps must be positive");
  if (last_gap < first_gap) invalid_input("boundary_trace: empty gap range");
  if (samples_per_gap < 5) invalid_input("boundary_trace: need at least 5 samples per gap");
  const GeneratingFunction& F = L.F;
  if (!F.has_node(first_gap - 1) || !F.has_node(last_gap)) invalid_input("boundary_trace: gaps outside the zeros");

  const double y = -eps;
  auto slope = [&](double x) { return eval_log_derivative(F, Complex(x, y)).real(); };

  std::vector<GapTrace> out;
  Complex z_prev;
  Complex phi_prev;
  bool started = false;
  for (Index n = first_gap; n <= last_gap; ++n) {
    const double left = F.node(n - 1);
    const double right = F.node(n);
    if (!(right - left > 2.0 * eps)) invalid_input("boundary_trace: eps too large for gap " + std::to_string(n));
    const double a = left + eps;
    const double b = right - eps;

    GapTrace g;
    g.gap = n;
    g.points.reserve(static_cast<std::size_t>(samples_per_gap));
    for (Index k = 0; k < samples_per_gap; ++k) {
      const double x = a + (b - a) * static_cast<double>(k) / static_cast<double>(samples_per_gap - 1);
      const Complex z(x, y);
      const Complex phi = started ? continue_log(F, z_prev, phi_prev, z) : phi_eval(L, z);
      started = true;
      z_prev = z;
      phi_prev = phi;
      g.points.push_back({x, phi.real(), phi.imag()});
    }

    // Maximizer of Re phi: d/dx log|F(x + iy)| = Re(F'/F) changes sign there.
    std::size_t best = 0;
    for (std::size_t k = 1; k < g.points.size(); ++k) {
      if (g.points[k].re_phi > g.points[best].re_phi) best = k;
    }
    double lo = g.points[best == 0 ? 0 : best - 1].x;
    double hi = g.points[std::min(best + 1, g.points.size() - 1)].x;
    if (slope(lo) > 0.0 && slope(hi) < 0.0) {
      while (hi - lo > 1e-13 * (b - a)) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (slope(mid) > 0.0 ? lo : hi) = mid;
      }
      g.argmax = 0.5 * (lo + hi);
    } else {
      g.argmax = g.points[best].x;
    }
    const Complex z_star(g.argmax, y);
    const Complex phi_star = continue_log(F, Complex(g.points[best].x, y),
                                          Complex(g.points[best].re_phi, g.points[best].im_phi), z_star);
    g.re_max = phi_star.real();
    g.im_level = phi_star.imag();

    const double quarter = 0.25 * (right - left);
    for (const auto& p : g.points) {
      if (p.x >= left + quarter && p.x <= right - quarter) {
        g.deviation = std::max(g.deviation, std::abs(p.im_phi - g.im_level));
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certificate

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ConsistentWithCis: return "CONSISTENT_WITH_CIS";
    case Verdict::FailsSeparation: return "FAILS_SEPARATION";
    case Verdict::FailsDensity: return "FAILS_DENSITY";
    case Verdict::A2UnboundedTrend: return "A2_UNBOUNDED_TREND";
  }
  return "UNKNOWN";
}

CertifyReport certify(const IndexedSequence& nodes, Index window_cap, const CertifyOptions& opts) {
  if (window_cap < 1) invalid_input("certify: window_cap must be positive");
  CertifyReport rep;
  rep.separation = separation(nodes);
  rep.separated = rep.separation.is_separated;

  const double span = nodes(nodes.n_max()) - nodes(nodes.n_min());
  rep.densities = density(nodes, 0.25 * span);

  const GeneratingFunction F = GeneratingFunction::for_nodes(nodes);
  rep.sine_tail = F.is_sine_tail();
  const PositiveSequence d = derivative_at_zeros(F, nodes.n_min(), nodes.n_max());
  rep.a2_report = discrete_ratio(d, 2.0, std::min(window_cap, d.size()));

  // Central half of the window, for the doubling trend.
  const Index quarter = d.size() / 4;
  const PositiveSequence half = d.slice(d.n_min() + quarter, d.n_max() - quarter);
  rep.a2_half_report = discrete_ratio(half, 2.0, std::min(window_cap, half.size()));

  if (!rep.separated) {
    rep.verdict = Verdict::FailsSeparation;
  } else if (std::abs(rep.densities.d_plus - 1.0) > opts.density_tol ||
             std::abs(rep.densities.d_minus - 1.0) > opts.density_tol) {
    rep.verdict = Verdict::FailsDensity;
  } else if (rep.a2_report.max_ratio > (1.0 + opts.trend_threshold) * rep.a2_half_report.max_ratio) {
    rep.verdict = Verdict::A2UnboundedTrend;
  } else {
    rep.verdict = Verdict::ConsistentWithCis;
  }
  return rep;
}

}  // namespace cis
