#include "cis/generating_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cis/quadrature.hpp"

namespace cis {

namespace {

constexpr double kPi = std::numbers::pi;
// log(DBL_MAX) rounded down.
constexpr double kMaxLog = 709.0;

template <typename T>
constexpr bool kIsComplex = !std::is_same_v<T, double>;

double re(double x) { return x; }
double re(const Complex& z) { return z.real(); }
double im(double) { return 0.0; }
double im(const Complex& z) { return z.imag(); }

/// F = value * exp(log_scale), keeping |value| moderate.
template <typename T>
struct Scaled {
  T value;
  double log_scale;
};

struct NeumaierSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    comp += (std::abs(sum) >= std::abs(x)) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

/// sin(pi w) * exp(-pi |Im w|).
Scaled<double> sin_pi_scaled(double w) { return {std::sin(kPi * w), 0.0}; }

Scaled<Complex> sin_pi_scaled(const Complex& w) {
  const double a = kPi * w.real();
  const double b = kPi * w.imag();
  const double decay = std::exp(-2.0 * std::abs(b));
  const double cosh_part = 0.5 * (1.0 + decay);
  const double sinh_part = std::copysign(-0.5 * std::expm1(-2.0 * std::abs(b)), b);
  return {Complex(std::sin(a) * cosh_part, std::cos(a) * sinh_part), std::abs(b)};
}

/// pi cot(pi w).
double pi_cot(double w) { return kPi / std::tan(kPi * w); }

Complex pi_cot(const Complex& w) {
  const double a = kPi * w.real();
  const double b = kPi * w.imag();
  if (std::abs(b) < 1.0) return kPi * std::cos(kPi * w) / std::sin(kPi * w);
  // cot(a + ib) = (sin 2a - i sinh 2b) / (cosh 2b - cos 2a), divided through by cosh 2b.
  const double inv_cosh = 1.0 / std::cosh(2.0 * b);
  return kPi * Complex(std::sin(2.0 * a) * inv_cosh, -std::tanh(2.0 * b)) / (1.0 - std::cos(2.0 * a) * inv_cosh);
}

/// pi cot(pi w) - 1/w, regular at w = 0.
template <typename T>
T pi_cot_minus_pole(T w) {
  if (std::abs(w) < 1e-3) {
    constexpr double c1 = kPi * kPi / 3.0;
    constexpr double c3 = kPi * kPi * kPi * kPi / 45.0;
    constexpr double c5 = 2.0 * kPi * kPi * kPi * kPi * kPi * kPi / 945.0;
    const T w2 = w * w;
    return -w * (c1 + w2 * (c3 + w2 * c5));
  }
  return pi_cot(w) - T(1.0) / w;
}

Index nearest_integer(double x) {
  if (!(std::abs(x) < 1e15)) invalid_input("generating function: argument out of range");
  return static_cast<Index>(std::llround(x));
}

template <typename T>
Scaled<T> sine_tail_kernel(const SineTail& st, T z, std::optional<Index> skip) {
  const Index N = st.half_width;
  const Index m = nearest_integer(re(z));
  const T w = z - static_cast<double>(m);
  const bool m_core = std::abs(m) <= N;
  const bool skip_tail = skip && std::abs(*skip) > N;
  // With m in the core, sin(pi z)/(pi (z - m)) absorbs the m-th denominator.
  // Removing a tail zero k = m uses the same form.
  const bool use_sinc = m_core || (skip_tail && *skip == m);

  const auto sin_part = sin_pi_scaled(w);
  T S;
  if (use_sinc) {
    S = (w == T(0.0)) ? T(1.0) : sin_part.value / (kPi * w);
  } else {
    S = sin_part.value / kPi;
  }
  S *= detail::parity_sign(m);
  if (skip_tail && *skip != m) S /= (z - static_cast<double>(*skip));

  T P(1.0);
  for (Index n = -N; n <= N; ++n) {
    const T num = (skip && *skip == n) ? T(1.0) : z - st.core[n + N];
    const T den = (m_core && n == m) ? T(1.0) : z - static_cast<double>(n);
    P *= num / den;
  }
  const double log_scale = (w == T(0.0)) ? 0.0 : sin_part.log_scale;
  return {S * P, log_scale};
}

template <typename T>
Scaled<T> product_kernel(const SymmetricProduct& sp, Index first, Index last, T z, std::optional<Index> skip) {
  NeumaierSum log_abs;
  NeumaierSum arg_sum;
  double sign = 1.0;
  T direct(1.0);
  for (Index n = first; n <= last; ++n) {
    const double lambda = sp.nodes(n);
    if (skip && *skip == n) {
      // (1 - z/lambda)/(z - lambda) = -1/lambda; z/(z - 0) = 1.
      if (lambda != 0.0) direct *= -1.0 / lambda;
      continue;
    }
    const T factor = (lambda == 0.0) ? z : T(1.0) - z / lambda;
    if (std::abs(z - lambda) < 1.0) {
      direct *= factor;
    } else if constexpr (kIsComplex<T>) {
      const Complex l = std::log(factor);
      log_abs.add(l.real());
      arg_sum.add(l.imag());
    } else {
      log_abs.add(std::log(std::abs(factor)));
      if (factor < 0.0) sign = -sign;
    }
  }
  if constexpr (kIsComplex<T>) {
    return {direct * std::polar(1.0, arg_sum.value()), log_abs.value()};
  } else {
    return {sign * direct, log_abs.value()};
  }
}

template <typename T>
Scaled<T> evaluate_scaled(const GeneratingFunction& F, T z, std::optional<Index> skip = std::nullopt) {
  if (!std::isfinite(re(z)) || !std::isfinite(im(z))) invalid_input("generating function: non-finite argument");
  Scaled<T> out = std::visit(
      [&](const auto& rep) -> Scaled<T> {
        using Rep = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<Rep, SineTail>) {
          return sine_tail_kernel<T>(rep, z, skip);
        } else {
          return product_kernel<T>(rep, F.first_index(), F.last_index(), z, skip);
        }
      },
      F.representation());
  out.value *= F.normalization();
  return out;
}

template <typename T>
T unscale(const Scaled<T>& s) {
  if (s.value == T(0.0)) return s.value;
  const double log_mod = s.log_scale + std::log(std::abs(s.value));
  if (log_mod > kMaxLog) {
    throw Error(ErrorCode::NumericFailure, "generating function: |F| overflows (log|F| = " + std::to_string(log_mod) + ")",
                log_mod);
  }
  if (s.log_scale > 600.0) return (s.value / std::abs(s.value)) * std::exp(log_mod);
  return s.value * std::exp(s.log_scale);
}

template <typename T>
double log_modulus_of(const Scaled<T>& s) {
  if (s.value == T(0.0)) return -std::numeric_limits<double>::infinity();
  return s.log_scale + std::log(std::abs(s.value));
}

[[noreturn]] void pole(const std::string& where) { throw Error(ErrorCode::Pole, where + ": argument is a zero of F"); }

template <typename T>
T log_derivative_kernel(const GeneratingFunction& F, T z) {
  return std::visit(
      [&](const auto& rep) -> T {
        using Rep = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<Rep, SineTail>) {
          const Index N = rep.half_width;
          const Index m = nearest_integer(re(z));
          const T w = z - static_cast<double>(m);
          const bool m_core = std::abs(m) <= N;
          if (!m_core && w == T(0.0)) pole("eval_log_derivative");
          T acc = m_core ? pi_cot_minus_pole(w) : pi_cot(w);
          for (Index n = -N; n <= N; ++n) {
            const T d = z - rep.core[n + N];
            if (d == T(0.0)) pole("eval_log_derivative");
            acc += T(1.0) / d;
            if (!(m_core && n == m)) acc -= T(1.0) / (z - static_cast<double>(n));
          }
          return acc;
        } else {
          NeumaierSum sum_re, sum_im;
          for (Index n = F.first_index(); n <= F.last_index(); ++n) {
            const T d = z - rep.nodes(n);
            if (d == T(0.0)) pole("eval_log_derivative");
            const T term = T(1.0) / d;
            sum_re.add(re(term));
            sum_im.add(im(term));
          }
          if constexpr (kIsComplex<T>) {
            return Complex(sum_re.value(), sum_im.value());
          } else {
            return sum_re.value();
          }
        }
      },
      F.representation());
}

}  // namespace

// ---------------------------------------------------------------------------
// GeneratingFunction

GeneratingFunction GeneratingFunction::symmetric_product(IndexedSequence nodes, double radius, double normalization) {
  if (!(radius > 0.0)) invalid_input("symmetric_product: radius must be positive");
  if (normalization == 0.0 || !std::isfinite(normalization)) invalid_input("symmetric_product: bad normalization");
  Index first = nodes.n_max() + 1;
  Index last = nodes.n_min() - 1;
  for (Index n = nodes.n_min(); n <= nodes.n_max(); ++n) {
    if (std::abs(nodes(n)) < radius) {
      first = std::min(first, n);
      last = std::max(last, n);
    }
  }
  if (last < first) invalid_input("symmetric_product: no node inside the radius");
  return GeneratingFunction(SymmetricProduct{std::move(nodes), radius}, normalization, first, last);
}

GeneratingFunction GeneratingFunction::sine_tail(Index half_width, Eigen::VectorXd core, double normalization) {
  if (half_width < 0) invalid_input("sine_tail: negative half width");
  if (core.size() != 2 * half_width + 1) invalid_input("sine_tail: core must hold 2N + 1 nodes");
  if (!core.allFinite()) invalid_input("sine_tail: non-finite node");
  if (normalization == 0.0 || !std::isfinite(normalization)) invalid_input("sine_tail: bad normalization");
  for (Index k = 0; k + 1 < core.size(); ++k) {
    if (!(core[k + 1] > core[k])) invalid_input("sine_tail: core not strictly increasing");
  }
  const double N = static_cast<double>(half_width);
  if (!(core[0] > -N - 1.0) || !(core[core.size() - 1] < N + 1.0)) {
    invalid_input("sine_tail: core does not interlace the integer tail");
  }
  return GeneratingFunction(SineTail{half_width, std::move(core)}, normalization, std::numeric_limits<Index>::min(),
                            std::numeric_limits<Index>::max());
}

GeneratingFunction GeneratingFunction::sine_tail(const IndexedSequence& core, double normalization) {
  if (core.n_min() != -core.n_max()) invalid_input("sine_tail: core must be indexed [-N, N]");
  return sine_tail(core.n_max(), core.values(), normalization);
}

GeneratingFunction GeneratingFunction::sine(double normalization) {
  return sine_tail(0, Eigen::VectorXd::Zero(1), normalization);
}

bool GeneratingFunction::tail_compatible(const IndexedSequence& nodes) {
  if (nodes.n_min() != -nodes.n_max()) return false;
  const double N = static_cast<double>(nodes.n_max());
  return nodes(nodes.n_min()) > -N - 1.0 && nodes(nodes.n_max()) < N + 1.0;
}

GeneratingFunction GeneratingFunction::for_nodes(const IndexedSequence& nodes, double normalization) {
  if (tail_compatible(nodes)) return sine_tail(nodes, normalization);
  return symmetric_product(nodes, std::numeric_limits<double>::infinity(), normalization);
}

GeneratingFunction GeneratingFunction::with_normalization(double normalization) const {
  if (normalization == 0.0 || !std::isfinite(normalization)) invalid_input("with_normalization: bad normalization");
  GeneratingFunction out = *this;
  out.normalization_ = normalization;
  return out;
}

double GeneratingFunction::node(Index n) const {
  if (!has_node(n)) invalid_input("GeneratingFunction::node: index " + std::to_string(n) + " out of range");
  if (const auto* st = std::get_if<SineTail>(&rep_)) {
    return std::abs(n) <= st->half_width ? st->core[n + st->half_width] : static_cast<double>(n);
  }
  return std::get<SymmetricProduct>(rep_).nodes(n);
}

std::pair<Index, Index> GeneratingFunction::natural_range() const {
  if (const auto* st = std::get_if<SineTail>(&rep_)) return {-st->half_width, st->half_width};
  return {first_, last_};
}

std::vector<double> GeneratingFunction::nodes_between(double a, double b) const {
  std::vector<double> out;
  if (!(b >= a)) return out;
  if (const auto* st = std::get_if<SineTail>(&rep_)) {
    const Index N = st->half_width;
    for (Index k = 0; k < st->core.size(); ++k) {
      if (st->core[k] >= a && st->core[k] <= b) out.push_back(st->core[k]);
    }
    for (auto n = static_cast<Index>(std::ceil(a)); static_cast<double>(n) <= b; ++n) {
      if (std::abs(n) > N) out.push_back(static_cast<double>(n));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  for (Index n = first_; n <= last_; ++n) {
    const double x = node(n);
    if (x >= a && x <= b) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

Complex eval(const GeneratingFunction& F, Complex z) {
  if (z.imag() == 0.0) return {eval(F, z.real()), 0.0};
  return unscale(evaluate_scaled<Complex>(F, z));
}

double eval(const GeneratingFunction& F, double x) { return unscale(evaluate_scaled<double>(F, x)); }

double log_modulus(const GeneratingFunction& F, Complex z) {
  if (z.imag() == 0.0) return log_modulus_of(evaluate_scaled<double>(F, z.real()));
  return log_modulus_of(evaluate_scaled<Complex>(F, z));
}

Complex principal_log(const GeneratingFunction& F, Complex z) {
  if (z.imag() == 0.0) {
    const auto s = evaluate_scaled<double>(F, z.real());
    if (s.value == 0.0) pole("principal_log");
    return {log_modulus_of(s), s.value < 0.0 ? kPi : 0.0};
  }
  const auto s = evaluate_scaled<Complex>(F, z);
  if (s.value == 0.0) pole("principal_log");
  return {log_modulus_of(s), std::arg(s.value)};
}

Complex eval_log_derivative(const GeneratingFunction& F, Complex z) {
  if (z.imag() == 0.0) return {eval_log_derivative(F, z.real()), 0.0};
  return log_derivative_kernel<Complex>(F, z);
}

double eval_log_derivative(const GeneratingFunction& F, double x) { return log_derivative_kernel<double>(F, x); }

Complex eval_removed(const GeneratingFunction& F, Complex z, Index k) {
  if (!F.has_node(k)) invalid_input("eval_removed: node index out of range");
  if (z.imag() == 0.0) return {unscale(evaluate_scaled<double>(F, z.real(), k)), 0.0};
  return unscale(evaluate_scaled<Complex>(F, z, k));
}

double derivative_at_node(const GeneratingFunction& F, Index k) {
  return unscale(evaluate_scaled<double>(F, F.node(k), k));
}

PositiveSequence derivative_at_zeros(const GeneratingFunction& F) {
  const auto [first, last] = F.natural_range();
  return derivative_at_zeros(F, first, last);
}

PositiveSequence derivative_at_zeros(const GeneratingFunction& F, Index first, Index last) {
  if (last < first || !F.has_node(first) || !F.has_node(last)) invalid_input("derivative_at_zeros: bad index range");
  Eigen::VectorXd d(last - first + 1);
  for (Index n = first; n <= last; ++n) {
    const double fp = derivative_at_node(F, n);
    d[n - first] = fp * fp;
  }
  return PositiveSequence(first, std::move(d));
}

// ---------------------------------------------------------------------------
// Critical data

CriticalData critical_data(const GeneratingFunction& F, Index first_gap, Index last_gap) {
  if (last_gap < first_gap) invalid_input("critical_data: empty gap range");
  if (!F.has_node(first_gap - 1) || !F.has_node(last_gap)) invalid_input("critical_data: gap range outside the zeros");

  const Index count = last_gap - first_gap + 1;
  Eigen::VectorXd points(count);
  Eigen::VectorXd raw(count);
  for (Index n = first_gap; n <= last_gap; ++n) {
    const double left = F.node(n - 1);
    const double right = F.node(n);
    const double gap = right - left;
    // The log-derivative decreases from +inf to -inf across the gap.
    double lo = left + 1e-9 * gap;
    double hi = right - 1e-9 * gap;
    if (!(eval_log_derivative(F, lo) > 0.0) || !(eval_log_derivative(F, hi) < 0.0)) {
      numeric_failure("critical_data: log-derivative has no sign change on gap " + std::to_string(n));
    }
    const double tol = 1e-12 * gap;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (eval_log_derivative(F, mid) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double x = 0.5 * (lo + hi);
    points[n - first_gap] = x;
    raw[n - first_gap] = eval(F, x);
  }

  const double sign = (detail::parity_sign(first_gap) * raw[0] >= 0.0) ? 1.0 : -1.0;
  try {
    return CriticalData{std::move(points), SignedCriticalSequence(first_gap, sign * raw), sign};
  } catch (const Error&) {
    numeric_failure("critical_data: critical values do not alternate in sign");
  }
}

CriticalRatioReport derivative_critical_ratio(const GeneratingFunction& F, Index first, Index last) {
  const CriticalData cd = critical_data(F, first, last);
  CriticalRatioReport rep;
  rep.first = first;
  rep.ratios.resize(last - first + 1);
  for (Index n = first; n <= last; ++n) {
    rep.ratios[n - first] = std::abs(derivative_at_node(F, n)) / std::abs(cd.values(n));
  }
  rep.min = rep.ratios.minCoeff();
  rep.max = rep.ratios.maxCoeff();
  return rep;
}

// ---------------------------------------------------------------------------
// Growth diagnostics

double cartwright_integral(const GeneratingFunction& F, double T, double rel_tol) {
  if (!(T > 0.0) || !std::isfinite(T)) invalid_input("cartwright_integral: T must be positive");
  std::vector<double> breaks{-T};
  for (double x : F.nodes_between(-T, T)) {
    if (x > breaks.back()) breaks.push_back(x);
  }
  if (T > breaks.back()) breaks.push_back(T);

  const std::vector<double> zeros = F.nodes_between(-T - 1.0, T + 1.0);
  auto integrand = [&](double t) {
    const auto it = std::lower_bound(zeros.begin(), zeros.end(), t - 1e-9);
    if (it != zeros.end() && *it <= t + 1e-9) return 0.0;
    const double lm = log_modulus(F, Complex(t, 0.0));
    return lm > 0.0 ? lm / (1.0 + t * t) : 0.0;
  };
  return integrate(integrand, std::span<const double>(breaks), QuadratureOptions{rel_tol, 1e-14, 200000}).value;
}

std::vector<LineSample> line_scan(const GeneratingFunction& F, double y, double x0, double x1, double step) {
  if (y == 0.0 || !std::isfinite(y)) invalid_input("line_scan: y must be nonzero");
  if (!(step > 0.0) || !(x1 >= x0)) invalid_input("line_scan: need step > 0 and x0 <= x1");
  const auto count = static_cast<Index>(std::floor((x1 - x0) / step + 1e-9)) + 1;
  std::vector<LineSample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Index k = 0; k < count; ++k) {
    const double x = x0 + static_cast<double>(k) * step;
    out.push_back({x, std::exp(log_modulus(F, Complex(x, y)))});
  }
  return out;
}

LineBounds line_modulus_bounds(const GeneratingFunction& F, double y, double x0, double x1, double step) {
  const auto samples = line_scan(F, y, x0, x1, step);
  LineBounds b{std::numeric_limits<double>::infinity(), 0.0};
  for (const auto& s : samples) {
    b.min = std::min(b.min, s.abs_F);
    b.max = std::max(b.max, s.abs_F);
  }
  return b;
}

std::vector<double> type_estimate(const GeneratingFunction& F, std::span<const double> radii) {
  std::vector<double> out;
  out.reserve(radii.size());
  double prev = 0.0;
  for (double R : radii) {
    if (!(R > prev) || !std::isfinite(R)) invalid_input("type_estimate: radii must be positive and increasing");
    prev = R;
    out.push_back(log_modulus(F, Complex(0.0, R)) / R);
  }
  return out;
}

WeightTrace::WeightTrace(GeneratingFunction F, double y) : F_(std::move(F)), y_(y) {
  if (y == 0.0 || !std::isfinite(y)) invalid_input("WeightTrace: y must be nonzero");
}

double WeightTrace::operator()(double x) const { return std::norm(eval(F_, Complex(x, y_))); }

}  // namespace cis
