#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cis/comb.hpp"
#include "cis/json_io.hpp"
#include "cis/muckenhoupt.hpp"
#include "cis/paley_wiener.hpp"

namespace cis::cli {

namespace {

using io::Json;

struct RunConfig {
  std::string input;
  std::string output;
  std::string data;

  // analyze
  std::optional<double> r;
  double eps = 0.5;

  // muckenhoupt
  std::optional<double> alpha;
  Index range = 0;
  Index from = 1;
  double p = 2.0;
  std::optional<Index> window_cap;
  bool continuous = false;

  // genfun / trace / weight traces
  std::string form = "auto";
  double radius = std::numeric_limits<double>::infinity();
  double scale = 1.0;
  std::vector<std::string> eval_at;
  std::vector<Index> critical;
  bool derivatives = false;
  std::vector<double> type_radii;
  std::optional<double> cartwright_T;
  bool line_scan = false;
  double y = 1.0;
  std::vector<double> x_range{-20.0, 20.0};
  double step = 0.01;
  std::vector<Index> gaps;
  double trace_eps = 1e-3;
  Index samples = 201;

  // synthesize
  std::string targets;
  std::optional<Index> half_width;
  double tail_value = 1.0 / std::numbers::pi;
  Index padding = 4;
  int max_iter = 200;
  double residual_tol = 1e-10;
  double step_tol = 1e-12;

  // interpolate / frame-bounds
  std::string nodes;
  std::optional<double> norm_T;
  Index size = 0;
};

/// Writes text to --output or the given stream, once.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) invalid_input("cannot write " + cfg.output);
  file << text;
}

void emit_json(const RunConfig& cfg, std::ostream& out, const Json& j) { emit(cfg, out, j.dump(2) + "\n"); }

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

GeneratingFunction load_function(const RunConfig& cfg) {
  if (cfg.input.empty()) return GeneratingFunction::sine(cfg.scale);
  const IndexedSequence nodes = io::indexed_from_json(io::read_file(cfg.input));
  if (cfg.form == "sine-tail") return GeneratingFunction::sine_tail(nodes, cfg.scale);
  if (cfg.form == "product") return GeneratingFunction::symmetric_product(nodes, cfg.radius, cfg.scale);
  if (cfg.form != "auto") invalid_input("--form must be auto, sine-tail or product");
  if (std::isfinite(cfg.radius)) return GeneratingFunction::symmetric_product(nodes, cfg.radius, cfg.scale);
  return GeneratingFunction::for_nodes(nodes, cfg.scale);
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const IndexedSequence seq = io::indexed_from_json(io::read_file(cfg.input));
  const double span = seq(seq.n_max()) - seq(seq.n_min());
  const double r = cfg.r.value_or(0.25 * span);
  Json j{{"window", {{"n_min", seq.n_min()}, {"n_max", seq.n_max()}}},
         {"separation", io::to_json(separation(seq))},
         {"kadets", io::to_json(kadets_check(seq))},
         {"density", io::to_json(density(seq, r))},
         {"relatively_dense", {{"eps", cfg.eps}, {"holds", relative_density_check(seq, cfg.eps)}}}};
  emit_json(cfg, out, j);
  return 0;
}

int cmd_muckenhoupt(const RunConfig& cfg, std::ostream& out) {
  if (cfg.continuous) {
    const WeightTrace w(load_function(cfg), cfg.y);
    const auto lengths = default_a2_lengths();
    const auto centers = default_a2_centers();
    const ContinuousA2Report rep = continuous_a2_scan(std::cref(w), lengths, centers);
    Json j{{"y", cfg.y},
           {"max_ratio", rep.report.max_ratio},
           {"worst_interval", {{"center", rep.worst_center}, {"length", rep.worst_length}}}};
    emit_json(cfg, out, j);
    return 0;
  }

  std::optional<PositiveSequence> d;
  if (cfg.alpha) {
    if (cfg.range < 1) invalid_input("--alpha needs --range M >= 1");
    d = power_law_sequence(*cfg.alpha, cfg.from, cfg.from + cfg.range - 1);
  } else if (!cfg.input.empty()) {
    d = io::positive_from_json(io::read_file(cfg.input));
  } else {
    invalid_input("muckenhoupt needs --input or --alpha/--range");
  }

  const Index cap = cfg.window_cap.value_or(d->size());
  const MuckenhouptReport rep = discrete_ratio(*d, cfg.p, cap);
  Json j = io::to_json(rep);

  // Leading sub-windows of length L/100, L/10, L: a ratio that keeps
  // climbing with the window signals an unbounded constant.
  Json trend = Json::array();
  std::vector<double> ratios;
  for (Index div : {100, 10, 1}) {
    const Index len = d->size() / div;
    if (len < 2 || (!ratios.empty() && len == trend.back()["length"].get<Index>())) continue;
    const PositiveSequence sub = d->slice(d->n_min(), d->n_min() + len - 1);
    const double ratio = discrete_ratio(sub, cfg.p, std::min(cap, len)).max_ratio;
    ratios.push_back(ratio);
    trend.push_back(Json{{"length", len}, {"max_ratio", ratio}});
  }
  j["trend"] = trend;
  j["growing"] = ratios.size() >= 2 && ratios.back() >= 1.5 * ratios.front();
  if (cfg.alpha) j["alpha"] = *cfg.alpha;
  emit_json(cfg, out, j);
  return 0;
}

int cmd_genfun(const RunConfig& cfg, std::ostream& out) {
  const GeneratingFunction F = load_function(cfg);

  if (cfg.line_scan) {
    if (cfg.x_range.size() != 2) invalid_input("--x-range takes two values");
    std::string csv = "x,abs_F\n";
    for (const auto& s : line_scan(F, cfg.y, cfg.x_range[0], cfg.x_range[1], cfg.step)) {
      csv += format_double(s.x) + "," + format_double(s.abs_F) + "\n";
    }
    emit(cfg, out, csv);
    return 0;
  }

  Json j{{"representation", F.is_sine_tail() ? "sine_tail" : "symmetric_product"},
         {"normalization", F.normalization()}};
  if (!cfg.eval_at.empty()) {
    Json evals = Json::array();
    for (const auto& text : cfg.eval_at) {
      const Complex z = parse_complex(text);
      evals.push_back(Json{{"z", io::complex_to_json(z)}, {"F", io::complex_to_json(eval(F, z))}});
    }
    j["eval"] = evals;
  }
  if (!cfg.critical.empty()) {
    if (cfg.critical.size() != 2) invalid_input("--critical takes two gap indices");
    j["critical_data"] = io::to_json(critical_data(F, cfg.critical[0], cfg.critical[1]));
  }
  if (cfg.derivatives) j["derivatives"] = io::to_json(derivative_at_zeros(F));
  if (!cfg.type_radii.empty()) {
    Json te = Json::array();
    const auto est = type_estimate(F, cfg.type_radii);
    for (std::size_t k = 0; k < est.size(); ++k) te.push_back(Json{{"R", cfg.type_radii[k]}, {"estimate", est[k]}});
    j["type_estimate"] = te;
  }
  if (cfg.cartwright_T) {
    j["cartwright"] = Json{{"T", *cfg.cartwright_T}, {"integral", cartwright_integral(F, *cfg.cartwright_T)}};
  }
  emit_json(cfg, out, j);
  return 0;
}

int cmd_trace(const RunConfig& cfg, std::ostream& out) {
  if (cfg.gaps.size() != 2) invalid_input("--gaps takes two gap indices");
  const BranchTrackedLog L{load_function(cfg)};
  std::string csv = "gap,x,re_phi,im_phi\n";
  for (const auto& g : boundary_trace(L, cfg.trace_eps, cfg.gaps[0], cfg.gaps[1], cfg.samples)) {
    for (const auto& p : g.points) {
      csv += std::to_string(g.gap) + "," + format_double(p.x) + "," + format_double(p.re_phi) + "," +
             format_double(p.im_phi) + "\n";
    }
  }
  emit(cfg, out, csv);
  return 0;
}

int cmd_synthesize(const RunConfig& cfg, std::ostream& out) {
  SignedCriticalSequence targets = io::signed_from_json(io::read_file(cfg.targets));
  if (cfg.half_width) {
    const Index N = *cfg.half_width;
    if (N < 0 || !targets.contains(-N) || !targets.contains(N)) {
      invalid_input("--half-width exceeds the targets window");
    }
    targets = SignedCriticalSequence(-N, targets.values().segment(-N - targets.n_min(), 2 * N + 1));
  }
  SynthesisProblem problem{std::move(targets)};
  problem.tail_value = cfg.tail_value;
  problem.padding = cfg.padding;
  problem.max_iter = cfg.max_iter;
  problem.residual_tol = cfg.residual_tol;
  problem.step_tol = cfg.step_tol;
  const SynthesisResult res = synthesize(problem);
  emit_json(cfg, out, io::to_json(res));
  return res.converged ? 0 : 3;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  const IndexedSequence nodes = io::indexed_from_json(io::read_file(cfg.input));
  const CertifyReport rep = certify(nodes, cfg.window_cap.value_or(nodes.size()));
  emit_json(cfg, out, io::to_json(rep));
  return 0;
}

int cmd_interpolate(const RunConfig& cfg, std::ostream& out) {
  const IndexedSequence nodes = io::indexed_from_json(io::read_file(cfg.nodes));
  auto [n_min, data] = io::complex_from_json(io::read_file(cfg.data));
  if (n_min != nodes.n_min()) invalid_input("data n_min does not match the nodes");
  const InterpolationProblem problem(nodes, std::move(data));
  Json values = Json::array();
  for (const auto& text : cfg.eval_at) {
    const Complex z = parse_complex(text);
    values.push_back(Json{{"z", io::complex_to_json(z)}, {"f", io::complex_to_json(interpolate_eval(problem, z))}});
  }
  Json j{{"values", values}};
  if (cfg.norm_T) j["norm_equivalence"] = io::to_json(norm_equivalence_check(problem, *cfg.norm_T));
  emit_json(cfg, out, j);
  return 0;
}

int cmd_frame_bounds(const RunConfig& cfg, std::ostream& out) {
  const IndexedSequence nodes = io::indexed_from_json(io::read_file(cfg.input));
  Index size = cfg.size;
  if (size == 0) size = (nodes.size() % 2 == 1) ? nodes.size() : nodes.size() - 1;
  emit_json(cfg, out, io::to_json(riesz_bounds(nodes, size)));
  return 0;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  std::remove_copy_if(text.begin(), text.end(), std::back_inserter(s), [](unsigned char c) { return std::isspace(c); });
  if (s.empty()) invalid_input("empty complex literal");

  auto to_double = [&text](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      invalid_input("malformed complex literal '" + text + "'");
    }
    if (used != part.size()) invalid_input("malformed complex literal '" + text + "'");
    return v;
  };

  if (s.back() != 'i') return {to_double(s), 0.0};
  s.pop_back();
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_part = (split == std::string::npos) ? "" : s.substr(0, split);
  std::string im_part = (split == std::string::npos) ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return {re_part.empty() ? 0.0 : to_double(re_part), to_double(im_part)};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complete interpolating sequences: analysis, synthesis and certification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_output = [&cfg](CLI::App* sub) { sub->add_option("-o,--output", cfg.output, "Write the result here"); };

  auto* analyze = app.add_subcommand("analyze", "Separation, Kadets, density and relative density of a node window");
  analyze->add_option("-i,--input", cfg.input, "Sequence JSON")->required();
  analyze->add_option("--r", cfg.r, "Density half-length (default: a quarter of the span)");
  analyze->add_option("--eps", cfg.eps, "Relative-density radius");
  add_output(analyze);

  auto* muck = app.add_subcommand("muckenhoupt", "Discrete (A_p) ratio scan, or continuous A2 scan of |F(x+iy)|^2");
  muck->add_option("-i,--input", cfg.input, "Weights JSON (discrete) or nodes JSON (--continuous)");
  muck->add_option("--alpha", cfg.alpha, "Use the power-law weights (1+|n|)^(2 alpha)");
  muck->add_option("--range", cfg.range, "Number of power-law weights");
  muck->add_option("--from", cfg.from, "First index of the power-law window");
  muck->add_option("--p", cfg.p, "Exponent p > 1");
  muck->add_option("--window-cap", cfg.window_cap, "Longest window scanned");
  muck->add_flag("--continuous", cfg.continuous, "Continuous A2 scan of the weight |F(x+iy)|^2");
  muck->add_option("--y", cfg.y, "Line offset for the continuous scan");
  add_output(muck);

  auto* gen = app.add_subcommand("genfun", "Generating function evaluation and diagnostics");
  gen->add_option("-i,--input", cfg.input, "Nodes JSON (default: sin(pi z)/pi)");
  gen->add_option("--form", cfg.form, "auto | sine-tail | product");
  gen->add_option("--radius", cfg.radius, "Product truncation radius");
  gen->add_option("--scale", cfg.scale, "Normalization factor");
  gen->add_option("--eval", cfg.eval_at, "Evaluate F at a+bi");
  gen->add_option("--critical", cfg.critical, "Critical data on gaps FIRST LAST")->expected(2);
  gen->add_flag("--derivatives", cfg.derivatives, "|F'(lambda_n)|^2 over the natural index range");
  gen->add_option("--type-estimate", cfg.type_radii, "log|F(iR)|/R for each R");
  gen->add_option("--cartwright", cfg.cartwright_T, "Cartwright integral over [-T, T]");
  gen->add_flag("--line-scan", cfg.line_scan, "CSV of |F(x+iy)| (x,abs_F)");
  gen->add_option("--y", cfg.y, "Line offset");
  gen->add_option("--x-range", cfg.x_range, "Line-scan range X0 X1")->expected(2);
  gen->add_option("--step", cfg.step, "Line-scan step");
  add_output(gen);

  auto* trace = app.add_subcommand("trace", "Boundary trace of phi = log F as CSV (gap,x,re_phi,im_phi)");
  trace->add_option("-i,--input", cfg.input, "Nodes JSON (default: sin(pi z)/pi)");
  trace->add_option("--form", cfg.form, "auto | sine-tail | product");
  trace->add_option("--gaps", cfg.gaps, "Gap range FIRST LAST")->expected(2)->required();
  trace->add_option("--eps", cfg.trace_eps, "Distance below the real axis");
  trace->add_option("--samples", cfg.samples, "Samples per gap");
  add_output(trace);

  auto* syn = app.add_subcommand("synthesize", "Nodes from prescribed critical values");
  syn->add_option("--targets", cfg.targets, "Target critical values (sequence JSON on [-N, N])")->required();
  syn->add_option("--half-width", cfg.half_width, "Use targets on [-N, N] only");
  syn->add_option("--tail-value", cfg.tail_value, "|c_n| in the tail");
  syn->add_option("--padding", cfg.padding, "Padding gaps reported on each side");
  syn->add_option("--max-iter", cfg.max_iter, "Iteration limit");
  syn->add_option("--residual-tol", cfg.residual_tol, "Stop when the residual drops below this");
  syn->add_option("--step-tol", cfg.step_tol, "Stop when a step moves less than this");
  add_output(syn);

  auto* cert = app.add_subcommand("certify", "Desk-scale complete-interpolating-sequence certificate");
  cert->add_option("-i,--input", cfg.input, "Nodes JSON")->required();
  cert->add_option("--window-cap", cfg.window_cap, "Longest window in the A2 scan");
  add_output(cert);

  auto* interp = app.add_subcommand("interpolate", "Evaluate the interpolating function");
  interp->add_option("--nodes", cfg.nodes, "Nodes JSON")->required();
  interp->add_option("--data", cfg.data, "Data JSON (numbers or [re, im])")->required();
  interp->add_option("--at", cfg.eval_at, "Evaluation point a+bi");
  interp->add_option("--norm-T", cfg.norm_T, "Compare sum |a_n|^2 with int_{-T}^{T} |f|^2");
  add_output(interp);

  auto* frame = app.add_subcommand("frame-bounds", "Finite-section Riesz bounds from the Gram matrix");
  frame->add_option("-i,--input", cfg.input, "Nodes JSON")->required();
  frame->add_option("--size", cfg.size, "Odd section size (default: whole window)");
  add_output(frame);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (muck->parsed()) return cmd_muckenhoupt(cfg, out);
    if (gen->parsed()) return cmd_genfun(cfg, out);
    if (trace->parsed()) return cmd_trace(cfg, out);
    if (syn->parsed()) return cmd_synthesize(cfg, out);
    if (cert->parsed()) return cmd_certify(cfg, out);
    if (interp->parsed()) return cmd_interpolate(cfg, out);
    if (frame->parsed()) return cmd_frame_bounds(cfg, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::InvalidInput ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cis::cli
