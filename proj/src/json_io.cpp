#include "cis/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cis::io {

namespace {

std::pair<Index, Eigen::VectorXd> real_window(const Json& j) {
  if (!j.is_object() || !j.contains("n_min") || !j.contains("values")) {
    invalid_input("sequence JSON: expected {\"n_min\": int, \"values\": [...]}");
  }
  const Json& n_min = j.at("n_min");
  const Json& values = j.at("values");
  if (!n_min.is_number_integer()) invalid_input("sequence JSON: n_min must be an integer");
  if (!values.is_array()) invalid_input("sequence JSON: values must be an array");
  Eigen::VectorXd v(static_cast<Index>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!values[k].is_number()) invalid_input("sequence JSON: values must be numbers");
    v[static_cast<Index>(k)] = values[k].get<double>();
  }
  return {n_min.get<Index>(), std::move(v)};
}

Json pair_json(std::pair<Index, Index> p) { return Json::array({p.first, p.second}); }

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    invalid_input(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid_input("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Json to_json(const detail::Window& seq) {
  Json values = Json::array();
  for (Index k = 0; k < seq.size(); ++k) values.push_back(seq.values()[k]);
  return Json{{"n_min", seq.n_min()}, {"values", std::move(values)}};
}

IndexedSequence indexed_from_json(const Json& j) {
  auto [n_min, v] = real_window(j);
  return IndexedSequence(n_min, std::move(v));
}

PositiveSequence positive_from_json(const Json& j) {
  auto [n_min, v] = real_window(j);
  return PositiveSequence(n_min, std::move(v));
}

SignedCriticalSequence signed_from_json(const Json& j) {
  auto [n_min, v] = real_window(j);
  return SignedCriticalSequence(n_min, std::move(v));
}

std::pair<Index, Eigen::VectorXcd> complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n_min") || !j.contains("values") || !j.at("n_min").is_number_integer() ||
      !j.at("values").is_array()) {
    invalid_input("data JSON: expected {\"n_min\": int, \"values\": [...]}");
  }
  const Json& values = j.at("values");
  Eigen::VectorXcd v(static_cast<Index>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k) {
    const Json& e = values[k];
    if (e.is_number()) {
      v[static_cast<Index>(k)] = Complex(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      v[static_cast<Index>(k)] = Complex(e[0].get<double>(), e[1].get<double>());
    } else {
      invalid_input("data JSON: entries must be numbers or [re, im] pairs");
    }
  }
  return {j.at("n_min").get<Index>(), std::move(v)};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const SeparationReport& r) {
  return Json{{"delta", r.delta}, {"Delta", r.Delta}, {"is_separated", r.is_separated}};
}

Json to_json(const KadetsReport& r) { return Json{{"sup_deviation", r.sup_deviation}, {"passes", r.passes}}; }

Json to_json(const DensityReport& r) { return Json{{"r", r.r}, {"d_plus", r.d_plus}, {"d_minus", r.d_minus}}; }

Json to_json(const MuckenhouptReport& r) {
  return Json{{"p", r.p}, {"max_ratio", r.max_ratio}, {"witness", pair_json(r.witness)}, {"window_cap", r.window_cap}};
}

Json to_json(const LogIncrementReport& r) {
  return Json{{"holds", r.holds}, {"worst_pair", pair_json(r.worst_pair)}, {"worst_excess", r.worst_excess}};
}

Json to_json(const CriticalData& cd) {
  Json points = Json::array();
  for (Index k = 0; k < cd.points.size(); ++k) points.push_back(cd.points[k]);
  return Json{{"points", std::move(points)}, {"values", to_json(cd.values)}};
}

Json to_json(const SynthesisResult& r) {
  return Json{{"nodes", to_json(r.nodes)},
              {"achieved", to_json(r.achieved)},
              {"residual", r.residual},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"tail_mismatch", r.tail_mismatch}};
}

Json to_json(const CertifyReport& r) {
  return Json{{"separated", r.separated},
              {"separation", to_json(r.separation)},
              {"a2_report", to_json(r.a2_report)},
              {"a2_half_report", to_json(r.a2_half_report)},
              {"densities", to_json(r.densities)},
              {"representation", r.sine_tail ? "sine_tail" : "symmetric_product"},
              {"verdict", to_string(r.verdict)}};
}

Json to_json(const RieszBoundsReport& r) { return Json{{"size", r.size}, {"lower", r.lower}, {"upper", r.upper}}; }

Json to_json(const NormEquivalenceReport& r) {
  Json j{{"l2_data", r.l2_data}, {"l2_function", r.l2_function}};
  // NaN has no JSON literal; the degenerate flag carries it.
  j["ratio"] = r.degenerate ? Json(nullptr) : Json(r.ratio);
  j["degenerate"] = r.degenerate;
  return j;
}

}  // namespace cis::io
