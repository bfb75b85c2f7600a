#pragma once

#include <string>

#include "json.hpp"

#include "cis/comb.hpp"
#include "cis/muckenhoupt.hpp"
#include "cis/paley_wiener.hpp"
#include "cis/sequence.hpp"

namespace cis::io {

// Insertion-ordered objects keep the emitted field order fixed.
using Json = nlohmann::ordered_json;

/// Parses text; malformed JSON becomes InvalidInput.
Json parse(const std::string& text);
Json read_file(const std::string& path);

// Sequence schema {"n_min": <int>, "values": [<float>, ...]}.
Json to_json(const detail::Window& seq);
IndexedSequence indexed_from_json(const Json& j);
PositiveSequence positive_from_json(const Json& j);
SignedCriticalSequence signed_from_json(const Json& j);

/// Same schema, entries either numbers or [re, im] pairs.
std::pair<Index, Eigen::VectorXcd> complex_from_json(const Json& j);
Json complex_to_json(Complex z);

Json to_json(const SeparationReport& r);
Json to_json(const KadetsReport& r);
Json to_json(const DensityReport& r);
Json to_json(const MuckenhouptReport& r);
Json to_json(const LogIncrementReport& r);
Json to_json(const CriticalData& cd);
Json to_json(const SynthesisResult& r);
Json to_json(const CertifyReport& r);
Json to_json(const RieszBoundsReport& r);
Json to_json(const NormEquivalenceReport& r);

}  // namespace cis::io
