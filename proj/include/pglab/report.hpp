#pragma once

#include <string>

#include <json.hpp>

#include "pglab/classify.hpp"
#include "pglab/multiset.hpp"
#include "pglab/stability.hpp"

namespace pglab {

using Json = nlohmann::ordered_json;

Json point_json(const Plane& pl, std::uint32_t point);
Json line_json(const Plane& pl, std::uint32_t line);

/// Sparse codeword rendering: array of [x0, x1, x2, value] rows in canonical
/// point order.
Json sparse_codeword_json(const Codeword& c);

/// Full spectrum diagnostics: delta, residue and index histograms, threshold
/// verdicts, the index dichotomy and quadratic-bound sweeps, and the
/// deficiency inequality over every k-residue line that admits a chart.
Json analyze_report(const WeightedMultiset& m, int k);

Json repair_report_json(const RepairReport& rep);
Json blocking_report_json(const Plane& pl, const BlockingSetReport& rep);
Json classification_json(const Plane& pl, const Classification& cls);

/// The census interchange form: a JSON array of {weight, verdict, count,
/// example} entries.
Json census_json(const CensusReport& rep);

Json plane_info_json(const Plane& pl);

/// Plain-text rendering of a JSON report (same data, indented key: value).
std::string render_text(const Json& j);

} // namespace pglab
