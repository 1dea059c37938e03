#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tightspan/complex.hpp"
#include "tightspan/graphs.hpp"
#include "tightspan/groups.hpp"
#include "tightspan/hull.hpp"
#include "tightspan/metric.hpp"

namespace tightspan {

using OrderedJson = nlohmann::ordered_json;

/// Rational serialization: integers unadorned, otherwise lowest-terms "p/q".
OrderedJson rat_to_json(const Rat& value);
Rat rat_from_json(const nlohmann::json& value);

OrderedJson function_to_json(const MetricFunction& f);

/// {"points": [...], "distances": [[...]]}. Throws Error(InvalidInput)
/// carrying the violation list rendered into the message on bad metrics.
FinMetric metric_from_json(const nlohmann::json& doc);
OrderedJson violations_to_json(const std::vector<Violation>& violations);

/// {"vertices": n or [labels], "edges": [[i,j], ...]}
Graph graph_from_json(const nlohmann::json& doc);

/// Either a metric document or a graph document (detected by key).
FinMetric space_from_json(const nlohmann::json& doc);

/// list of permutations as index arrays, or {"subgroup": [...]}
std::vector<Isometry> subgroup_from_json(const nlohmann::json& doc);

OrderedJson complex_to_json(const HullComplex& complex);
OrderedJson subdivision_to_json(const Subdivision& sub);
OrderedJson pmap_report_to_json(const PMapReport& report);
OrderedJson action_report_to_json(const ActionReport& report);

/// Unfolded OFF export of the 2-skeleton: every 2-cell becomes a polygon in
/// its own cell_system coordinates, cells laid out side by side.
std::string complex_to_off(const HullComplex& complex);

std::string complex_to_csv(const HullComplex& complex);

}  // namespace tightspan
