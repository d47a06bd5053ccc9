#pragma once

#include "tdlab/critical.hpp"
#include "tdlab/solver.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tdlab {

// Machine-readable documents.  Field names are a stable contract; see
// docs/report-schema.md.

auto to_json(const Ranking &r) -> nlohmann::json;
auto to_json(const SolverStats &s) -> nlohmann::json;
auto to_json(const TdCertificate &c) -> nlohmann::json;
auto to_json(const Bounds &b) -> nlohmann::json;
auto to_json(const CriticalityReport &r) -> nlohmann::json;
auto to_json(const UniquenessReport &r) -> nlohmann::json;
auto to_json(const HnRow &row) -> nlohmann::json;
auto to_json(const std::vector<HnRow> &rows) -> nlohmann::json;

// Human-readable tables.

auto format_certificate(const TdCertificate &c) -> std::string;
auto format_criticality(const CriticalityReport &r) -> std::string;
auto format_uniqueness(const UniquenessReport &r) -> std::string;
auto format_reproduction(const std::vector<HnRow> &rows) -> std::string;

/// "{0, 3}" style set rendering.
auto format_vertex_list(const std::vector<int> &vertices) -> std::string;

} // namespace tdlab
