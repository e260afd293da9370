#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hyperq/analysis.hpp"
#include "hyperq/coloring.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/oracle.hpp"

namespace hyperq {

inline constexpr std::string_view tool_version = "hyperq 1.0.0";

enum class ReportFormat { text, json };

ReportFormat parse_format(std::string_view name);

using ReportTree = nlohmann::ordered_json;

// Tree renderings. Every tree starts with "tool" and "input" (the digest).
ReportTree stats_tree(const Hypergraph& h);
ReportTree verdict_tree(const Hypergraph& h, const Verdict& v);
ReportTree coloring_tree(const Hypergraph& h, const EdgeColoring& c, std::string_view method);
ReportTree criticality_tree(const Hypergraph& h, const CriticalityReport& report,
                            const CriticalCore& core);

/// JSON (2-space indent) or flat "key: value" lines, newline terminated.
std::string render(const ReportTree& tree, ReportFormat format);

} // namespace hyperq
