#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ged/graph.hpp"

namespace ged {

/// Label given to GXL nodes and edges without attributes.
inline constexpr std::string_view kUnlabeled = "_";

/// Line-oriented text format, one-based indices:
///   graph <id>
///   n <count>
///   v <index> <label>
///   e <i> <j> <label>
/// Blank lines and '#' comments are ignored. Errors are ParseError with the
/// offending line number.
std::vector<LabeledGraph> parse_text_graphs(std::string_view text);
/// Exactly one graph.
LabeledGraph parse_text_graph(std::string_view text);

/// Canonical text form: nodes in index order, edges sorted with i < j.
std::string serialize_text_graph(const LabeledGraph& graph);
void write_text_graph(std::ostream& out, const LabeledGraph& graph);

struct GxlParseResult {
  LabeledGraph graph;
  std::vector<std::string> warnings;
};

/// Minimal GXL reader: one <graph> holding <node id=..> and
/// <edge from=.. to=..> elements. The first <attr> of a node or edge
/// supplies its label (whitespace replaced by '_'); extra attributes and
/// unknown elements are ignored with a warning.
GxlParseResult parse_gxl_subset(std::string_view text, std::string fallback_id = "");

enum class GraphFormat { kText, kGxl };
GraphFormat parse_graph_format(std::string_view name);

/// Loads a file, or every matching file of a directory in name order
/// (.txt/.graph for text, .gxl for GXL). Warnings are appended to
/// `warnings` when given. Graph ids must be unique.
std::vector<LabeledGraph> load_dataset(const std::filesystem::path& path, GraphFormat format,
                                       std::vector<std::string>* warnings = nullptr);

}  // namespace ged
