#include "ged/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "ged/errors.hpp"

namespace ged {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size() || line[pos] == '#') break;
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

std::size_t parse_count(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(ParseErrorKind::kMalformed, line_no, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

struct PendingEdge {
  std::size_t a;
  std::size_t b;
  std::string label;
  std::size_t line;
};

struct PendingGraph {
  std::string id;
  std::size_t header_line = 0;
  std::optional<std::size_t> count;
  std::vector<std::optional<std::string>> labels;
  std::vector<PendingEdge> edges;
  std::set<std::pair<std::size_t, std::size_t>> edge_keys;

  LabeledGraph build() const {
    if (!count) throw ParseError(ParseErrorKind::kMalformed, header_line, "graph '" + id + "' has no node count");
    LabeledGraph graph(id);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!labels[i]) {
        throw ParseError(ParseErrorKind::kMissingNode, header_line,
                         "graph '" + id + "' never declares node " + std::to_string(i + 1));
      }
      graph.add_node(*labels[i]);
    }
    for (const PendingEdge& e : edges) {
      graph.add_edge(static_cast<NodeId>(e.a - 1), static_cast<NodeId>(e.b - 1), e.label);
    }
    return graph;
  }
};

}  // namespace

std::vector<LabeledGraph> parse_text_graphs(std::string_view text) {
  std::vector<LabeledGraph> graphs;
  std::optional<PendingGraph> current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string_view keyword = tokens[0];
    if (keyword == "graph") {
      if (tokens.size() != 2) throw ParseError(ParseErrorKind::kMalformed, line_no, "expected 'graph <id>'");
      if (current) graphs.push_back(current->build());
      current.emplace();
      current->id = std::string(tokens[1]);
      current->header_line = line_no;
    } else if (!current) {
      throw ParseError(ParseErrorKind::kMalformed, line_no, "record before 'graph' header");
    } else if (keyword == "n") {
      if (tokens.size() != 2) throw ParseError(ParseErrorKind::kMalformed, line_no, "expected 'n <count>'");
      if (current->count) throw ParseError(ParseErrorKind::kMalformed, line_no, "node count given twice");
      current->count = parse_count(tokens[1], line_no);
      current->labels.assign(*current->count, std::nullopt);
    } else if (keyword == "v") {
      if (tokens.size() != 3) throw ParseError(ParseErrorKind::kMalformed, line_no, "expected 'v <index> <label>'");
      if (!current->count) throw ParseError(ParseErrorKind::kMalformed, line_no, "'v' before 'n'");
      const std::size_t index = parse_count(tokens[1], line_no);
      if (index < 1 || index > *current->count) {
        throw ParseError(ParseErrorKind::kDanglingIndex, line_no, "node index " + std::to_string(index) + " out of range");
      }
      if (current->labels[index - 1]) {
        throw ParseError(ParseErrorKind::kDuplicateNode, line_no, "node " + std::to_string(index) + " declared twice");
      }
      current->labels[index - 1] = std::string(tokens[2]);
    } else if (keyword == "e") {
      if (tokens.size() != 4) throw ParseError(ParseErrorKind::kMalformed, line_no, "expected 'e <i> <j> <label>'");
      if (!current->count) throw ParseError(ParseErrorKind::kMalformed, line_no, "'e' before 'n'");
      const std::size_t a = parse_count(tokens[1], line_no);
      const std::size_t b = parse_count(tokens[2], line_no);
      for (std::size_t index : {a, b}) {
        if (index < 1 || index > *current->count) {
          throw ParseError(ParseErrorKind::kDanglingIndex, line_no,
                           "edge endpoint " + std::to_string(index) + " out of range");
        }
      }
      if (a == b) throw ParseError(ParseErrorKind::kSelfLoop, line_no, "self-loop on node " + std::to_string(a));
      if (!current->edge_keys.insert(std::minmax(a, b)).second) {
        throw ParseError(ParseErrorKind::kDuplicateEdge, line_no,
                         "duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
      }
      current->edges.push_back(PendingEdge{a, b, std::string(tokens[3]), line_no});
    } else {
      throw ParseError(ParseErrorKind::kMalformed, line_no, "unknown record '" + std::string(keyword) + "'");
    }
    if (end == text.size()) break;
  }
  if (current) graphs.push_back(current->build());
  return graphs;
}

LabeledGraph parse_text_graph(std::string_view text) {
  auto graphs = parse_text_graphs(text);
  if (graphs.size() != 1) {
    throw ParseError(ParseErrorKind::kMalformed, 0, "expected exactly one graph, found " + std::to_string(graphs.size()));
  }
  return std::move(graphs.front());
}

void write_text_graph(std::ostream& out, const LabeledGraph& graph) {
  auto check_token = [](std::string_view token, const char* what) {
    if (token.empty() || std::any_of(token.begin(), token.end(), [](char c) {
          return std::isspace(static_cast<unsigned char>(c)) || c == '#';
        })) {
      throw ParameterError(std::string(what) + " '" + std::string(token) + "' is not a valid token");
    }
  };
  check_token(graph.id(), "graph id");
  out << "graph " << graph.id() << '\n' << "n " << graph.num_nodes() << '\n';
  for (NodeId u = 0; u < graph.num_nodes(); ++u) {
    check_token(graph.node_label(u), "node label");
    out << "v " << (u + 1) << ' ' << graph.node_label(u) << '\n';
  }
  std::vector<std::tuple<NodeId, NodeId, const Label*>> edges;
  for (const Edge& e : graph.edges()) {
    check_token(e.label, "edge label");
    const auto [a, b] = std::minmax(e.first, e.second);
    edges.emplace_back(a, b, &e.label);
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b, label] : edges) out << "e " << (a + 1) << ' ' << (b + 1) << ' ' << *label << '\n';
}

std::string serialize_text_graph(const LabeledGraph& graph) {
  std::ostringstream out;
  write_text_graph(out, graph);
  return out.str();
}

namespace {

using boost::property_tree::ptree;

std::string sanitize_label(std::string value) {
  const auto first = value.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return std::string(kUnlabeled);
  const auto last = value.find_last_not_of(" \t\r\n");
  value = value.substr(first, last - first + 1);
  for (char& c : value) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') c = '_';
  }
  return value;
}

/// Label from the first <attr> child; warns when there are more.
std::string element_label(const ptree& element, const std::string& what, std::vector<std::string>& warnings) {
  std::optional<std::string> label;
  std::string first_name;
  std::size_t attr_count = 0;
  for (const auto& [name, child] : element) {
    if (name != "attr") continue;
    ++attr_count;
    if (label) continue;
    first_name = child.get<std::string>("<xmlattr>.name", "");
    for (const auto& [type, value] : child) {
      if (type == "<xmlattr>" || type == "<xmlcomment>") continue;
      label = sanitize_label(value.data());
      break;
    }
    if (!label) label = std::string(kUnlabeled);
  }
  if (attr_count > 1) {
    warnings.push_back(what + " has " + std::to_string(attr_count) + " attributes; using '" + first_name +
                       "' as label");
  }
  return label.value_or(std::string(kUnlabeled));
}

}  // namespace

GxlParseResult parse_gxl_subset(std::string_view text, std::string fallback_id) {
  ptree doc;
  try {
    std::istringstream in{std::string(text)};
    boost::property_tree::read_xml(in, doc);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw ParseError(ParseErrorKind::kMalformed, e.line(), e.message());
  }
  const auto gxl = doc.get_child_optional("gxl");
  if (!gxl) throw ParseError(ParseErrorKind::kMalformed, 0, "missing <gxl> root element");
  const ptree* graph_element = nullptr;
  for (const auto& [name, child] : *gxl) {
    if (name != "graph") continue;
    if (graph_element) throw ParseError(ParseErrorKind::kMalformed, 0, "more than one <graph> element");
    graph_element = &child;
  }
  if (!graph_element) throw ParseError(ParseErrorKind::kMalformed, 0, "missing <graph> element");

  GxlParseResult result;
  result.graph.set_id(graph_element->get<std::string>("<xmlattr>.id", fallback_id));
  if (result.graph.id().empty()) throw ParseError(ParseErrorKind::kMissingId, 0, "graph has no id");
  std::unordered_map<std::string, NodeId> ids;
  for (const auto& [name, child] : *graph_element) {
    if (name != "node") continue;
    const auto id = child.get_optional<std::string>("<xmlattr>.id");
    if (!id) throw ParseError(ParseErrorKind::kMissingId, 0, "node without id");
    if (ids.contains(*id)) throw ParseError(ParseErrorKind::kDuplicateNode, 0, "node id '" + *id + "' repeated");
    ids.emplace(*id, result.graph.add_node(element_label(child, "node '" + *id + "'", result.warnings)));
  }
  for (const auto& [name, child] : *graph_element) {
    if (name == "node" || name == "<xmlattr>" || name == "<xmlcomment>" || name == "attr") continue;
    if (name != "edge") {
      result.warnings.push_back("ignoring unsupported element <" + name + ">");
      continue;
    }
    const auto from = child.get_optional<std::string>("<xmlattr>.from");
    const auto to = child.get_optional<std::string>("<xmlattr>.to");
    if (!from || !to) throw ParseError(ParseErrorKind::kMissingId, 0, "edge without from/to");
    const auto a = ids.find(*from);
    const auto b = ids.find(*to);
    if (a == ids.end() || b == ids.end()) {
      throw ParseError(ParseErrorKind::kUnknownNodeRef, 0, "edge " + *from + "-" + *to + " references an unknown node");
    }
    if (a->second == b->second) throw ParseError(ParseErrorKind::kSelfLoop, 0, "self-loop on node '" + *from + "'");
    if (result.graph.has_edge(a->second, b->second)) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, 0, "duplicate edge " + *from + "-" + *to);
    }
    result.graph.add_edge(a->second, b->second, element_label(child, "edge " + *from + "-" + *to, result.warnings));
  }
  return result;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "text") return GraphFormat::kText;
  if (name == "gxl") return GraphFormat::kGxl;
  throw ParameterError("unknown graph format '" + std::string(name) + "'");
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void load_file(const std::filesystem::path& path, GraphFormat format, std::vector<LabeledGraph>& out,
               std::vector<std::string>* warnings) {
  const std::string text = read_file(path);
  try {
    if (format == GraphFormat::kText) {
      for (auto& graph : parse_text_graphs(text)) out.push_back(std::move(graph));
    } else {
      GxlParseResult parsed = parse_gxl_subset(text, path.stem().string());
      if (warnings) {
        for (auto& w : parsed.warnings) warnings->push_back(path.filename().string() + ": " + w);
      }
      out.push_back(std::move(parsed.graph));
    }
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.line(), path.string() + ": " + e.detail());
  }
}

}  // namespace

std::vector<LabeledGraph> load_dataset(const std::filesystem::path& path, GraphFormat format,
                                       std::vector<std::string>* warnings) {
  std::vector<LabeledGraph> graphs;
  if (std::filesystem::is_directory(path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      if (!entry.is_regular_file()) continue;
      const std::string ext = entry.path().extension().string();
      const bool wanted = format == GraphFormat::kGxl ? ext == ".gxl" : (ext == ".txt" || ext == ".graph");
      if (wanted) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) load_file(file, format, graphs, warnings);
  } else {
    load_file(path, format, graphs, warnings);
  }
  std::set<std::string> ids;
  for (const auto& graph : graphs) {
    if (!ids.insert(graph.id()).second) throw ParameterError("duplicate graph id '" + graph.id() + "' in dataset");
  }
  return graphs;
}

}  // namespace ged
