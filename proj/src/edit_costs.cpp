#include "ged/edit_costs.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ged/errors.hpp"

namespace ged {

namespace {

void check_cost(double value, const char* what) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ParameterError(std::string(what) + " cost must be finite and nonnegative");
  }
}

void check_triple(const ConstantCostTriple& t) {
  check_cost(t.sub, "substitution");
  check_cost(t.del, "deletion");
  check_cost(t.ins, "insertion");
}

CostTable parse_side(const nlohmann::json& side) {
  CostTable table;
  const bool symmetric = side.value("symmetric", true);
  if (side.contains("sub")) {
    for (const auto& entry : side.at("sub")) {
      if (!entry.is_array() || entry.size() != 3) {
        throw ParameterError("substitution entries must be [label, label, cost]");
      }
      const Label a = entry[0].get<std::string>();
      const Label b = entry[1].get<std::string>();
      const double cost = entry[2].get<double>();
      check_cost(cost, "substitution");
      table.sub[{a, b}] = cost;
      if (symmetric) table.sub[{b, a}] = cost;
    }
  }
  auto read_map = [](const nlohmann::json& obj, std::map<Label, double>& out, const char* what) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      const double cost = it.value().get<double>();
      check_cost(cost, what);
      out[it.key()] = cost;
    }
  };
  if (side.contains("del")) read_map(side.at("del"), table.del, "deletion");
  if (side.contains("ins")) read_map(side.at("ins"), table.ins, "insertion");
  if (side.contains("default")) {
    const auto& d = side.at("default");
    auto read_default = [&](const char* key, std::optional<double>& out) {
      if (d.contains(key)) {
        out = d.at(key).get<double>();
        check_cost(*out, key);
      }
    };
    read_default("sub", table.default_sub);
    read_default("del", table.default_del);
    read_default("ins", table.default_ins);
  }
  return table;
}

}  // namespace

ConstantCosts::ConstantCosts(double sub, double del, double ins)
    : ConstantCosts(ConstantCostTriple{sub, del, ins}, ConstantCostTriple{sub, del, ins}) {}

ConstantCosts::ConstantCosts(ConstantCostTriple node, ConstantCostTriple edge) : node_(node), edge_(edge) {
  check_triple(node_);
  check_triple(edge_);
}

TableCosts::TableCosts(CostTable node, CostTable edge) : node_(std::move(node)), edge_(std::move(edge)) {}

double TableCosts::sub(const CostTable& table, const Label& a, const Label& b, const char* what) {
  if (auto it = table.sub.find({a, b}); it != table.sub.end()) return it->second;
  if (a == b) return 0.0;
  if (table.default_sub) return *table.default_sub;
  throw ParameterError(std::string("no ") + what + " substitution cost for '" + a + "' -> '" + b + "'");
}

double TableCosts::single(const std::map<Label, double>& entries, const std::optional<double>& fallback,
                          const Label& label, const char* what) {
  if (auto it = entries.find(label); it != entries.end()) return it->second;
  if (fallback) return *fallback;
  throw ParameterError(std::string("no ") + what + " cost for '" + label + "'");
}

std::unique_ptr<EditCostModel> parse_cost_table(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("cost table: ") + e.what());
  }
  try {
    CostTable node = doc.contains("node") ? parse_side(doc.at("node")) : CostTable{};
    CostTable edge = doc.contains("edge") ? parse_side(doc.at("edge")) : CostTable{};
    return std::make_unique<TableCosts>(std::move(node), std::move(edge));
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("cost table: ") + e.what());
  }
}

std::unique_ptr<EditCostModel> load_cost_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open cost table " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_cost_table(buffer.str());
}

std::unique_ptr<EditCostModel> make_cost_model(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParameterError("cost spec must be constant:<sub,del,ins> or table:<file>");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "table") return load_cost_table(arg);
  if (kind != "constant") throw ParameterError("unknown cost model '" + kind + "'");
  double values[3];
  std::stringstream ss(arg);
  std::string item;
  int count = 0;
  while (std::getline(ss, item, ',')) {
    if (count == 3) throw ParameterError("constant costs take exactly three values");
    try {
      std::size_t used = 0;
      values[count] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParameterError("bad constant cost '" + item + "'");
    }
    ++count;
  }
  if (count != 3) throw ParameterError("constant costs take exactly three values");
  return std::make_unique<ConstantCosts>(values[0], values[1], values[2]);
}

}  // namespace ged
