#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "ged/graph.hpp"

namespace ged {

/// The six edit cost functions for nodes and edges. Implementations must
/// return nonnegative finite values and be safe for concurrent reads.
class EditCostModel {
 public:
  virtual ~EditCostModel() = default;

  virtual double node_sub(const Label& a, const Label& b) const = 0;
  virtual double node_del(const Label& a) const = 0;
  virtual double node_ins(const Label& b) const = 0;
  virtual double edge_sub(const Label& a, const Label& b) const = 0;
  virtual double edge_del(const Label& a) const = 0;
  virtual double edge_ins(const Label& b) const = 0;
};

struct ConstantCostTriple {
  double sub = 1.0;
  double del = 1.0;
  double ins = 1.0;
};

/// Constant costs. Substituting equal labels is free; unequal labels cost
/// `sub`. With one triple the same constants apply to nodes and edges.
class ConstantCosts final : public EditCostModel {
 public:
  ConstantCosts(double sub, double del, double ins);
  ConstantCosts(ConstantCostTriple node, ConstantCostTriple edge);

  double node_sub(const Label& a, const Label& b) const override { return a == b ? 0.0 : node_.sub; }
  double node_del(const Label&) const override { return node_.del; }
  double node_ins(const Label&) const override { return node_.ins; }
  double edge_sub(const Label& a, const Label& b) const override { return a == b ? 0.0 : edge_.sub; }
  double edge_del(const Label&) const override { return edge_.del; }
  double edge_ins(const Label&) const override { return edge_.ins; }

  const ConstantCostTriple& node_costs() const noexcept { return node_; }
  const ConstantCostTriple& edge_costs() const noexcept { return edge_; }

 private:
  ConstantCostTriple node_;
  ConstantCostTriple edge_;
};

/// One side (node or edge) of a tabulated cost model.
struct CostTable {
  std::map<std::pair<Label, Label>, double> sub;
  std::map<Label, double> del;
  std::map<Label, double> ins;
  std::optional<double> default_sub;
  std::optional<double> default_del;
  std::optional<double> default_ins;
};

/// Pairwise tabulated costs. Lookups fall back to the table default; equal
/// labels without an explicit entry cost 0. A miss without default throws
/// ParameterError.
class TableCosts final : public EditCostModel {
 public:
  TableCosts(CostTable node, CostTable edge);

  double node_sub(const Label& a, const Label& b) const override { return sub(node_, a, b, "node"); }
  double node_del(const Label& a) const override { return single(node_.del, node_.default_del, a, "node deletion"); }
  double node_ins(const Label& b) const override { return single(node_.ins, node_.default_ins, b, "node insertion"); }
  double edge_sub(const Label& a, const Label& b) const override { return sub(edge_, a, b, "edge"); }
  double edge_del(const Label& a) const override { return single(edge_.del, edge_.default_del, a, "edge deletion"); }
  double edge_ins(const Label& b) const override { return single(edge_.ins, edge_.default_ins, b, "edge insertion"); }

 private:
  static double sub(const CostTable& table, const Label& a, const Label& b, const char* what);
  static double single(const std::map<Label, double>& entries, const std::optional<double>& fallback,
                       const Label& label, const char* what);

  CostTable node_;
  CostTable edge_;
};

/// Reads a JSON cost table:
/// {"node": {"sub": [["a","b",3.0], ...], "del": {"a": 1}, "ins": {...},
///           "default": {"sub": 1, "del": 1, "ins": 1}},
///  "edge": {...}}
/// Substitution entries are symmetric unless "symmetric": false is given.
std::unique_ptr<EditCostModel> load_cost_table(const std::filesystem::path& path);
std::unique_ptr<EditCostModel> parse_cost_table(const std::string& json_text);

/// Parses "constant:<sub,del,ins>" or "table:<file>".
std::unique_ptr<EditCostModel> make_cost_model(const std::string& spec);

}  // namespace ged
