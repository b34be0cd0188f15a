#include "ged/node_map.hpp"

#include <algorithm>

#include "ged/errors.hpp"

namespace ged {

std::string to_string(const Assignment& a) {
  auto part = [](NodeId x) { return x == kDummy ? std::string("eps") : std::to_string(x + 1); };
  return "(" + part(a.source) + "," + part(a.target) + ")";
}

NodeMap::NodeMap(std::size_t source_size, std::size_t target_size)
    : forward_(source_size, kDummy), backward_(target_size, kDummy) {}

NodeMap NodeMap::from_arrays(std::vector<NodeId> forward, std::vector<NodeId> backward, bool dummy_pair) {
  NodeMap map;
  map.forward_ = std::move(forward);
  map.backward_ = std::move(backward);
  map.dummy_pair_ = dummy_pair;
  return map;
}

NodeMap NodeMap::from_assignments(std::size_t source_size, std::size_t target_size,
                                  std::span<const Assignment> assignments) {
  NodeMap map(source_size, target_size);
  std::vector<bool> source_seen(source_size, false);
  std::vector<bool> target_seen(target_size, false);
  for (const Assignment& a : assignments) {
    if (a.is_dummy_pair()) {
      map.dummy_pair_ = true;
      continue;
    }
    if (a.source != kDummy) {
      if (a.source >= source_size) throw StructuralError("assignment source out of range: " + to_string(a));
      if (source_seen[a.source]) throw StructuralError("source assigned twice: " + to_string(a));
      source_seen[a.source] = true;
    }
    if (a.target != kDummy) {
      if (a.target >= target_size) throw StructuralError("assignment target out of range: " + to_string(a));
      if (target_seen[a.target]) throw StructuralError("target assigned twice: " + to_string(a));
      target_seen[a.target] = true;
    }
    if (a.is_substitution()) map.assign(a.source, a.target);
  }
  return map;
}

NodeMap NodeMap::identity(std::size_t source_size, std::size_t target_size) {
  NodeMap map(source_size, target_size);
  const std::size_t common = std::min(source_size, target_size);
  for (std::size_t i = 0; i < common; ++i) map.assign(static_cast<NodeId>(i), static_cast<NodeId>(i));
  return map;
}

void NodeMap::assign(NodeId u, NodeId v) {
  unassign_source(u);
  unassign_target(v);
  forward_[u] = v;
  backward_[v] = u;
  cached_cost_.reset();
}

void NodeMap::unassign_source(NodeId u) {
  const NodeId old = forward_[u];
  if (old != kDummy) backward_[old] = kDummy;
  forward_[u] = kDummy;
  cached_cost_.reset();
}

void NodeMap::unassign_target(NodeId v) {
  const NodeId old = backward_[v];
  if (old != kDummy) forward_[old] = kDummy;
  backward_[v] = kDummy;
  cached_cost_.reset();
}

bool NodeMap::contains(const Assignment& a) const {
  if (a.is_dummy_pair()) return dummy_pair_;
  if (a.source != kDummy) return a.source < forward_.size() && forward_[a.source] == a.target;
  return a.target < backward_.size() && backward_[a.target] == kDummy;
}

void NodeMap::assignments(std::vector<Assignment>& out) const {
  out.clear();
  for (NodeId u = 0; u < forward_.size(); ++u) out.push_back({u, forward_[u]});
  for (NodeId v = 0; v < backward_.size(); ++v) {
    if (backward_[v] == kDummy) out.push_back({kDummy, v});
  }
  if (dummy_pair_) out.push_back({kDummy, kDummy});
}

std::vector<Assignment> NodeMap::assignments() const {
  std::vector<Assignment> out;
  out.reserve(size());
  assignments(out);
  return out;
}

std::size_t NodeMap::size() const noexcept {
  std::size_t count = forward_.size() + (dummy_pair_ ? 1 : 0);
  for (NodeId src : backward_) count += (src == kDummy) ? 1 : 0;
  return count;
}

std::size_t NodeMap::substitutions() const noexcept {
  return static_cast<std::size_t>(std::count_if(forward_.begin(), forward_.end(),
                                                [](NodeId v) { return v != kDummy; }));
}

double NodeMap::cost() const {
  if (!cached_cost_) throw StructuralError("node map cost has not been computed");
  return *cached_cost_;
}

std::string NodeMap::key() const {
  std::string out;
  out.reserve(forward_.size() * 4);
  for (NodeId u = 0; u < forward_.size(); ++u) {
    if (u != 0) out += ' ';
    out += std::to_string(u + 1);
    out += '>';
    out += forward_[u] == kDummy ? std::string("-") : std::to_string(forward_[u] + 1);
  }
  return out;
}

}  // namespace ged
