#include "ged/ipfp.hpp"

#include <algorithm>
#include <cmath>

namespace ged {

FractionalMap to_matrix(const NodeMap& map) {
  const std::size_t n = map.source_size();
  const std::size_t m = map.target_size();
  FractionalMap x(n, m, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    const NodeId k = map.image(i);
    x(i, k == kDummy ? m : k) = 1.0;
  }
  for (NodeId k = 0; k < m; ++k) {
    if (map.preimage(k) == kDummy) x(n, k) = 1.0;
  }
  return x;
}

double QuadraticModel::entry(std::size_t i, std::size_t k, std::size_t j, std::size_t l) const {
  const GedInstance& inst = *instance_;
  const std::size_t n = inst.source_size();
  const std::size_t m = inst.target_size();
  if (i == j && k == l) {
    if (i == n && k == m) return 0.0;
    return inst.node_cost(i == n ? kDummy : static_cast<NodeId>(i), k == m ? kDummy : static_cast<NodeId>(k));
  }
  const EdgeLabelId e = (i < n && j < n && i != j) ? inst.source_edge(i, j) : kNoEdge;
  const EdgeLabelId f = (k < m && l < m && k != l) ? inst.target_edge(k, l) : kNoEdge;
  if (e != kNoEdge && f != kNoEdge) return 0.5 * inst.edge_sub(e, f);
  if (e != kNoEdge) return 0.5 * inst.edge_del(e);
  if (f != kNoEdge) return 0.5 * inst.edge_ins(f);
  return 0.0;
}

FractionalMap QuadraticModel::linearize(const FractionalMap& x) const {
  const GedInstance& inst = *instance_;
  const std::size_t n = inst.source_size();
  const std::size_t m = inst.target_size();
  std::vector<double> row_sum(n, 0.0);
  std::vector<double> col_sum(m, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l <= m; ++l) row_sum[j] += x(j, l);
  }
  for (std::size_t l = 0; l < m; ++l) {
    for (std::size_t j = 0; j <= n; ++j) col_sum[l] += x(j, l);
  }

  FractionalMap out(n, m, 0.0);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) {
      if (i == n && k == m) continue;
      const NodeId u = i == n ? kDummy : static_cast<NodeId>(i);
      const NodeId v = k == m ? kDummy : static_cast<NodeId>(k);
      double edge = 0.0;
      if (u != kDummy) {
        for (const LabeledNeighbor& e : inst.source_neighbors(u)) {
          const double del = inst.edge_del(e.label);
          edge += del * row_sum[e.node];
          if (v == kDummy) continue;
          for (const LabeledNeighbor& f : inst.target_neighbors(v)) {
            edge += (inst.edge_sub(e.label, f.label) - del) * x(e.node, f.node);
          }
        }
      }
      if (v != kDummy) {
        for (const LabeledNeighbor& f : inst.target_neighbors(v)) {
          double mass = col_sum[f.node];
          if (u != kDummy) {
            for (const LabeledNeighbor& e : inst.source_neighbors(u)) mass -= x(e.node, f.node);
          }
          edge += inst.edge_ins(f.label) * mass;
        }
      }
      out(i, k) = inst.node_cost(u, v) * x(i, k) + 0.5 * edge;
    }
  }
  return out;
}

double QuadraticModel::cost(const FractionalMap& x) const { return inner_product(x, linearize(x)); }

double quadratic_cost(const QuadraticModel& model, const FractionalMap& x) { return model.cost(x); }

FractionalMap linearize(const QuadraticModel& model, const FractionalMap& x) { return model.linearize(x); }

double inner_product(const FractionalMap& a, const FractionalMap& b) {
  double total = 0.0;
  for (std::size_t idx = 0; idx < a.data().size(); ++idx) total += a.data()[idx] * b.data()[idx];
  return total;
}

double minimize_on_unit_interval(double a, double b) {
  if (a > 0.0) return std::clamp(-b / (2.0 * a), 0.0, 1.0);
  return a + b < 0.0 ? 1.0 : 0.0;
}

namespace {

FractionalMap difference(const FractionalMap& lhs, const FractionalMap& rhs) {
  FractionalMap out = lhs;
  for (std::size_t idx = 0; idx < out.data().size(); ++idx) out.data()[idx] -= rhs.data()[idx];
  return out;
}

double line_search_with_gradient(const QuadraticModel& model, const FractionalMap& gradient_half,
                                 const FractionalMap& x, const FractionalMap& b) {
  const FractionalMap direction = difference(b, x);
  const double a = model.cost(direction);
  const double slope = 2.0 * inner_product(gradient_half, direction);
  return minimize_on_unit_interval(a, slope);
}

}  // namespace

double line_search_alpha(const QuadraticModel& model, const FractionalMap& x, const FractionalMap& b) {
  return line_search_with_gradient(model, model.linearize(x), x, b);
}

NodeMap project_to_integral(const FractionalMap& x) {
  FractionalMap negated = x;
  for (double& value : negated.data()) value = -value;
  negated(negated.rows(), negated.cols()) = 0.0;
  return lsape_solve(negated).assignment;
}

NodeMap ipfp(const GedInstance& instance, NodeMap initial, const IpfpConfig& config, IpfpTrace* trace) {
  constexpr double kZeroCost = 1e-12;
  const QuadraticModel model(instance);
  NodeMap best = std::move(initial);
  best.set_dummy_pair(false);
  double best_cost = induced_cost(instance, best);

  FractionalMap x = to_matrix(best);
  bool converged = false;
  std::size_t iteration = 0;
  for (; iteration < config.max_iterations; ++iteration) {
    const FractionalMap gradient_half = model.linearize(x);
    const double current = inner_product(gradient_half, x);
    if (trace) trace->fractional_costs.push_back(current);

    LsapeSolution direction = lsape_solve(gradient_half);
    const double candidate_cost = induced_cost(instance, direction.assignment);
    if (candidate_cost < best_cost) {
      best = direction.assignment;
      best_cost = candidate_cost;
    }
    if (trace) trace->incumbent_costs.push_back(best_cost);

    if (current < kZeroCost || std::abs(current - direction.objective) / current < config.epsilon) {
      converged = true;
      ++iteration;
      break;
    }
    const FractionalMap b = to_matrix(direction.assignment);
    const double alpha = line_search_with_gradient(model, gradient_half, x, b);
    for (std::size_t idx = 0; idx < x.data().size(); ++idx) x.data()[idx] += alpha * (b.data()[idx] - x.data()[idx]);
  }
  if (trace) {
    trace->iterations = iteration;
    trace->converged = converged;
  }

  NodeMap projected = project_to_integral(x);
  if (induced_cost(instance, projected) < best_cost) return projected;
  best.set_cost(best_cost);
  return best;
}

}  // namespace ged
