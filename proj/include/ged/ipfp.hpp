#pragma once

#include <cstddef>
#include <vector>

#include "ged/instance.hpp"
#include "ged/lsape.hpp"
#include "ged/node_map.hpp"

namespace ged {

/// Fractional (n+1) x (m+1) node map. Rows 0..n-1 and columns 0..m-1 sum
/// to one; the last row and column absorb the slack. Stored in the same
/// layout as ExtendedCostMatrix, so arbitrary matrices (e.g. differences
/// of maps) fit as well.
using FractionalMap = ExtendedCostMatrix;

/// Binary matrix form of a node map. The (ε,ε) cell is always 0.
FractionalMap to_matrix(const NodeMap& map);

/// Implicit quadratic form D of the edit distance over vec(X):
///  - diagonal (i,k): node edit cost of assignment (i,k);
///  - off-diagonal {(i,k),(j,l)}: half the edge edit cost induced by the
///    pair (substitution if both edges exist, deletion or insertion if one
///    exists, 0 otherwise).
/// An edge (i,j) exists only for distinct real endpoints. D is never
/// materialized.
class QuadraticModel {
 public:
  explicit QuadraticModel(const GedInstance& instance) : instance_(&instance) {}

  const GedInstance& instance() const noexcept { return *instance_; }

  /// Single entry D[(i,k),(j,l)]; indices n and m denote the dummy row and
  /// column.
  double entry(std::size_t i, std::size_t k, std::size_t j, std::size_t l) const;

  /// D vec(x), returned in matrix shape. O(nm + |E_G||E_H|).
  FractionalMap linearize(const FractionalMap& x) const;

  /// vec(x)^T D vec(x).
  double cost(const FractionalMap& x) const;

 private:
  const GedInstance* instance_;
};

double quadratic_cost(const QuadraticModel& model, const FractionalMap& x);
FractionalMap linearize(const QuadraticModel& model, const FractionalMap& x);

/// Frobenius inner product of two same-shaped matrices (corner included).
double inner_product(const FractionalMap& a, const FractionalMap& b);

/// Minimizer over [0,1] of a*t^2 + b*t.
double minimize_on_unit_interval(double a, double b);

/// Exact line search argmin_{t in [0,1]} c(x + t (b - x)).
double line_search_alpha(const QuadraticModel& model, const FractionalMap& x, const FractionalMap& b);

/// Binary map of maximal overlap with x (LSAPE on -x).
NodeMap project_to_integral(const FractionalMap& x);

struct IpfpConfig {
  double epsilon = 1e-3;
  std::size_t max_iterations = 100;
};

struct IpfpTrace {
  std::vector<double> incumbent_costs;   // after step 3 of every iteration
  std::vector<double> fractional_costs;  // c(X_k) at the start of every iteration
  std::size_t iterations = 0;
  bool converged = false;
};

/// Frank-Wolfe descent on the quadratic form with LSAPE linearizations and
/// a final projection. Returns the cheaper of the best binary iterate and
/// the projected fixed point, with its cost cached.
NodeMap ipfp(const GedInstance& instance, NodeMap initial, const IpfpConfig& config = {},
             IpfpTrace* trace = nullptr);

}  // namespace ged
