#pragma once

#include <cstddef>
#include <vector>

#include "ged/node_map.hpp"

namespace ged {

/// (n+1) x (m+1) cost matrix of an assignment problem with error
/// correction: entry (i,k) substitutes row i by column k, (i,m) deletes row
/// i, (n,k) inserts column k. The corner (n,m) is always 0.
class ExtendedCostMatrix {
 public:
  ExtendedCostMatrix() = default;
  ExtendedCostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  std::size_t rows() const noexcept { return n_; }  // n, without the dummy row
  std::size_t cols() const noexcept { return m_; }  // m, without the dummy column

  double& operator()(std::size_t i, std::size_t k) noexcept { return data_[i * (m_ + 1) + k]; }
  double operator()(std::size_t i, std::size_t k) const noexcept { return data_[i * (m_ + 1) + k]; }

  double substitution(std::size_t i, std::size_t k) const noexcept { return (*this)(i, k); }
  double deletion(std::size_t i) const noexcept { return (*this)(i, m_); }
  double insertion(std::size_t k) const noexcept { return (*this)(n_, k); }

  /// Sum of the entries selected by `map`.
  double evaluate(const NodeMap& map) const;

  std::vector<double>& data() noexcept { return data_; }
  const std::vector<double>& data() const noexcept { return data_; }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<double> data_{0.0};
};

struct LsapeSolution {
  NodeMap assignment;
  double objective = 0.0;
};

/// Exact minimum-cost solution via reduction to a square (n+m) assignment
/// problem solved with the shortest augmenting path Hungarian method.
/// Deterministic for a fixed input. Throws ParameterError on non-finite
/// entries or a nonzero corner.
LsapeSolution lsape_solve(const ExtendedCostMatrix& costs);

/// Exhaustive reference solver; requires n + m <= 10.
LsapeSolution lsape_bruteforce(const ExtendedCostMatrix& costs);

}  // namespace ged
