#include "ged/lsape.hpp"

#include <cmath>
#include <limits>

#include "ged/errors.hpp"

namespace ged {

ExtendedCostMatrix::ExtendedCostMatrix(std::size_t rows, std::size_t cols, double fill)
    : n_(rows), m_(cols), data_((rows + 1) * (cols + 1), fill) {
  (*this)(n_, m_) = 0.0;
}

double ExtendedCostMatrix::evaluate(const NodeMap& map) const {
  double total = 0.0;
  for (NodeId i = 0; i < n_; ++i) {
    const NodeId k = map.image(i);
    total += k == kDummy ? deletion(i) : substitution(i, k);
  }
  for (NodeId k = 0; k < m_; ++k) {
    if (map.preimage(k) == kDummy) total += insertion(k);
  }
  return total;
}

namespace {

void check_matrix(const ExtendedCostMatrix& costs) {
  for (double x : costs.data()) {
    if (!std::isfinite(x)) throw ParameterError("LSAPE cost matrix has non-finite entries");
  }
  if (costs(costs.rows(), costs.cols()) != 0.0) throw ParameterError("LSAPE corner entry must be 0");
}

}  // namespace

LsapeSolution lsape_solve(const ExtendedCostMatrix& costs) {
  check_matrix(costs);
  const std::size_t n = costs.rows();
  const std::size_t m = costs.cols();
  const std::size_t size = n + m;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Square instance: rows = n sources + m insertion slots, columns = m
  // targets + n deletion slots. Row n+k may only take column k (insertion),
  // column m+i may only be taken by row i (deletion); slot-to-slot is free.
  auto cell = [&](std::size_t r, std::size_t c) -> double {
    if (r < n) {
      if (c < m) return costs(r, c);
      return c - m == r ? costs(r, m) : kInf;
    }
    if (c < m) return c == r - n ? costs(n, c) : kInf;
    return 0.0;
  };

  // Potentials-based Hungarian (one-based with a virtual column 0).
  std::vector<double> u(size + 1, 0.0), v(size + 1, 0.0);
  std::vector<std::size_t> match(size + 1, 0), way(size + 1, 0);
  std::vector<double> minv(size + 1);
  std::vector<char> used(size + 1);
  for (std::size_t row = 1; row <= size; ++row) {
    match[0] = row;
    std::size_t col0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col0] = 1;
      const std::size_t r0 = match[col0];
      double delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t c = 1; c <= size; ++c) {
        if (used[c]) continue;
        const double reduced = cell(r0 - 1, c - 1) - u[r0] - v[c];
        if (reduced < minv[c]) {
          minv[c] = reduced;
          way[c] = col0;
        }
        if (minv[c] < delta) {
          delta = minv[c];
          col1 = c;
        }
      }
      for (std::size_t c = 0; c <= size; ++c) {
        if (used[c]) {
          u[match[c]] += delta;
          v[c] -= delta;
        } else {
          minv[c] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  LsapeSolution solution{NodeMap(n, m), 0.0};
  for (std::size_t c = 1; c <= m; ++c) {
    const std::size_t r = match[c] - 1;
    if (r < n) solution.assignment.assign(static_cast<NodeId>(r), static_cast<NodeId>(c - 1));
  }
  solution.objective = costs.evaluate(solution.assignment);
  return solution;
}

namespace {

void brute_force(const ExtendedCostMatrix& costs, NodeId row, NodeMap& current, double partial,
                 LsapeSolution& best, bool& found) {
  const std::size_t n = costs.rows();
  const std::size_t m = costs.cols();
  if (row == n) {
    double total = partial;
    for (NodeId k = 0; k < m; ++k) {
      if (current.preimage(k) == kDummy) total += costs.insertion(k);
    }
    if (!found || total < best.objective) {
      best.assignment = current;
      best.objective = total;
      found = true;
    }
    return;
  }
  for (NodeId k = 0; k < m; ++k) {
    if (current.preimage(k) != kDummy) continue;
    current.assign(row, k);
    brute_force(costs, row + 1, current, partial + costs.substitution(row, k), best, found);
    current.unassign_source(row);
  }
  brute_force(costs, row + 1, current, partial + costs.deletion(row), best, found);
}

}  // namespace

LsapeSolution lsape_bruteforce(const ExtendedCostMatrix& costs) {
  check_matrix(costs);
  if (costs.rows() + costs.cols() > 10) throw SizeGuardError("lsape_bruteforce needs n + m <= 10");
  NodeMap current(costs.rows(), costs.cols());
  LsapeSolution best{current, 0.0};
  bool found = false;
  brute_force(costs, 0, current, 0.0, best, found);
  return best;
}

}  // namespace ged
