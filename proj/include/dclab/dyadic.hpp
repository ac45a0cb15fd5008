#pragma once

#include "dclab/common.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dclab {

// The sign cube Gamma^n = {-1,+1}^n with uniform measure and its dyadic
// filtration Sigma_0 c ... c Sigma_n.  Tables are full 2^n enumerations;
// index convention: eta_1 is the most significant bit, -1 before +1.

inline constexpr int kMaxDepth = 20;

// One point of Gamma^n.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<int> bits);
  // Path of depth n whose bits encode `index` (eta_1 = MSB, -1 before +1).
  static Path from_index(std::uint64_t index, int n);

  int depth() const { return static_cast<int>(bits_.size()); }
  int sign(int k) const { return bits_[static_cast<std::size_t>(k) - 1]; }  // eta_k, 1-based
  const std::vector<int>& bits() const { return bits_; }
  std::uint64_t index() const;

 private:
  std::vector<int> bits_;
};

// A function f: Gamma^n -> R^m stored column-per-path (values(:, index(eta))).
class DyadicTable {
 public:
  DyadicTable() = default;
  DyadicTable(int depth, int dim);               // zero-initialized
  DyadicTable(int depth, MatrixXd values);       // dim = values.rows()
  static DyadicTable constant(int depth, const VectorXd& value);

  int depth() const { return depth_; }
  int dim() const { return static_cast<int>(values_.rows()); }
  std::uint64_t size() const { return std::uint64_t{1} << depth_; }

  VectorXd at(const Path& eta) const { return values_.col(static_cast<Eigen::Index>(eta.index())); }
  double scalar_at(std::uint64_t index) const;

  const MatrixXd& values() const { return values_; }
  MatrixXd& values() { return values_; }

  // True iff the table depends only on the first k coordinates, i.e. it is
  // constant on the 2^(n-k) blocks of the index range.  tol = 0 tests exact
  // equality.
  bool is_measurable(int k, double tol = 0.0) const;

 private:
  int depth_ = 0;
  MatrixXd values_;
};

// E f = 2^-n sum_eta f(eta), pairwise reduction in index order.
VectorXd expectation(const DyadicTable& f);

// E(f | Sigma_k): Sigma_k-measurable table averaging away the last n-k
// coordinates.  Throws std::out_of_range unless 0 <= k <= n.
DyadicTable conditional_expectation(const DyadicTable& f, int k);

// xi |-> f(prefix, xi), a table of depth n - len(prefix).
// Throws std::out_of_range if the prefix is as long as the depth or longer.
DyadicTable section(const DyadicTable& f, const Path& prefix);

struct TailWeightedSum {
  double lhs = 0.0;  // sum_{j>=1} 2^(jp) P(g > 2^j), finitely many terms
  double rhs = 0.0;  // 2^p/(2^p - 1) * E g^p
};

// Both sides of the dyadic tail bound for scalar g >= 0 and p > 0; the
// contract lhs <= rhs always holds.  Throws std::domain_error on negative
// values of g or p <= 0.
TailWeightedSum tail_weighted_sum(const DyadicTable& g, double p);

}  // namespace dclab
