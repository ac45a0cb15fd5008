#pragma once

#include "dclab/common.hpp"

#include <memory>
#include <string>

namespace dclab {

// Finite-dimensional normed space descriptor: either l_p^m (1 <= p <= inf)
// or a two-summand direct sum with outer norm |.|_1 or |.|_inf.
// Immutable; copies share subtrees.
class Space {
 public:
  enum class Kind { Lp, Sum };

  static Space lp(int dim, double p);
  static Space l1(int dim) { return lp(dim, 1.0); }
  static Space l2(int dim) { return lp(dim, 2.0); }
  static Space linf(int dim);
  static Space sum1(const Space& left, const Space& right);
  static Space sum_inf(const Space& left, const Space& right);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  double p() const { return p_; }           // Lp only
  double outer() const { return outer_; }   // Sum only: 1 or inf
  const Space& left() const { return *left_; }
  const Space& right() const { return *right_; }

  bool is_lp(double p) const;

  double norm(const VectorXd& x) const;
  // Subgradient of x |-> ||x||^2 (a gradient wherever the norm is smooth).
  VectorXd norm_sq_gradient(const VectorXd& x) const;

  // Dual space: (l_p)* = l_p* with 1/p + 1/p* = 1 (1* = inf), and
  // (X (+)_1 Y)* = X* (+)_inf Y*, (X (+)_inf Y)* = X* (+)_1 Y*.
  Space dual() const;

  // "lp:<m>:<p>" with p printed as a number or "inf";
  // "sum1(<left>,<right>)" / "suminf(<left>,<right>)".
  std::string to_string() const;
  static Space parse(const std::string& text);

 private:
  Space() = default;

  Kind kind_ = Kind::Lp;
  int dim_ = 0;
  double p_ = 2.0;
  double outer_ = 1.0;
  std::shared_ptr<const Space> left_, right_;
};

}  // namespace dclab
