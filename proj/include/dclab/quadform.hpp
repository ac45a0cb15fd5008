#pragma once

#include "dclab/spaces.hpp"

#include <string>

namespace dclab {

// Symmetric operator T: X -> X* as an m x m matrix; houses q(x) = <Tx, x>.
class SymOperator {
 public:
  explicit SymOperator(MatrixXd entries, double tol = 1e-12);
  static SymOperator identity(int m);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const MatrixXd& matrix() const { return entries_; }

 private:
  MatrixXd entries_;
};

class QuadraticForm {
 public:
  explicit QuadraticForm(SymOperator op) : op_(std::move(op)) {}
  explicit QuadraticForm(const MatrixXd& symmetric) : op_(SymOperator(symmetric)) {}

  int dim() const { return op_.dim(); }
  const SymOperator& op() const { return op_; }
  const MatrixXd& matrix() const { return op_.matrix(); }

  double eval(const VectorXd& x) const;      // x^T T x
  VectorXd gradient(const VectorXd& x) const;  // 2 T x
  ScalarFn evaluator() const;

 private:
  SymOperator op_;
};

// (B + B^T)/2; generates the same form as B.  Throws on non-square input.
SymOperator symmetrize(const MatrixXd& b);

// Second difference phi(x+u) + phi(x-u) - 2 phi(x).
double delta2(const ScalarFn& phi, const VectorXd& x, const VectorXd& u);

// --- named example forms ---------------------------------------------------

enum class CounterexampleVariant { Hadamard, FullSign };

struct FormOnSpace {
  QuadraticForm form;
  Space space;
};

// Block form [[0, J^T], [J, 0]] with q(x,y) = 2<y,Jx> on l1 (+)_1 l1:
//  - Hadamard: J the m x m Sylvester matrix (m a power of 2), ||J:l1->linf||=1;
//  - FullSign: J the 2^(m-1) x m matrix of all sign rows up to global sign,
//    an exact isometric embedding of l1^m into linf (m <= 12).
FormOnSpace counterexample_form(int m, CounterexampleVariant variant);

// Sylvester Hadamard matrix of order m (power of 2).
MatrixXd hadamard_matrix(int m);

// Duality form Q(x,x*) = sum x_i x*_i as the block operator (1/2)[[0,I],[I,0]]
// on X (+)_1 X* for X = l_p^m.
FormOnSpace duality_form(const Space& x_space);

// Symmetry of an operator-valued 2x2 block matrix: T11, T22 symmetric and
// T12^T = T21, all within tol.  Throws on non-conformable shapes.
bool block_symmetry_check(const MatrixXd& t11, const MatrixXd& t12, const MatrixXd& t21,
                          const MatrixXd& t22, double tol = 1e-12);

// --- operator norms --------------------------------------------------------

struct OperatorNorm {
  double value = 0.0;
  bool is_lower_bound = false;  // sampled search result, not an exact norm
};

enum class NormMethod { Exact, Sampled };

// ||M: from -> to||.  Exact is available when from = l1 (max column norm in
// `to`), to = linf (max row norm in from*), or both are l2 (top singular
// value); other exact requests fall back to a sampled, flagged lower bound.
OperatorNorm operator_norm(const MatrixXd& M, const Space& from, const Space& to,
                           NormMethod method = NormMethod::Exact, std::uint64_t seed = 7,
                           int restarts = 24, int steps = 120);

}  // namespace dclab
