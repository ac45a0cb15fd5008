#pragma once

#include "dclab/dyadic.hpp"
#include "dclab/spaces.hpp"

#include <vector>

namespace dclab {

// Walsh-Paley martingale f_0,...,f_n on Gamma^n, each level a depth-n table
// with f_k = E(f_n | Sigma_k).
class WalshPaleyMartingale {
 public:
  WalshPaleyMartingale() = default;
  // Takes ownership of precomputed levels; validates measurability and the
  // one-step averaging identity up to `tol`.
  explicit WalshPaleyMartingale(std::vector<DyadicTable> levels, double tol = 1e-12);

  static WalshPaleyMartingale from_terminal(const DyadicTable& terminal);

  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  int dim() const { return levels_.front().dim(); }
  const DyadicTable& level(int k) const { return levels_[static_cast<std::size_t>(k)]; }
  const DyadicTable& terminal() const { return levels_.back(); }
  const std::vector<DyadicTable>& levels() const { return levels_; }

 private:
  std::vector<DyadicTable> levels_;
};

// Predictable sequence (eps_1,...,eps_n) of {-1,+1} tables, eps_k
// Sigma_{k-1}-measurable.
class PredictableSigns {
 public:
  PredictableSigns() = default;
  explicit PredictableSigns(std::vector<DyadicTable> eps);
  // Constant signs eps_k == signs[k-1] lifted to depth-n tables.
  static PredictableSigns constant(const std::vector<int>& signs, int depth);
  static PredictableSigns all_plus(int n, int depth);

  int count() const { return static_cast<int>(eps_.size()); }
  const DyadicTable& at(int k) const { return eps_[static_cast<std::size_t>(k) - 1]; }  // 1-based
  DyadicTable& at(int k) { return eps_[static_cast<std::size_t>(k) - 1]; }

 private:
  std::vector<DyadicTable> eps_;
};

// df_k = f_k - f_{k-1} for k = 1..n.
std::vector<DyadicTable> differences(const WalshPaleyMartingale& mart);

// (f_0,...,f_n,f_n,...) extended to depth n + extra.
WalshPaleyMartingale pad(const WalshPaleyMartingale& mart, int extra);

// (T f_0,...,T f_n); T may be rectangular.
WalshPaleyMartingale apply(const MatrixXd& T, const WalshPaleyMartingale& mart);

// Martingale transform sum_k eps_k * T(df_k) as a single table.
DyadicTable transform(const MatrixXd& T, const WalshPaleyMartingale& mart,
                      const PredictableSigns& signs);

// (E max_k ||f_k||^p)^(1/p) / (E ||f_n||^p)^(1/p); 1 when the terminal
// vanishes a.e.  Contract: <= p/(p-1).
double doob_ratio(const WalshPaleyMartingale& mart, double p, const Space& space);

// Stopping times m_r = first level k with max ||f_k +- df_{k+1}|| > base^r
// (else n); m_0 == 0.
class StoppingProfile {
 public:
  StoppingProfile(double base, std::vector<std::vector<int>> levels);

  double base() const { return base_; }
  int radius_count() const { return static_cast<int>(levels_.size()); }  // r = 0..count-1
  const std::vector<int>& stop_level(int r) const { return levels_[static_cast<std::size_t>(r)]; }

 private:
  double base_ = 2.0;
  std::vector<std::vector<int>> levels_;
};

StoppingProfile stopping_profile(const WalshPaleyMartingale& mart, const Space& space,
                                 double base = 2.0);

struct SecondDifferenceSum {
  double signed_sum = 0.0;    // E sum_k D2phi(f_{k-1}, df_k) = 2 E phi(f_n) - 2 phi(f_0)
  double absolute_sum = 0.0;  // same with |D2phi|
};

SecondDifferenceSum second_difference_sum(const ScalarFn& phi, const WalshPaleyMartingale& mart);

}  // namespace dclab
