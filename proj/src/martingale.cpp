#include "dclab/martingale.hpp"

#include <cmath>
#include <stdexcept>

namespace dclab {

WalshPaleyMartingale::WalshPaleyMartingale(std::vector<DyadicTable> levels, double tol)
    : levels_(std::move(levels)) {
  if (levels_.empty()) throw std::invalid_argument("martingale: no levels");
  const int n = depth();
  const int m = dim();
  for (int k = 0; k <= n; ++k) {
    const DyadicTable& f = levels_[static_cast<std::size_t>(k)];
    if (f.depth() != n || f.dim() != m)
      throw std::invalid_argument("martingale: level shape mismatch");
    if (!f.is_measurable(k, tol))
      throw std::invalid_argument("martingale: level " + std::to_string(k) +
                                  " is not Sigma_k-measurable");
  }
  // One-step averaging: f_k(w) = 1/2 f_{k+1}(w,-1) + 1/2 f_{k+1}(w,+1).
  for (int k = 0; k < n; ++k) {
    const auto& fk = levels_[static_cast<std::size_t>(k)].values();
    const auto& fk1 = levels_[static_cast<std::size_t>(k) + 1].values();
    const std::uint64_t half = std::uint64_t{1} << (n - k - 1);
    for (std::uint64_t b = 0; b < levels_.front().size(); b += 2 * half) {
      const auto lo = static_cast<Eigen::Index>(b);
      const auto hi = static_cast<Eigen::Index>(b + half);
      const double defect =
          (fk.col(lo) - 0.5 * fk1.col(lo) - 0.5 * fk1.col(hi)).cwiseAbs().maxCoeff();
      if (defect > tol) throw std::invalid_argument("martingale: averaging identity fails");
    }
  }
}

WalshPaleyMartingale WalshPaleyMartingale::from_terminal(const DyadicTable& terminal) {
  std::vector<DyadicTable> levels;
  levels.reserve(static_cast<std::size_t>(terminal.depth()) + 1);
  for (int k = 0; k <= terminal.depth(); ++k)
    levels.push_back(conditional_expectation(terminal, k));
  WalshPaleyMartingale m;
  m.levels_ = std::move(levels);  // by construction, skip re-validation
  return m;
}

PredictableSigns::PredictableSigns(std::vector<DyadicTable> eps) : eps_(std::move(eps)) {
  for (std::size_t k = 0; k < eps_.size(); ++k) {
    const DyadicTable& e = eps_[k];
    if (e.dim() != 1) throw std::invalid_argument("signs: tables must be scalar");
    if (!((e.values().array() == 1.0) || (e.values().array() == -1.0)).all())
      throw std::invalid_argument("signs: values must be exactly -1 or +1");
    if (!e.is_measurable(static_cast<int>(k)))
      throw std::invalid_argument("signs: eps_" + std::to_string(k + 1) + " not predictable");
  }
}

PredictableSigns PredictableSigns::constant(const std::vector<int>& signs, int depth) {
  std::vector<DyadicTable> eps;
  eps.reserve(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("signs: entries must be -1 or +1");
    eps.push_back(DyadicTable::constant(depth, VectorXd::Constant(1, static_cast<double>(s))));
  }
  return PredictableSigns(std::move(eps));
}

PredictableSigns PredictableSigns::all_plus(int n, int depth) {
  return constant(std::vector<int>(static_cast<std::size_t>(n), 1), depth);
}

std::vector<DyadicTable> differences(const WalshPaleyMartingale& mart) {
  std::vector<DyadicTable> d;
  d.reserve(static_cast<std::size_t>(mart.depth()));
  for (int k = 1; k <= mart.depth(); ++k)
    d.emplace_back(mart.level(k).depth(),
                   MatrixXd(mart.level(k).values() - mart.level(k - 1).values()));
  return d;
}

WalshPaleyMartingale pad(const WalshPaleyMartingale& mart, int extra) {
  if (extra < 0) throw std::invalid_argument("pad: extra must be >= 0");
  const int n = mart.depth(), N = n + extra;
  const std::uint64_t reps = std::uint64_t{1} << extra;
  std::vector<DyadicTable> levels;
  levels.reserve(static_cast<std::size_t>(N) + 1);
  auto lift = [&](const DyadicTable& f) {
    DyadicTable out(N, f.dim());
    for (std::uint64_t i = 0; i < f.size(); ++i)
      out.values()
          .middleCols(static_cast<Eigen::Index>(i * reps), static_cast<Eigen::Index>(reps))
          .colwise() = f.values().col(static_cast<Eigen::Index>(i));
    return out;
  };
  for (int k = 0; k <= n; ++k) levels.push_back(lift(mart.level(k)));
  for (int k = n + 1; k <= N; ++k) levels.push_back(levels[static_cast<std::size_t>(n)]);
  return WalshPaleyMartingale(std::move(levels));
}

WalshPaleyMartingale apply(const MatrixXd& T, const WalshPaleyMartingale& mart) {
  if (T.cols() != mart.dim()) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<DyadicTable> levels;
  levels.reserve(mart.levels().size());
  for (const DyadicTable& f : mart.levels())
    levels.emplace_back(f.depth(), MatrixXd(T * f.values()));
  return WalshPaleyMartingale(std::move(levels));
}

DyadicTable transform(const MatrixXd& T, const WalshPaleyMartingale& mart,
                      const PredictableSigns& signs) {
  if (T.cols() != mart.dim()) throw std::invalid_argument("transform: dimension mismatch");
  if (signs.count() != mart.depth()) throw std::invalid_argument("transform: signs depth mismatch");
  DyadicTable out(mart.depth(), static_cast<int>(T.rows()));
  for (int k = 1; k <= mart.depth(); ++k) {
    const MatrixXd dfk = mart.level(k).values() - mart.level(k - 1).values();
    out.values() += (T * dfk) * signs.at(k).values().row(0).asDiagonal();
  }
  return out;
}

double doob_ratio(const WalshPaleyMartingale& mart, double p, const Space& space) {
  if (!(p > 1.0)) throw std::domain_error("doob_ratio: p must be > 1");
  const std::uint64_t paths = mart.terminal().size();
  std::vector<double> maxp(paths), termp(paths);
  for (std::uint64_t i = 0; i < paths; ++i) {
    double mx = 0.0;
    for (int k = 0; k <= mart.depth(); ++k)
      mx = std::max(mx, space.norm(mart.level(k).values().col(static_cast<Eigen::Index>(i))));
    maxp[i] = std::pow(mx, p);
    termp[i] =
        std::pow(space.norm(mart.terminal().values().col(static_cast<Eigen::Index>(i))), p);
  }
  const double denom = pairwise_sum(termp) / static_cast<double>(paths);
  if (denom == 0.0) return 1.0;  // a.e.-zero terminal: defined as 1
  const double numer = pairwise_sum(maxp) / static_cast<double>(paths);
  return std::pow(numer / denom, 1.0 / p);
}

StoppingProfile::StoppingProfile(double base, std::vector<std::vector<int>> levels)
    : base_(base), levels_(std::move(levels)) {
  if (!(base_ > 1.0)) throw std::domain_error("StoppingProfile: base must be > 1");
}

StoppingProfile stopping_profile(const WalshPaleyMartingale& mart, const Space& space,
                                 double base) {
  if (!(base > 1.0)) throw std::domain_error("stopping_profile: base must be > 1");
  const int n = mart.depth();
  const std::uint64_t paths = mart.terminal().size();
  const auto diffs = differences(mart);

  // candidate(k, eta) = max ||f_k(eta) +- df_{k+1}(eta)||, 0 <= k < n
  MatrixXd candidate(std::max(n, 1), static_cast<Eigen::Index>(paths));
  double overall_max = 0.0;
  for (int k = 0; k < n; ++k) {
    for (std::uint64_t i = 0; i < paths; ++i) {
      const auto col = static_cast<Eigen::Index>(i);
      const VectorXd fk = mart.level(k).values().col(col);
      const VectorXd dk = diffs[static_cast<std::size_t>(k)].values().col(col);
      const double v = std::max(space.norm(fk + dk), space.norm(fk - dk));
      candidate(k, col) = v;
      overall_max = std::max(overall_max, v);
    }
  }

  std::vector<std::vector<int>> levels;
  levels.emplace_back(paths, 0);  // m_0 == 0
  for (int r = 1;; ++r) {
    const double threshold = std::pow(base, static_cast<double>(r));
    std::vector<int> mr(paths, n);
    bool any_below_n = false;
    for (std::uint64_t i = 0; i < paths; ++i) {
      for (int k = 0; k < n; ++k) {
        if (candidate(k, static_cast<Eigen::Index>(i)) > threshold) {  // strict, per the proof
          mr[i] = k;
          any_below_n = true;
          break;
        }
      }
    }
    levels.push_back(std::move(mr));
    if (!any_below_n || threshold > overall_max) break;
  }
  return StoppingProfile(base, std::move(levels));
}

SecondDifferenceSum second_difference_sum(const ScalarFn& phi, const WalshPaleyMartingale& mart) {
  const int n = mart.depth();
  const std::uint64_t paths = mart.terminal().size();
  const auto diffs = differences(mart);
  std::vector<double> signed_terms(paths), abs_terms(paths);
  for (std::uint64_t i = 0; i < paths; ++i) {
    const auto col = static_cast<Eigen::Index>(i);
    double s = 0.0, a = 0.0;
    for (int k = 1; k <= n; ++k) {
      const VectorXd x = mart.level(k - 1).values().col(col);
      const VectorXd u = diffs[static_cast<std::size_t>(k - 1)].values().col(col);
      const double d2 = phi(x + u) + phi(x - u) - 2.0 * phi(x);
      s += d2;
      a += std::abs(d2);
    }
    signed_terms[i] = s;
    abs_terms[i] = a;
  }
  SecondDifferenceSum out;
  out.signed_sum = pairwise_sum(signed_terms) / static_cast<double>(paths);
  out.absolute_sum = pairwise_sum(abs_terms) / static_cast<double>(paths);
  return out;
}

}  // namespace dclab
