#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace dclab {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Point evaluator for functions phi: R^m -> R (quadratic forms, norms, ...).
using ScalarFn = std::function<double(const VectorXd&)>;

// Default tolerance for exact identities checked in floating point.
inline constexpr double kIdentityTol = 1e-10;

// Deterministic RNG; all randomized code derives engines from a user seed.
using Rng = std::mt19937_64;

// Pairwise (tree) reduction of terms[lo..hi) in index order: split at the
// midpoint, recurse, add.  Fixed order makes floating-point results
// reproducible across runs and worker counts.
template <typename T, typename TermFn>
T pairwise_sum(std::size_t lo, std::size_t hi, const TermFn& term) {
  if (hi - lo == 1) return term(lo);
  const std::size_t mid = lo + (hi - lo) / 2;
  T left = pairwise_sum<T>(lo, mid, term);
  T right = pairwise_sum<T>(mid, hi, term);
  return left + right;
}

inline double pairwise_sum(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return pairwise_sum<double>(0, v.size(), [&](std::size_t i) { return v[i]; });
}

// Runs jobs 0..count-1 on up to `workers` threads and folds each result into
// a caller-supplied reducer under a lock.  The reducer must be
// order-independent (e.g. an argmax with a deterministic tie rule) so results
// do not depend on the worker count.
void parallel_restarts(int count, int workers, const std::function<void(int)>& job);

// Worker cap: explicit argument if > 0, else DCLAB_THREADS, else hardware.
int resolve_workers(int requested);

}  // namespace dclab
