#include "dclab/dyadic.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace dclab {

void parallel_restarts(int count, int workers, const std::function<void(int)>& job) {
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) job(i);
    });
  }
  for (auto& t : pool) t.join();
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DCLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

Path::Path(std::vector<int> bits) : bits_(std::move(bits)) {
  if (static_cast<int>(bits_.size()) > kMaxDepth)
    throw std::out_of_range("Path: depth exceeds cap");
  for (int b : bits_)
    if (b != -1 && b != 1) throw std::invalid_argument("Path: entries must be -1 or +1");
}

Path Path::from_index(std::uint64_t index, int n) {
  if (n < 0 || n > kMaxDepth) throw std::out_of_range("Path: bad depth");
  std::vector<int> bits(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    bits[static_cast<std::size_t>(k)] = (index >> (n - 1 - k)) & 1 ? 1 : -1;
  return Path(std::move(bits));
}

std::uint64_t Path::index() const {
  std::uint64_t idx = 0;
  for (int b : bits_) idx = (idx << 1) | (b > 0 ? 1u : 0u);
  return idx;
}

DyadicTable::DyadicTable(int depth, int dim) : depth_(depth) {
  if (depth < 0 || depth > kMaxDepth) throw std::out_of_range("DyadicTable: bad depth");
  if (dim < 1) throw std::invalid_argument("DyadicTable: dim must be >= 1");
  values_ = MatrixXd::Zero(dim, static_cast<Eigen::Index>(std::uint64_t{1} << depth));
}

DyadicTable::DyadicTable(int depth, MatrixXd values) : depth_(depth), values_(std::move(values)) {
  if (depth < 0 || depth > kMaxDepth) throw std::out_of_range("DyadicTable: bad depth");
  if (values_.cols() != static_cast<Eigen::Index>(std::uint64_t{1} << depth))
    throw std::invalid_argument("DyadicTable: expected 2^depth columns");
  if (values_.rows() < 1) throw std::invalid_argument("DyadicTable: dim must be >= 1");
}

DyadicTable DyadicTable::constant(int depth, const VectorXd& value) {
  DyadicTable t(depth, static_cast<int>(value.size()));
  t.values_.colwise() = value;
  return t;
}

double DyadicTable::scalar_at(std::uint64_t index) const {
  if (dim() != 1) throw std::invalid_argument("scalar_at: table is not scalar");
  return values_(0, static_cast<Eigen::Index>(index));
}

bool DyadicTable::is_measurable(int k, double tol) const {
  if (k < 0 || k > depth_) throw std::out_of_range("is_measurable: level out of range");
  const std::uint64_t block = std::uint64_t{1} << (depth_ - k);
  for (std::uint64_t b = 0; b < size(); b += block) {
    const auto ref = values_.col(static_cast<Eigen::Index>(b));
    for (std::uint64_t i = b + 1; i < b + block; ++i) {
      const double diff =
          (values_.col(static_cast<Eigen::Index>(i)) - ref).cwiseAbs().maxCoeff();
      if (diff > tol) return false;
    }
  }
  return true;
}

namespace {

// Pairwise vector sum of columns [lo, hi).
VectorXd column_tree_sum(const MatrixXd& m, std::uint64_t lo, std::uint64_t hi) {
  if (hi - lo == 1) return m.col(static_cast<Eigen::Index>(lo));
  const std::uint64_t mid = lo + (hi - lo) / 2;
  return column_tree_sum(m, lo, mid) + column_tree_sum(m, mid, hi);
}

}  // namespace

VectorXd expectation(const DyadicTable& f) {
  return column_tree_sum(f.values(), 0, f.size()) / static_cast<double>(f.size());
}

DyadicTable conditional_expectation(const DyadicTable& f, int k) {
  if (k < 0 || k > f.depth()) throw std::out_of_range("conditional_expectation: level out of range");
  DyadicTable out(f.depth(), f.dim());
  const std::uint64_t block = std::uint64_t{1} << (f.depth() - k);
  for (std::uint64_t b = 0; b < f.size(); b += block) {
    const VectorXd avg = column_tree_sum(f.values(), b, b + block) / static_cast<double>(block);
    out.values().middleCols(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(block))
        .colwise() = avg;
  }
  return out;
}

DyadicTable section(const DyadicTable& f, const Path& prefix) {
  const int m0 = prefix.depth();
  if (m0 >= f.depth()) throw std::out_of_range("section: prefix too long");
  const int rest = f.depth() - m0;
  const std::uint64_t block = std::uint64_t{1} << rest;
  const std::uint64_t start = prefix.index() * block;
  return DyadicTable(
      rest, f.values().middleCols(static_cast<Eigen::Index>(start), static_cast<Eigen::Index>(block)));
}

TailWeightedSum tail_weighted_sum(const DyadicTable& g, double p) {
  if (g.dim() != 1) throw std::invalid_argument("tail_weighted_sum: g must be scalar");
  if (p <= 0.0) throw std::domain_error("tail_weighted_sum: p must be > 0");
  if ((g.values().array() < 0.0).any())
    throw std::domain_error("tail_weighted_sum: g must be nonnegative");

  const double total = static_cast<double>(g.size());
  const double gmax = g.values().maxCoeff();
  TailWeightedSum out;
  for (int j = 1; std::exp2(static_cast<double>(j)) < gmax; ++j) {
    const double level = std::exp2(static_cast<double>(j));
    const double count = static_cast<double>((g.values().array() > level).count());
    out.lhs += std::pow(level, p) * (count / total);
  }
  const double epow = pairwise_sum<double>(0, g.size(), [&](std::size_t i) {
                        return std::pow(g.values()(0, static_cast<Eigen::Index>(i)), p);
                      }) /
                      total;
  const double twop = std::exp2(p);
  out.rhs = twop / (twop - 1.0) * epow;
  return out;
}

}  // namespace dclab
