#include "dclab/spaces.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dclab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Space Space::lp(int dim, double p) {
  if (dim < 1) throw std::invalid_argument("Space: dim must be >= 1");
  if (!(p >= 1.0)) throw std::invalid_argument("Space: p must be >= 1");
  Space s;
  s.kind_ = Kind::Lp;
  s.dim_ = dim;
  s.p_ = p;
  return s;
}

Space Space::linf(int dim) { return lp(dim, kInf); }

Space Space::sum1(const Space& left, const Space& right) {
  Space s;
  s.kind_ = Kind::Sum;
  s.outer_ = 1.0;
  s.left_ = std::make_shared<Space>(left);
  s.right_ = std::make_shared<Space>(right);
  s.dim_ = left.dim() + right.dim();
  return s;
}

Space Space::sum_inf(const Space& left, const Space& right) {
  Space s = sum1(left, right);
  s.outer_ = kInf;
  return s;
}

bool Space::is_lp(double p) const { return kind_ == Kind::Lp && p_ == p; }

double Space::norm(const VectorXd& x) const {
  if (x.size() != dim_) throw std::invalid_argument("Space::norm: dimension mismatch");
  if (kind_ == Kind::Lp) {
    if (p_ == 1.0) return x.cwiseAbs().sum();
    if (p_ == 2.0) return x.norm();
    if (std::isinf(p_)) return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
    return std::pow(x.cwiseAbs().array().pow(p_).sum(), 1.0 / p_);
  }
  const double nl = left_->norm(x.head(left_->dim()));
  const double nr = right_->norm(x.tail(right_->dim()));
  return std::isinf(outer_) ? std::max(nl, nr) : nl + nr;
}

VectorXd Space::norm_sq_gradient(const VectorXd& x) const {
  if (x.size() != dim_) throw std::invalid_argument("Space::norm_sq_gradient: dimension mismatch");
  const double n = norm(x);
  if (n == 0.0) return VectorXd::Zero(dim_);
  // d||x||^2 = 2 ||x|| * d||x||; compute a subgradient of the norm itself.
  VectorXd g(dim_);
  if (kind_ == Kind::Lp) {
    if (p_ == 2.0) return 2.0 * x;
    if (p_ == 1.0) {
      g = x.array().sign();
    } else if (std::isinf(p_)) {
      g.setZero();
      Eigen::Index imax = 0;
      x.cwiseAbs().maxCoeff(&imax);
      g(imax) = x(imax) >= 0.0 ? 1.0 : -1.0;
    } else {
      g = (x.cwiseAbs() / n).array().pow(p_ - 1.0) * x.array().sign();
    }
    return 2.0 * n * g;
  }
  const double nl = left_->norm(x.head(left_->dim()));
  const double nr = right_->norm(x.tail(right_->dim()));
  g.setZero();
  if (std::isinf(outer_)) {
    if (nl >= nr)
      g.head(left_->dim()) = left_->norm_sq_gradient(x.head(left_->dim())) / (2.0 * (nl > 0 ? nl : 1.0));
    else
      g.tail(right_->dim()) = right_->norm_sq_gradient(x.tail(right_->dim())) / (2.0 * nr);
  } else {
    if (nl > 0) g.head(left_->dim()) = left_->norm_sq_gradient(x.head(left_->dim())) / (2.0 * nl);
    if (nr > 0) g.tail(right_->dim()) = right_->norm_sq_gradient(x.tail(right_->dim())) / (2.0 * nr);
  }
  return 2.0 * n * g;
}

Space Space::dual() const {
  if (kind_ == Kind::Lp) {
    if (p_ == 1.0) return linf(dim_);
    if (std::isinf(p_)) return l1(dim_);
    return lp(dim_, p_ / (p_ - 1.0));
  }
  return std::isinf(outer_) ? sum1(left_->dual(), right_->dual())
                            : sum_inf(left_->dual(), right_->dual());
}

std::string Space::to_string() const {
  std::ostringstream os;
  if (kind_ == Kind::Lp) {
    os << "lp:" << dim_ << ":";
    if (std::isinf(p_))
      os << "inf";
    else
      os << p_;
  } else {
    os << (std::isinf(outer_) ? "suminf(" : "sum1(") << left_->to_string() << ","
       << right_->to_string() << ")";
  }
  return os.str();
}

namespace {

Space parse_at(const std::string& s, std::size_t& pos);

// Splits "....(left,right)" bodies at the top-level comma.
Space parse_sum(const std::string& s, std::size_t& pos, bool inf_outer) {
  if (pos >= s.size() || s[pos] != '(') throw std::invalid_argument("Space::parse: expected '('");
  ++pos;
  Space left = parse_at(s, pos);
  if (pos >= s.size() || s[pos] != ',') throw std::invalid_argument("Space::parse: expected ','");
  ++pos;
  Space right = parse_at(s, pos);
  if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("Space::parse: expected ')'");
  ++pos;
  return inf_outer ? Space::sum_inf(left, right) : Space::sum1(left, right);
}

Space parse_at(const std::string& s, std::size_t& pos) {
  if (s.compare(pos, 3, "lp:") == 0) {
    pos += 3;
    std::size_t next = 0;
    const int dim = std::stoi(s.substr(pos), &next);
    pos += next;
    if (pos >= s.size() || s[pos] != ':') throw std::invalid_argument("Space::parse: expected ':'");
    ++pos;
    double p;
    if (s.compare(pos, 3, "inf") == 0) {
      p = kInf;
      pos += 3;
    } else {
      p = std::stod(s.substr(pos), &next);
      pos += next;
    }
    return Space::lp(dim, p);
  }
  if (s.compare(pos, 4, "sum1") == 0) {
    pos += 4;
    return parse_sum(s, pos, false);
  }
  if (s.compare(pos, 6, "suminf") == 0) {
    pos += 6;
    return parse_sum(s, pos, true);
  }
  throw std::invalid_argument("Space::parse: unrecognized descriptor at '" + s.substr(pos) + "'");
}

}  // namespace

Space Space::parse(const std::string& text) {
  std::size_t pos = 0;
  Space s = parse_at(text, pos);
  if (pos != text.size()) throw std::invalid_argument("Space::parse: trailing input");
  return s;
}

}  // namespace dclab
