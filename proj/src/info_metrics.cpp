#include "linusd/info_metrics.hpp"

#include <cmath>

#include "linusd/errors.hpp"

namespace linusd::info {

namespace {

inline double log2_safe(double x) { return std::log2(x); }

}  // namespace

ChannelModel::ChannelModel(num::RMat transition, bool usd) : t_(std::move(transition)) {
  if (t_.rows() < 1 || t_.cols() != t_.rows() + 1)
    throw InvalidParameter("ChannelModel: expected c rows and c + 1 outcome columns");
  if (!t_.allFinite()) throw InvalidParameter("ChannelModel: non-finite entries");
  for (Eigen::Index x = 0; x < t_.rows(); ++x) {
    if ((t_.row(x).array() < -1e-15).any() || (t_.row(x).array() > 1.0 + 1e-12).any())
      throw InvalidParameter("ChannelModel: probabilities outside [0, 1]");
    if (std::abs(t_.row(x).sum() - 1.0) > 1e-12)
      throw InvalidParameter("ChannelModel: row " + std::to_string(x) + " does not sum to 1");
    if (usd) {
      for (Eigen::Index y = 1; y < t_.cols(); ++y)
        if (y - 1 != x && t_(x, y) > 1e-10)
          throw InvalidParameter("ChannelModel: wrong conclusive outcome has mass (not USD)");
    }
  }
  t_ = t_.cwiseMax(0.0);
}

ChannelModel ChannelModel::usd_from_inconclusive(const num::RVec& q) {
  const int c = static_cast<int>(q.size());
  num::RMat t = num::RMat::Zero(c, c + 1);
  for (int j = 0; j < c; ++j) {
    t(j, 0) = q(j);
    t(j, j + 1) = 1.0 - q(j);
  }
  return ChannelModel(std::move(t), true);
}

CapacityResult capacity(const ChannelModel& ch, double tol) {
  if (tol <= 0.0) throw InvalidParameter("capacity: tol must be positive");
  const auto& t = ch.transition();
  const int c = ch.inputs(), ny = ch.outputs();

  num::RVec px = num::RVec::Constant(c, 1.0 / c);
  num::RVec d(c);
  CapacityResult res;
  const long max_iter = 2000000;
  double lower = 0.0, upper = 0.0;
  for (long it = 1; it <= max_iter; ++it) {
    const num::RVec qy = t.transpose() * px;
    for (int x = 0; x < c; ++x) {
      double acc = 0.0;
      for (int y = 0; y < ny; ++y)
        if (t(x, y) > 0.0) acc += t(x, y) * log2_safe(t(x, y) / qy(y));
      d(x) = acc;
    }
    lower = px.dot(d);
    upper = d.maxCoeff();
    res.iterations = it;
    if (upper - lower <= tol) break;
    // multiplicative update p_x <- p_x 2^{D_x}, renormalized
    for (int x = 0; x < c; ++x) px(x) *= std::exp2(d(x) - upper);
    const double z = px.sum();
    if (z <= 0.0) throw SolverFailure("capacity: input distribution collapsed");
    px /= z;
  }
  res.capacity = std::max(lower, 0.0);
  res.gap = upper - lower;
  res.optimal_input = px;
  res.dispersion = dispersion(ch, px);
  return res;
}

double dispersion(const ChannelModel& ch, const num::RVec& px) {
  const auto& t = ch.transition();
  const int c = ch.inputs(), ny = ch.outputs();
  if (px.size() != c) throw InvalidParameter("dispersion: p_X length mismatch");
  const num::RVec qy = t.transpose() * px;

  // denom(x) = sum_z p_Y(z) p(z|x)
  num::RVec denom(c);
  for (int x = 0; x < c; ++x) denom(x) = qy.dot(t.row(x).transpose());

  double xbar = 0.0;
  for (int x = 0; x < c; ++x)
    for (int y = 0; y < ny; ++y) {
      const double w = qy(y) * t(x, y);
      if (w > 0.0) xbar += w * log2_safe(t(x, y) / denom(x));
    }
  double v = 0.0;
  for (int x = 0; x < c; ++x)
    for (int y = 0; y < ny; ++y) {
      const double w = qy(y) * t(x, y);
      if (w > 0.0) {  // 0 log 0 = 0: zero-weight cells drop out
        const double term = log2_safe(t(x, y) / denom(x)) - xbar;
        v += w * term * term;
      }
    }
  return v;
}

double finite_rate(double capacity_bits, double dispersion_bits2, long block_length,
                   double epsilon) {
  if (block_length < 1) throw InvalidParameter("finite_rate: block length must be >= 1");
  if (dispersion_bits2 < 0.0) throw InvalidParameter("finite_rate: negative dispersion");
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw InvalidParameter("finite_rate: epsilon must lie in (0, 1)");
  if (dispersion_bits2 == 0.0) return capacity_bits;
  return capacity_bits -
         std::sqrt(dispersion_bits2 / static_cast<double>(block_length)) *
             num::inverse_q(epsilon);
}

double scaling_exponent(const std::vector<std::pair<double, double>>& n_p0) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  for (const auto& [n, p0] : n_p0) {
    if (!(n > 0.0)) throw InvalidParameter("scaling_exponent: n must be positive");
    const double one_minus = 1.0 - p0;
    if (!(one_minus > 0.0)) continue;  // P0 = 1 carries no slope information
    const double x = std::log(n), y = std::log(one_minus);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++used;
  }
  if (used < 2)
    throw InvalidParameter("scaling_exponent: undefined exponent (P0 = 1 everywhere)");
  const double det = used * sxx - sx * sx;
  if (std::abs(det) < 1e-30)
    throw InvalidParameter("scaling_exponent: degenerate abscissae");
  return (used * sxy - sx * sy) / det;
}

}  // namespace linusd::info
