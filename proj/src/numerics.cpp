#include "linusd/numerics.hpp"

#include <cmath>
#include <limits>

#include "linusd/errors.hpp"

namespace linusd::num {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  // seed_seq folds both identifiers; disjoint stream ids give disjoint
  // sequences and the expansion is fully specified by the standard.
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id & 0xffffffffu),
                    static_cast<std::uint32_t>(stream_id >> 32)};
  gen_.seed(seq);
}

std::uint64_t RngStream::next_u64() { return gen_(); }

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  has_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

void check_finite(const CMat& a, const char* what) {
  if (!a.allFinite())
    throw InvalidParameter(std::string(what) + ": non-finite entries");
}

void check_finite(const RVec& a, const char* what) {
  if (!a.allFinite())
    throw InvalidParameter(std::string(what) + ": non-finite entries");
}

double max_singular_value(const CMat& a) {
  if (a.size() == 0) throw InvalidParameter("max_singular_value: empty matrix");
  check_finite(a, "max_singular_value");
  Eigen::JacobiSVD<CMat> svd(a);
  return svd.singularValues()(0);
}

int numerical_rank(const CMat& a, double tol) {
  if (tol <= 0.0) throw InvalidParameter("numerical_rank: tol must be positive");
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<CMat> svd(a);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

CMat null_space(const CMat& a, double tol) {
  if (tol <= 0.0) throw InvalidParameter("null_space: tol must be positive");
  if (a.size() == 0) throw InvalidParameter("null_space: empty matrix");
  check_finite(a, "null_space");
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? tol * sv(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

CMat null_space(const CMat& a) {
  return null_space(a, default_rank_tol(a.rows(), a.cols()));
}

double gaussian_q(double x) {
  // 0.5 erfc(x / sqrt 2); erfc keeps full relative accuracy in the far tail.
  return 0.5 * std::erfc(x * 0x1.6a09e667f3bcdp-1);  // 1/sqrt(2)
}

double inverse_q(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw InvalidParameter("inverse_q: epsilon must lie strictly in (0, 1)");
  // Bisection on the monotone decreasing Q, then Newton polish.
  double lo = -40.0, hi = 40.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (gaussian_q(mid) > epsilon)
      lo = mid;
    else
      hi = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    const double phi = std::exp(-0.5 * x * x) / std::sqrt(kTwoPi);
    if (phi < std::numeric_limits<double>::min()) break;
    x += (gaussian_q(x) - epsilon) / phi;
  }
  return x;
}

RVec sample_real_sphere(int dim, double radius, RngStream& rng) {
  if (dim < 1) throw InvalidParameter("sample_real_sphere: dim must be >= 1");
  if (radius < 0.0) throw InvalidParameter("sample_real_sphere: negative radius");
  RVec v(dim);
  double norm2 = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v(i) = rng.normal();
    norm2 = v.squaredNorm();
  } while (norm2 == 0.0);
  return v * (radius / std::sqrt(norm2));
}

}  // namespace linusd::num
