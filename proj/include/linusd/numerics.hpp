#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

namespace linusd::num {

using Cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Counted, reproducible random stream. Identical (seed, stream_id) pairs
/// reproduce identical draw sequences on every platform: the generator is
/// mt19937_64 and all distributions are derived from raw 64-bit words here,
/// not from implementation-defined std:: distributions.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64();
  /// Uniform double in [0, 1) with 53 bits of resolution.
  double uniform();
  /// Standard normal deviate (Box-Muller; one spare cached).
  double normal();

 private:
  std::uint64_t seed_, stream_id_;
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Throws InvalidParameter if any entry is NaN or infinite.
void check_finite(const CMat& a, const char* what);
void check_finite(const RVec& a, const char* what);

/// Largest singular value of a (nonempty) complex matrix.
double max_singular_value(const CMat& a);

/// Rank with singular values below tol * sigma_max counted as zero.
int numerical_rank(const CMat& a, double tol);

/// Relative rank threshold used when callers do not supply one.
inline double default_rank_tol(Eigen::Index rows, Eigen::Index cols) {
  return 1e-10 * static_cast<double>(std::max(rows, cols));
}

/// Orthonormal basis N of the right null space of a: a * N = 0 up to
/// tol * sigma_max(a), with N^dag N = I. The basis may be empty (0 columns).
CMat null_space(const CMat& a, double tol);
CMat null_space(const CMat& a);

/// Gaussian tail probability Q(x) = integral_x^inf exp(-t^2/2)/sqrt(2 pi) dt.
double gaussian_q(double x);

/// Inverse of gaussian_q on (0, 1), absolute error below 1e-9.
double inverse_q(double epsilon);

/// Uniform draw from the sphere of the given radius in R^dim.
RVec sample_real_sphere(int dim, double radius, RngStream& rng);

}  // namespace linusd::num
