#include "linusd/lop.hpp"

#include <cmath>

#include "linusd/errors.hpp"

namespace linusd::lop {

LopUnitary::LopUnitary(CMat u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols() || u_.rows() < 1)
    throw InvalidParameter("LopUnitary: matrix must be square and nonempty");
  num::check_finite(u_, "LopUnitary");
  const CMat gram = u_.adjoint() * u_;
  const double dev = (gram - CMat::Identity(u_.rows(), u_.cols())).cwiseAbs().maxCoeff();
  if (dev > 1e-10)
    throw InvalidParameter("LopUnitary: matrix is not unitary (deviation " +
                           std::to_string(dev) + ")");
}

CVec apply_lop(const LopUnitary& u, const CVec& alpha) {
  if (alpha.size() != u.dim())
    throw InvalidParameter("apply_lop: amplitude vector length must match the unitary "
                           "(pad auxiliary modes with explicit vacuum entries)");
  return u.matrix() * alpha;
}

RVec click_probabilities(const CMat& m, const Displacement& gamma, const CVec& alpha) {
  if (m.size() == 0) throw InvalidParameter("click_probabilities: empty matrix");
  if (alpha.size() != m.cols())
    throw InvalidParameter("click_probabilities: input length does not match M");
  if (gamma.size() != 0 && gamma.size() != m.rows())
    throw InvalidParameter("click_probabilities: displacement length does not match M rows");
  CVec zeta = m * alpha;
  if (gamma.size() != 0) zeta += gamma;
  RVec p(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    p(i) = -std::expm1(-std::norm(zeta(i)));
  return p;
}

UnitaryExtension extend_to_unitary(const CMat& m) {
  constexpr double kTol = 1e-10;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (rows < 1 || cols < 1) throw InvalidParameter("extend_to_unitary: empty matrix");
  num::check_finite(m, "extend_to_unitary");

  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& d = svd.singularValues();
  const int p = static_cast<int>(d.size());
  if (p > 0 && d(0) > 1.0 + kTol)
    throw InfeasibleExtension("extend_to_unitary: sigma_max = " + std::to_string(d(0)) +
                              " exceeds 1; no unitary extension exists");

  int deficient = 0;
  for (int i = 0; i < p; ++i)
    if (d(i) < 1.0 - kTol) ++deficient;

  const int s = std::max(rows, cols);
  const int n = s + deficient;

  // Core block in the singular bases: each deficient direction is paired with
  // one companion mode through a 2x2 rotation; full directions pass straight
  // through; the dimension mismatch is absorbed by unit pass-through entries.
  CMat core = CMat::Zero(n, n);
  int er = rows, ec = cols;
  for (int i = 0; i < p; ++i) {
    if (d(i) < 1.0 - kTol) {
      const double di = d(i);
      const double sq = std::sqrt(1.0 - di * di);
      core(i, i) = di;
      core(i, ec) = -sq;
      core(er, i) = sq;
      core(er, ec) = di;
      ++er;
      ++ec;
    } else {
      core(i, i) = 1.0;
    }
  }
  for (int i = p; i < rows; ++i) core(i, ec++) = 1.0;
  for (int j = p; j < cols; ++j) core(er++, j) = 1.0;

  CMat left = CMat::Identity(n, n);
  left.topLeftCorner(rows, rows) = svd.matrixU();
  CMat right = CMat::Identity(n, n);
  right.topLeftCorner(cols, cols) = svd.matrixV().adjoint();

  UnitaryExtension ext{LopUnitary(left * core * right), n - cols};
  return ext;
}

}  // namespace linusd::lop
