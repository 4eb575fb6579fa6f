#include "linusd/constellation.hpp"

#include <algorithm>
#include <cmath>

#include "linusd/errors.hpp"

namespace linusd::code {

Constellation::Constellation(CMat states, RVec priors)
    : states_(std::move(states)), priors_(std::move(priors)) {
  if (states_.rows() < 1 || states_.cols() < 1)
    throw InvalidParameter("Constellation: need at least one state and one mode");
  num::check_finite(states_, "Constellation states");
  num::check_finite(priors_, "Constellation priors");
  if (priors_.size() != states_.rows())
    throw InvalidParameter("Constellation: one prior per state required");
  if ((priors_.array() < 0.0).any())
    throw InvalidParameter("Constellation: priors must be nonnegative");
  if (std::abs(priors_.sum() - 1.0) > 1e-12)
    throw InvalidParameter("Constellation: priors must sum to one");
}

Constellation Constellation::uniform(CMat states) {
  const auto c = states.rows();
  return Constellation(std::move(states), RVec::Constant(c, 1.0 / static_cast<double>(c)));
}

double Constellation::mean_photon_number() const {
  double n = 0.0;
  for (int j = 0; j < c(); ++j) n += priors_(j) * photon_number(j);
  return n;
}

CMat phase_space_gram(const Constellation& code) {
  return code.states().conjugate() * code.states().transpose();
}

CMat hilbert_gram(const Constellation& code) {
  const CMat g = phase_space_gram(code);
  const int c = code.c();
  CMat h(c, c);
  for (int i = 0; i < c; ++i) {
    h(i, i) = 1.0;
    for (int j = i + 1; j < c; ++j) {
      const Cplx v = std::exp(-0.5 * g(i, i).real() - 0.5 * g(j, j).real() + g(i, j));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

DegeneracyReport classify_degeneracy(const Constellation& code, double tol) {
  if (tol <= 0.0) throw InvalidParameter("classify_degeneracy: tol must be positive");
  DegeneracyReport rep;
  rep.rank = num::numerical_rank(code.states(), tol);
  rep.degeneracy = std::min(code.c(), code.m()) - rep.rank;
  if (rep.rank == code.c())
    rep.hint = DegeneracyClass::full_rank;
  else if (rep.rank == code.c() - 1)
    rep.hint = DegeneracyClass::single;
  else
    rep.hint = DegeneracyClass::double_or_higher;
  return rep;
}

DegeneracyReport classify_degeneracy(const Constellation& code) {
  return classify_degeneracy(code, num::default_rank_tol(code.c(), code.m()));
}

std::optional<CodeFamily> code_family_from_name(const std::string& name) {
  if (name == "ppm") return CodeFamily::ppm;
  if (name == "dual-ppm" || name == "dualppm") return CodeFamily::dual_ppm;
  if (name == "guha") return CodeFamily::guha;
  if (name == "dd") return CodeFamily::dd;
  if (name == "mpsk" || name == "psk") return CodeFamily::mpsk;
  return std::nullopt;
}

std::string code_family_name(CodeFamily family) {
  switch (family) {
    case CodeFamily::ppm: return "ppm";
    case CodeFamily::dual_ppm: return "dual-ppm";
    case CodeFamily::guha: return "guha";
    case CodeFamily::dd: return "dd";
    case CodeFamily::mpsk: return "mpsk";
  }
  return "?";
}

Constellation builtin_code(CodeFamily family, Cplx alpha, int m) {
  switch (family) {
    case CodeFamily::ppm: {
      if (m < 2) throw InvalidParameter("ppm: need m >= 2 modes");
      CMat r = CMat::Zero(m, m);
      for (int j = 0; j < m; ++j) r(j, j) = alpha;
      return Constellation::uniform(std::move(r));
    }
    case CodeFamily::dual_ppm: {
      if (m < 2) throw InvalidParameter("dual-ppm: need m >= 2 modes");
      CMat r = CMat::Constant(m, m, alpha);
      for (int j = 0; j < m; ++j) r(j, j) = 0.0;
      return Constellation::uniform(std::move(r));
    }
    case CodeFamily::guha: {
      if (m != 0 && m != 2) throw InvalidParameter("guha code lives on two modes");
      CMat r(3, 2);
      r << alpha, alpha, alpha, -alpha, -alpha, alpha;
      return Constellation::uniform(std::move(r));
    }
    case CodeFamily::dd: {
      if (m != 0 && m != 1) throw InvalidParameter("dd code lives on one mode");
      CMat r(3, 1);
      r << -alpha, alpha, Cplx(0.0);
      return Constellation::uniform(std::move(r));
    }
    case CodeFamily::mpsk: {
      if (m < 2) throw InvalidParameter("mpsk: need at least two phases");
      CMat r(m, 1);
      for (int j = 0; j < m; ++j) {
        const double th = 2.0 * M_PI * j / m;
        r(j, 0) = alpha * Cplx(std::cos(th), std::sin(th));
      }
      return Constellation::uniform(std::move(r));
    }
  }
  throw InvalidParameter("builtin_code: unknown family");
}

Constellation sample_random_code(int c, int m, double n, num::RngStream& rng) {
  if (c < 1 || m < 1) throw InvalidParameter("sample_random_code: c, m must be >= 1");
  if (n < 0.0) throw InvalidParameter("sample_random_code: negative photon number");
  CMat r(c, m);
  for (int j = 0; j < c; ++j) {
    const RVec v = num::sample_real_sphere(m, std::sqrt(n), rng);
    for (int k = 0; k < m; ++k) r(j, k) = v(k);
  }
  return Constellation::uniform(std::move(r));
}

namespace {

// Residuals of the Gram-diagonalization system: displaced Gram minus tau * I,
// flattened to c^2 reals (diagonal entries, then re/im of the upper triangle).
struct GramSystem {
  const CMat& states;  // c x m
  bool aux;

  int c() const { return static_cast<int>(states.rows()); }
  int m() const { return static_cast<int>(states.cols()); }
  int n_params() const { return 2 * m() + (aux ? 1 : 0) + 1; }
  int n_residuals() const { return c() * c(); }

  CMat displaced(const RVec& x) const {
    CMat b = states;
    for (int k = 0; k < m(); ++k)
      b.col(k).array() += Cplx(x(k), x(m() + k));
    return b;
  }

  void eval(const RVec& x, RVec& f, num::RMat& jac) const {
    const int mm = m(), cc = c();
    const double g = aux ? x(2 * mm) : 0.0;
    const double tau = x(n_params() - 1);
    const CMat b = displaced(x);
    f.resize(n_residuals());
    jac.setZero(n_residuals(), n_params());
    int row = 0;
    for (int i = 0; i < cc; ++i) {
      for (int j = i; j < cc; ++j) {
        Cplx val = (b.row(i).conjugate().array() * b.row(j).array()).sum();
        val += g * g;
        if (i == j) val -= tau;
        const int nrows = (i == j) ? 1 : 2;
        for (int k = 0; k < mm; ++k) {
          const Cplx d_re = b(j, k) + std::conj(b(i, k));
          const Cplx d_im = Cplx(0, 1) * (std::conj(b(i, k)) - b(j, k));
          jac(row, k) = d_re.real();
          jac(row, mm + k) = d_im.real();
          if (nrows == 2) {
            jac(row + 1, k) = d_re.imag();
            jac(row + 1, mm + k) = d_im.imag();
          }
        }
        if (aux) jac(row, 2 * mm) = 2.0 * g;
        if (i == j) jac(row, n_params() - 1) = -1.0;
        f(row) = val.real();
        if (nrows == 2) f(row + 1) = val.imag();
        row += nrows;
      }
    }
  }
};

// Plain Levenberg-Marquardt; the system is small (tens of unknowns).
bool levenberg_marquardt(const GramSystem& sys, RVec& x, double target_inf_norm) {
  RVec f;
  num::RMat jac;
  sys.eval(x, f, jac);
  double cost = f.squaredNorm();
  double lambda = 1e-3;
  for (int iter = 0; iter < 200; ++iter) {
    if (f.lpNorm<Eigen::Infinity>() <= target_inf_norm) return true;
    const num::RMat jtj = jac.transpose() * jac;
    const RVec jtf = jac.transpose() * f;
    num::RMat a = jtj;
    a.diagonal().array() += lambda * (jtj.diagonal().array() + 1e-12);
    const RVec step = a.ldlt().solve(-jtf);
    RVec xn = x + step;
    RVec fn;
    num::RMat jn;
    sys.eval(xn, fn, jn);
    const double cn = fn.squaredNorm();
    if (cn < cost) {
      x = xn;
      f = fn;
      jac = jn;
      cost = cn;
      lambda = std::max(lambda * 0.3, 1e-12);
    } else {
      lambda *= 8.0;
      if (lambda > 1e12) break;
    }
  }
  return f.lpNorm<Eigen::Infinity>() <= target_inf_norm;
}

}  // namespace

std::optional<PpmReduction> ppm_reduction(const Constellation& code, bool allow_aux) {
  constexpr double kResidual = 1e-8;
  constexpr int kStarts = 16;
  const int m = code.m(), c = code.c();
  GramSystem sys{code.states(), allow_aux};

  const CVec centroid = code.states().colwise().mean().transpose();
  const double scale = std::sqrt(code.mean_photon_number() / m + 1e-12);
  num::RngStream rng(0x9e3779b97f4a7c15ull, 0);  // fixed: results are deterministic

  for (int s = 0; s < kStarts; ++s) {
    RVec x = RVec::Zero(sys.n_params());
    for (int k = 0; k < m; ++k) {
      x(k) = -centroid(k).real();
      x(m + k) = -centroid(k).imag();
    }
    if (allow_aux) x(2 * m) = 0.3 * scale + (s > 0 ? 0.5 * scale * rng.normal() : 0.0);
    if (s > 0)
      for (int k = 0; k < 2 * m; ++k) x(k) += scale * rng.normal();
    // tau start: mean displaced diagonal
    {
      const CMat b = sys.displaced(x);
      double tau0 = b.rowwise().squaredNorm().mean();
      if (allow_aux) tau0 += x(2 * m) * x(2 * m);
      x(sys.n_params() - 1) = tau0;
    }
    if (!levenberg_marquardt(sys, x, kResidual)) continue;
    const double tau = x(sys.n_params() - 1);
    if (!(tau > 0.0)) continue;
    PpmReduction red;
    red.tau = tau;
    red.gamma.resize(allow_aux ? m + 1 : m);
    for (int k = 0; k < m; ++k) red.gamma(k) = Cplx(x(k), x(m + k));
    if (allow_aux) red.gamma(m) = std::abs(x(2 * m));
    return red;  // first converged start; deterministic across runs
  }
  (void)c;
  return std::nullopt;
}

}  // namespace linusd::code
