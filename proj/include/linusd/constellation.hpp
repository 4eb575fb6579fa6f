#pragma once

#include <optional>
#include <string>

#include "linusd/numerics.hpp"

namespace linusd::code {

using num::CMat;
using num::Cplx;
using num::CVec;
using num::RVec;

/// One multimode coherent state, written as its phase-space amplitude vector.
/// |alpha_j|^2 is the mean photon number carried by mode j.
using AmplitudeVector = CVec;

/// A coherent-state code: c amplitude vectors over m shared modes, stacked as
/// the rows of a c x m matrix, plus prior probabilities.
class Constellation {
 public:
  /// Validates: finite amplitudes, nonnegative priors summing to one
  /// (within 1e-12), at least one state.
  Constellation(CMat states, RVec priors);

  /// Same with uniform priors.
  static Constellation uniform(CMat states);

  int c() const { return static_cast<int>(states_.rows()); }
  int m() const { return static_cast<int>(states_.cols()); }

  const CMat& states() const { return states_; }
  const RVec& priors() const { return priors_; }
  AmplitudeVector state(int j) const { return states_.row(j).transpose(); }

  /// Total mean photon number of state j.
  double photon_number(int j) const { return states_.row(j).squaredNorm(); }
  /// Prior-averaged mean photon number.
  double mean_photon_number() const;

 private:
  CMat states_;
  RVec priors_;
};

enum class DegeneracyClass { full_rank, single, double_or_higher };

struct DegeneracyReport {
  int rank = 0;
  int degeneracy = 0;  // min(c, m) - rank
  DegeneracyClass hint = DegeneracyClass::full_rank;
};

/// Gram matrix of the plain amplitude-vector scalar product,
/// entry (i, j) = sum_k conj(alpha^i_k) alpha^j_k. Hermitian PSD.
CMat phase_space_gram(const Constellation& code);

/// Gram matrix of Hilbert-space overlaps between the coherent states,
/// <alpha|beta> = exp(-|alpha|^2/2 - |beta|^2/2 + alpha* . beta).
/// Unit diagonal by construction.
CMat hilbert_gram(const Constellation& code);

/// Numerical rank of the amplitude matrix at the given relative tolerance.
/// hint is full_rank iff rank == c, single iff rank == c - 1.
DegeneracyReport classify_degeneracy(const Constellation& code, double tol);
DegeneracyReport classify_degeneracy(const Constellation& code);

enum class CodeFamily {
  ppm,       // c = m states, amplitude alpha on one mode each
  dual_ppm,  // vacuum on one mode, alpha on the others
  guha,      // {(a,a), (a,-a), (-a,a)}, two modes, single degeneracy
  dd,        // {-a, a, 0} on one mode, double degeneracy
  mpsk       // m states alpha exp(i j 2 pi / m) on one mode
};

std::optional<CodeFamily> code_family_from_name(const std::string& name);
std::string code_family_name(CodeFamily family);

/// The named codes with uniform priors and amplitudes exactly as defined.
/// For ppm/dual_ppm, m is the number of modes (>= 2 for dual_ppm);
/// for mpsk, m is the number of phases M >= 2; guha and dd fix their own
/// shape (m must be 2 / 1, or 0 to accept the default).
Constellation builtin_code(CodeFamily family, Cplx alpha, int m);

/// c independent states with real amplitudes drawn uniformly from the
/// m-dimensional sphere of radius sqrt(n); uniform priors.
Constellation sample_random_code(int c, int m, double n, num::RngStream& rng);

struct PpmReduction {
  CVec gamma;  // length m, or m+1 when an auxiliary mode is used
  double tau = 0.0;
};

/// Searches for a displacement gamma and tau > 0 such that the displaced
/// phase-space Gram equals tau * I, i.e. the code becomes PPM-equivalent.
/// allow_aux adds one auxiliary vacuum mode with its own displacement.
/// Absence of a solution (residual above 1e-8) is a regular result.
std::optional<PpmReduction> ppm_reduction(const Constellation& code, bool allow_aux);

}  // namespace linusd::code
