#pragma once

#include "linusd/numerics.hpp"

namespace linusd::lop {

using num::CMat;
using num::Cplx;
using num::CVec;
using num::RVec;

/// A linear-optical-passive transform on mode amplitudes: a unitary matrix of
/// size m + m' (signal plus auxiliary modes).
class LopUnitary {
 public:
  /// Validates unitarity entrywise to 1e-10.
  explicit LopUnitary(CMat u);

  int dim() const { return static_cast<int>(u_.rows()); }
  const CMat& matrix() const { return u_; }

 private:
  CMat u_;
};

/// Per-mode phase-space displacement amplitudes, D(gamma)|alpha> = |alpha+gamma>.
using Displacement = CVec;

/// Output amplitudes beta = U alpha. Photon number is preserved.
/// alpha must already carry explicit vacuum entries for auxiliary modes.
CVec apply_lop(const LopUnitary& u, const CVec& alpha);

/// On-off click probability per output row of M: p_i = 1 - exp(-|zeta_i|^2)
/// with zeta = M alpha + gamma. gamma displaces the *output* amplitudes and
/// may be empty; an input-side displacement commutes through as gamma -> M gamma
/// and should be folded into alpha by the caller.
RVec click_probabilities(const CMat& m, const Displacement& gamma, const CVec& alpha);

struct UnitaryExtension {
  LopUnitary unitary;
  int aux_modes;  // input modes beyond the original columns of M
};

/// Extends a contraction M (sigma_max <= 1) into a unitary whose top-left
/// block equals M, pairing each deficient singular direction with one extra
/// mode. Result size never exceeds 2 max(rows, cols).
UnitaryExtension extend_to_unitary(const CMat& m);

}  // namespace linusd::lop
