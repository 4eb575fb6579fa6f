#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linusd/channel.hpp"
#include "linusd/constellation.hpp"
#include "linusd/lop.hpp"

namespace linusd::rx {

using code::Constellation;
using num::CMat;
using num::CVec;
using num::RVec;

/// Exact click-pattern mask over the detection rows -> decoded state index.
/// Masks are pairwise disjoint; any unlisted pattern is inconclusive.
using DecodeMap = std::vector<std::pair<std::uint32_t, int>>;

/// A linear USD receiver: detection rows M (rows sqrt(k_i) v_i of a larger
/// LOP unitary), an optional displacement, and the decoding rule.
struct LinearReceiver {
  int receiver_class = 1;
  CMat M;      // detection rows x input modes (signal plus any auxiliary)
  CVec gamma;  // class 1: empty; class 2: input-side, size cols(M);
               // class 3: output-side, size rows(M)
  DecodeMap decode;

  int detection_modes() const { return static_cast<int>(M.rows()); }
  int input_modes() const { return static_cast<int>(M.cols()); }

  /// Output amplitudes for one input state; alpha shorter than the input
  /// space is padded with vacuum (auxiliary modes).
  CVec output_amplitudes(const CVec& alpha) const;
};

struct DesignDiagnostics {
  int restarts = 0;
  long iterations = 0;
  bool converged = true;
  bool refinement_improved = false;
};

struct DesignReport {
  LinearReceiver receiver;
  RVec p0_per_state;         // conditional inconclusive probabilities
  double p0_average = 1.0;   // priors . p0_per_state
  DesignDiagnostics diagnostics;
};

struct DesignOptions {
  int restarts = 32;
  std::uint64_t seed = 0xd1ce;
  long max_evals_per_start = 700;  // Nelder-Mead budget per restart
};

/// Single-detection receiver: rows v_i annihilate all other states, the gain
/// vector k solves the convex minimization of P0 under M^dag M <= I.
/// Throws RequiresClass2or3 on degenerate (nonzero) codes.
DesignReport design_class1(const Constellation& code);

/// Single-detection receiver with an input displacement (and one auxiliary
/// mode when c = m + 1), multi-start over the displacement.
/// Throws RequiresClass3 when rank(R) < c - 1.
DesignReport design_class2(const Constellation& code, const DesignOptions& opts = {});

/// Double-detection receiver for c = 3 single-mode codes: minimizes P0 over
/// the first-column magnitudes of the 3x3 unitary (grid plus local polish).
DesignReport design_class3(const Constellation& code);

/// Class-2 design maximizing the Shannon capacity of the induced channel
/// instead of minimizing average P0 (receiver and input distribution are
/// optimized together). p0 fields are still reported at the code priors.
DesignReport design_class2_for_capacity(const Constellation& code,
                                        const DesignOptions& opts = {});

/// Channel p(y|x) of a receiver on a code: exact-pattern probabilities for
/// each decode entry, inconclusive takes the rest of each row.
info::ChannelModel evaluate_receiver(const LinearReceiver& r, const Constellation& code);

}  // namespace linusd::rx
