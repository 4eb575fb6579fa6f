#pragma once

#include "linusd/numerics.hpp"

namespace linusd::info {

/// Discrete memoryless channel induced by a USD receiver: c inputs, c + 1
/// outputs with column 0 the inconclusive symbol y = 0 and column j the
/// conclusive identification of state j.
class ChannelModel {
 public:
  /// transition(x, y): rows must sum to one within 1e-12, entries in [0, 1].
  /// usd = true additionally asserts p(y|x) = 0 for conclusive y != x.
  explicit ChannelModel(num::RMat transition, bool usd = false);

  int inputs() const { return static_cast<int>(t_.rows()); }
  int outputs() const { return static_cast<int>(t_.cols()); }
  const num::RMat& transition() const { return t_; }
  double p(int y, int x) const { return t_(x, y); }

  /// Per-state inconclusive probability column.
  num::RVec inconclusive() const { return t_.col(0); }

  /// Unambiguous channel with p(0|j) = q_j, p(j|j) = 1 - q_j.
  static ChannelModel usd_from_inconclusive(const num::RVec& q);

 private:
  num::RMat t_;
};

}  // namespace linusd::info
