#pragma once

#include <utility>
#include <vector>

#include "linusd/channel.hpp"

namespace linusd::info {

struct CapacityResult {
  double capacity = 0.0;  // bits
  num::RVec optimal_input;
  double dispersion = 0.0;  // bits^2, evaluated at optimal_input
  long iterations = 0;
  double gap = 0.0;  // certified upper - lower bound at exit
};

/// Shannon capacity max_{p_X} H(Y) - H(Y|X) in bits, by alternating
/// maximization with the gap certificate max_x D(p(.|x) || q_Y) - I.
CapacityResult capacity(const ChannelModel& ch, double tol);

/// Variance of the information transition probabilities, evaluated with the
/// convention 0 log 0 = 0. This is the V entering the finite-rate backoff.
double dispersion(const ChannelModel& ch, const num::RVec& px);

/// Normal approximation to the finite-block-length rate:
/// F(L, eps) = C - sqrt(V / L) Qinv(eps).
double finite_rate(double capacity_bits, double dispersion_bits2, long block_length,
                   double epsilon);

/// Least-squares slope of log(1 - P0) against log(n). Points with P0 >= 1
/// are skipped; all-skipped input is an error (undefined exponent).
double scaling_exponent(const std::vector<std::pair<double, double>>& n_p0);

}  // namespace linusd::info
