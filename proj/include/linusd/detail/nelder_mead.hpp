#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "linusd/numerics.hpp"

namespace linusd::detail {

struct NelderMeadResult {
  num::RVec x;
  double value = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Standard Nelder-Mead downhill simplex. Deterministic for a fixed start.
inline NelderMeadResult nelder_mead(const std::function<double(const num::RVec&)>& f,
                                    const num::RVec& x0, double initial_step,
                                    long max_evals, double f_tol) {
  using num::RVec;
  const int n = static_cast<int>(x0.size());
  NelderMeadResult res;

  std::vector<RVec> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (int i = 1; i <= n; ++i) pts[i](i - 1) += initial_step;
  for (int i = 0; i <= n; ++i) vals[i] = f(pts[i]);
  res.evaluations = n + 1;

  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
  while (res.evaluations < max_evals) {
    std::vector<int> order(n + 1);
    for (int i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    const int best = order[0], worst = order[n], second = order[n - 1];
    if (vals[worst] - vals[best] < f_tol) {
      res.converged = true;
      break;
    }
    RVec centroid = RVec::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != worst) centroid += pts[i];
    centroid /= n;

    const RVec xr = centroid + alpha * (centroid - pts[worst]);
    const double fr = f(xr);
    ++res.evaluations;
    if (fr < vals[best]) {
      const RVec xe = centroid + gamma * (xr - centroid);
      const double fe = f(xe);
      ++res.evaluations;
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
    } else if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
    } else {
      const RVec xc = centroid + rho * (pts[worst] - centroid);
      const double fc = f(xc);
      ++res.evaluations;
      if (fc < vals[worst]) {
        pts[worst] = xc;
        vals[worst] = fc;
      } else {
        for (int i = 0; i <= n; ++i) {
          if (i == best) continue;
          pts[i] = pts[best] + sigma * (pts[i] - pts[best]);
          vals[i] = f(pts[i]);
          ++res.evaluations;
        }
      }
    }
  }
  int arg = 0;
  for (int i = 1; i <= n; ++i)
    if (vals[i] < vals[arg]) arg = i;
  res.x = pts[arg];
  res.value = vals[arg];
  return res;
}

}  // namespace linusd::detail
