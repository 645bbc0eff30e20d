#pragma once

#include <array>

namespace triqap::detail {

// Greedy coordinate ascent over N angles: tries +/- step on each coordinate,
// halves the step after a sweep with no improvement, stops below tol.
template <int N, typename F>
double coordinate_ascent(F&& f, std::array<double, N>& angles, double step, double tol,
                         long* evals = nullptr) {
  double best = f(angles);
  while (step > tol) {
    bool improved = false;
    for (int i = 0; i < N; ++i) {
      for (double delta : {step, -step}) {
        std::array<double, N> trial = angles;
        trial[i] += delta;
        const double v = f(trial);
        if (evals) ++*evals;
        if (v > best) {
          best = v;
          angles = trial;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace triqap::detail
