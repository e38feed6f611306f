#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

#include "../errors.hpp"

namespace helmscat::num {

struct OdeOptions {
  double rtol = 1e-12;
  double atol = 1e-14;
  double max_step = 0.0;  // 0 = unlimited
  std::size_t max_steps = 4'000'000;
};

// Dormand-Prince 5(4) for a small complex first-order system.
// Integrates in either direction and lands exactly on requested output
// points (sorted in travel order); FSAL evaluation is reused across steps.
template <std::size_t N>
class Rk45 {
public:
  using Cplx = std::complex<double>;
  using State = std::array<Cplx, N>;

  // f(x, y, dy); on_point(x, y) is called at every output point.
  // Returns the state at x1. Output points must lie in [x0, x1] (travel
  // order) — x1 itself may be included or not.
  template <typename F, typename Sink>
  static State integrate(F&& f, State y, double x0, double x1,
                         std::span<const double> outputs, Sink&& on_point,
                         const OdeOptions& opt = {}) {
    const double dir = (x1 >= x0) ? 1.0 : -1.0;
    const double span_len = std::abs(x1 - x0);
    if (span_len == 0.0) {
      for (double xo : outputs) {
        (void)xo;
        on_point(x0, y);
      }
      return y;
    }

    std::size_t next_out = 0;
    // Emit output points coinciding with the start.
    while (next_out < outputs.size() &&
           std::abs(outputs[next_out] - x0) <= 1e-14 * (1.0 + std::abs(x0))) {
      on_point(x0, y);
      ++next_out;
    }

    double x = x0;
    State k1;
    f(x, y, k1);
    double h = std::min(span_len / 50.0, 0.1);
    if (opt.max_step > 0) h = std::min(h, opt.max_step);

    std::size_t steps = 0;
    // Complete once the remaining span is below roundoff; a final sliver of
    // size ~1e-16 cannot be stepped and changes nothing.
    while (dir * (x1 - x) > 1e-14 * (1.0 + std::abs(x))) {
      if (++steps > opt.max_steps)
        throw SolverError("ODE step limit exceeded", x);

      // Emit outputs that coincide with the current position (within
      // roundoff); stepping a ~1e-16 interval to reach them would underflow.
      while (next_out < outputs.size() &&
             std::abs(outputs[next_out] - x) <= 1e-14 * (1.0 + std::abs(x))) {
        on_point(x, y);
        ++next_out;
      }

      double target = x1;
      if (next_out < outputs.size() && dir * (outputs[next_out] - target) < 0)
        target = outputs[next_out];
      double hstep = std::min(h, std::abs(target - x));
      if (hstep < 1e-14 * (1.0 + std::abs(x)))
        throw SolverError("ODE step size underflow", x);
      const double hs = dir * hstep;

      State k2, k3, k4, k5, k6, k7, yt, y5;
      auto stage = [&](State& out, std::initializer_list<std::pair<const State*, double>> terms) {
        for (std::size_t i = 0; i < N; ++i) {
          Cplx acc = 0.0;
          for (const auto& [ks, c] : terms) acc += c * (*ks)[i];
          out[i] = y[i] + hs * acc;
        }
      };

      stage(yt, {{&k1, 1.0 / 5}});
      f(x + hs / 5, yt, k2);
      stage(yt, {{&k1, 3.0 / 40}, {&k2, 9.0 / 40}});
      f(x + 3 * hs / 10, yt, k3);
      stage(yt, {{&k1, 44.0 / 45}, {&k2, -56.0 / 15}, {&k3, 32.0 / 9}});
      f(x + 4 * hs / 5, yt, k4);
      stage(yt, {{&k1, 19372.0 / 6561}, {&k2, -25360.0 / 2187},
                 {&k3, 64448.0 / 6561}, {&k4, -212.0 / 729}});
      f(x + 8 * hs / 9, yt, k5);
      stage(yt, {{&k1, 9017.0 / 3168}, {&k2, -355.0 / 33},
                 {&k3, 46732.0 / 5247}, {&k4, 49.0 / 176},
                 {&k5, -5103.0 / 18656}});
      f(x + hs, yt, k6);
      stage(y5, {{&k1, 35.0 / 384}, {&k3, 500.0 / 1113}, {&k4, 125.0 / 192},
                 {&k5, -2187.0 / 6784}, {&k6, 11.0 / 84}});
      f(x + hs, y5, k7);

      // Embedded 4th-order error estimate. Component scales are floored at a
      // fraction of the state norm so relative control stays well-posed when
      // one component passes through zero (atol may be 0 for problems whose
      // solution decays through many orders of magnitude).
      double ymax = 0.0;
      for (std::size_t i = 0; i < N; ++i)
        ymax = std::max({ymax, std::abs(y[i]), std::abs(y5[i])});
      double errsq = 0.0;
      for (std::size_t i = 0; i < N; ++i) {
        const Cplx e = hs * (71.0 / 57600 * k1[i] - 71.0 / 16695 * k3[i] +
                             71.0 / 1920 * k4[i] - 17253.0 / 339200 * k5[i] +
                             22.0 / 525 * k6[i] - 1.0 / 40 * k7[i]);
        const double mag =
            std::max({std::abs(y[i]), std::abs(y5[i]), 0.01 * ymax});
        const double sc = opt.atol + opt.rtol * mag;
        const double ae = std::abs(e);
        const double r = sc > 0.0 ? ae / sc : (ae == 0.0 ? 0.0 : 1e30);
        errsq += r * r;
      }
      const double err = std::sqrt(errsq / N);
      if (!std::isfinite(err)) {
        // Exploding trial step: shrink hard; persistent failure ends in the
        // step-underflow diagnostic above.
        h = hstep * 0.1;
        continue;
      }

      if (err <= 1.0) {
        x += hs;
        y = y5;
        k1 = k7;  // FSAL
        while (next_out < outputs.size() &&
               std::abs(outputs[next_out] - x) <=
                   1e-14 * (1.0 + std::abs(x))) {
          on_point(x, y);
          ++next_out;
        }
      }
      // On rejection k1 still matches (x, y); nothing to recompute.

      const double fac =
          std::clamp(0.9 * std::pow(std::max(err, 1e-30), -0.2), 0.2, 5.0);
      h = hstep * fac;
      if (opt.max_step > 0) h = std::min(h, opt.max_step);
    }

    // Emit any trailing outputs that coincide with x1.
    while (next_out < outputs.size()) {
      on_point(x1, y);
      ++next_out;
    }
    return y;
  }
};

}  // namespace helmscat::num
