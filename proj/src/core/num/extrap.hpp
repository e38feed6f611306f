#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "../errors.hpp"

namespace helmscat::num {

template <typename T>
struct Extrapolated {
  T value;
  double err;  // magnitude of the last Neville correction
};

// Polynomial extrapolation to 0 through (hs[i], ys[i]); hs distinct, > 0.
template <typename T>
Extrapolated<T> neville_at_zero(std::span<const double> hs,
                                std::span<const T> ys) {
  const std::size_t n = hs.size();
  if (n == 0 || ys.size() != n)
    throw SolverError("extrapolation needs at least one sample");
  std::vector<T> tab(ys.begin(), ys.end());
  T prev = tab[0];
  double err = 0.0;
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      const double hi = hs[i], him = hs[i + m];
      tab[i] = (hi * tab[i + 1] - him * tab[i]) / (hi - him);
    }
    err = std::abs(tab[0] - prev);
    prev = tab[0];
  }
  return {tab[0], err};
}

}  // namespace helmscat::num
