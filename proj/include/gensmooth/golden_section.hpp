#pragma once

#include <cmath>
#include <utility>

namespace gensmooth {

/// Golden-section search for the maximum of h on [lo, hi]. Returns the best
/// (x, h(x)) seen, including the two bracket ends. Stops once the bracket is
/// narrower than `width_tol` or after `max_iter` iterations.
template <class H>
std::pair<double, double> golden_section_max(H&& h, double lo, double hi, double width_tol, int max_iter = 100) {
  constexpr double kInvPhi = 0.6180339887498949;
  double best_x = lo, best_h = h(lo);
  if (const double vh = h(hi); vh > best_h) {
    best_x = hi;
    best_h = vh;
  }
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double hc = h(c), hd = h(d);
  for (int it = 0; it < max_iter && (b - a) > width_tol; ++it) {
    if (hc >= hd) {
      b = d;
      d = c;
      hd = hc;
      c = b - kInvPhi * (b - a);
      hc = h(c);
    } else {
      a = c;
      c = d;
      hc = hd;
      d = a + kInvPhi * (b - a);
      hd = h(d);
    }
    if (hc > best_h) {
      best_h = hc;
      best_x = c;
    }
    if (hd > best_h) {
      best_h = hd;
      best_x = d;
    }
  }
  return {best_x, best_h};
}

}  // namespace gensmooth
