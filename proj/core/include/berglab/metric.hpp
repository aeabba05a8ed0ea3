#pragma once

#include "berglab/point.hpp"

namespace berglab {

/// Bergman (hyperbolic) distance beta(z,w) = artanh |phi_z(w)| on the ball.
/// Evaluated through the two-point identity for 1 - |phi_z(w)|^2, so it
/// remains accurate deep into the boundary region where forming phi_z(w)
/// and subtracting from 1 would cancel.
double bergman_distance(const Point& z, const Point& w);

/// A point on the unique geodesic from z to w, at distance t*beta(z,w)
/// from z (t in [0,1]).  t=0 gives z, t=1 gives w.
Point geodesic_point(const Point& z, const Point& w, double t);

/// artanh with a guard: argument must lie in [0, 1).
double artanh(double r);

}  // namespace berglab
