#pragma once

#include <vector>

#include "berglab/point.hpp"

namespace berglab {

/// The involutive automorphism phi_a of the unit ball exchanging a and 0.
///
/// For a = 0 this is z |-> -z.  Otherwise, with P_a the projection onto
/// span{a}, Q_a = I - P_a and s_a = sqrt(1 - |a|^2),
///
///   phi_a(z) = (a - P_a z - s_a Q_a z) / (1 - <z,a>).
class MoebiusMap {
 public:
  explicit MoebiusMap(const Point& a);

  const Point& base_point() const { return a_; }

  /// phi_a(z).  Throws std::domain_error if z is not interior.
  Point apply(const Point& z) const;

  /// Pullback of a Euclidean cotangent vector through the holomorphic
  /// derivative of phi_z at 0: returns J^T g where J = D(phi_z)(0).
  /// Used to form the invariant gradient (J^T grad f)(z).
  Point derivative_at_zero_transpose(const Point& g) const;

  /// Real Jacobian determinant of phi_a at zeta (change of variables for
  /// Lebesgue volume):  ( (1-|a|^2) / |1 - <zeta,a>|^2 )^(n+1).
  double real_jacobian(const Point& zeta) const;

 private:
  Point a_;
  double norm_sq_;  // |a|^2
  double s_;        // sqrt(1 - |a|^2)
};

/// 1 - |phi_a(z)|^2 computed through the two-point identity
///   1 - |phi_a(z)|^2 = (1-|a|^2)(1-|z|^2) / |1 - <z,a>|^2,
/// which stays accurate when either point is close to the sphere.
double one_minus_phi_sq(const Point& a, const Point& z);

}  // namespace berglab
