#include "berglab/moebius.hpp"

#include <cmath>
#include <stdexcept>

namespace berglab {

MoebiusMap::MoebiusMap(const Point& a) : a_(a), norm_sq_(a.norm_sq()) {
  require_interior(a, "MoebiusMap base point");
  s_ = std::sqrt(1.0 - norm_sq_);
}

Point MoebiusMap::apply(const Point& z) const {
  require_interior(z, "MoebiusMap::apply argument");
  require_same_dim(a_, z, "MoebiusMap::apply");
  const int n = a_.dim();
  if (norm_sq_ == 0.0) return -z;

  // P_a z = (<z,a>/|a|^2) a,  Q_a z = z - P_a z.
  const Complex za = inner(z, a_);
  const Complex proj_coef = za / norm_sq_;
  Point out = Point::zero(n);
  const Complex denom = 1.0 - za;
  for (int i = 0; i < n; ++i) {
    const Complex pz = proj_coef * a_[i];
    const Complex qz = z[i] - pz;
    out[i] = (a_[i] - pz - s_ * qz) / denom;
  }
  return out;
}

Point MoebiusMap::derivative_at_zero_transpose(const Point& g) const {
  require_same_dim(a_, g, "MoebiusMap::derivative_at_zero_transpose");
  const int n = a_.dim();
  // D(phi_a)(0) = (s/(1+s)) a a^* - s I acting on holomorphic tangent
  // vectors; its transpose sends g to (s/(1+s)) conj(a) <a,conj(g)>... in
  // coordinates: (J^T g)_i = (s/(1+s)) conj(a_i) sum_j a_j g_j - s g_i.
  Complex ag = 0.0;
  for (int j = 0; j < n; ++j) ag += a_[j] * g[j];
  const double c = s_ / (1.0 + s_);
  Point out = Point::zero(n);
  for (int i = 0; i < n; ++i) out[i] = c * std::conj(a_[i]) * ag - s_ * g[i];
  return out;
}

double MoebiusMap::real_jacobian(const Point& zeta) const {
  require_interior(zeta, "MoebiusMap::real_jacobian argument");
  require_same_dim(a_, zeta, "MoebiusMap::real_jacobian");
  const int n = a_.dim();
  const double ratio =
      (1.0 - norm_sq_) / std::norm(1.0 - inner(zeta, a_));
  return std::pow(ratio, n + 1);
}

double one_minus_phi_sq(const Point& a, const Point& z) {
  require_interior(a, "one_minus_phi_sq first argument");
  require_interior(z, "one_minus_phi_sq second argument");
  require_same_dim(a, z, "one_minus_phi_sq");
  const double num = (1.0 - a.norm_sq()) * (1.0 - z.norm_sq());
  return num / std::norm(1.0 - inner(z, a));
}

}  // namespace berglab
