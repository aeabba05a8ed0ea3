#pragma once

#include "berglab/point.hpp"

namespace berglab {

/// Weighted volume measure (1-|z|^2)^alpha dv on B_n, in one of two
/// conventions that the literature keeps side by side:
///   - normalized:  dv_alpha = c_alpha (1-|z|^2)^alpha dv with mass one
///     (the convention of the Bergman-space norms);
///   - plain:       dv_sigma = (1-|z|^2)^sigma dv, no constant
///     (the convention of the oscillation/BMO machinery).
/// Mixing the two silently corrupts constants by a factor c_alpha, so the
/// convention travels with the object instead of with the call site.
class WeightedMeasure {
 public:
  /// Normalized dv_alpha.  Requires alpha > -1.
  static WeightedMeasure standard(int n, double alpha);
  /// Unnormalized (1-|z|^2)^sigma dv.  Requires sigma > -1.
  static WeightedMeasure sigma_weight(int n, double sigma);

  int dim() const { return n_; }
  double alpha() const { return alpha_; }
  bool normalized() const { return normalized_; }
  /// c_alpha for the normalized convention, 1 otherwise.
  double constant() const { return constant_; }

  /// Density against plain dv at a point with 1-|z|^2 = omsq.
  double density(double omsq) const;

 private:
  WeightedMeasure(int n, double alpha, bool normalized, double constant)
      : n_(n), alpha_(alpha), normalized_(normalized), constant_(constant) {}
  int n_;
  double alpha_;
  bool normalized_;
  double constant_;
};

/// c_alpha = Gamma(n+1+alpha) / (Gamma(n+1) Gamma(alpha+1)), the constant
/// with v_alpha(B_n) = 1.  Requires alpha > -1.
double normalization_constant(int n, double alpha);

}  // namespace berglab
