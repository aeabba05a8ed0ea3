#include "berglab/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "berglab/special.hpp"

namespace berglab {

double normalization_constant(int n, double alpha) {
  require_dim(n, "normalization_constant");
  if (alpha <= -1.0)
    throw std::domain_error("normalization_constant: requires alpha > -1, got " +
                            std::to_string(alpha));
  return std::exp(lgamma_d(n + 1 + alpha) - lgamma_d(n + 1) -
                  lgamma_d(alpha + 1));
}

WeightedMeasure WeightedMeasure::standard(int n, double alpha) {
  return WeightedMeasure(n, alpha, true, normalization_constant(n, alpha));
}

WeightedMeasure WeightedMeasure::sigma_weight(int n, double sigma) {
  require_dim(n, "WeightedMeasure::sigma_weight");
  if (sigma <= -1.0)
    throw std::domain_error(
        "WeightedMeasure::sigma_weight: requires sigma > -1, got " +
        std::to_string(sigma));
  return WeightedMeasure(n, sigma, false, 1.0);
}

double WeightedMeasure::density(double omsq) const {
  return constant_ * std::pow(omsq, alpha_);
}

}  // namespace berglab
