#pragma once

#include <vector>

#include "berglab/moments.hpp"
#include "berglab/point.hpp"

namespace berglab {

/// One multiplicative term of the symbol algebra:
///
///   coef * z^holo * conj(z)^anti * (1-|z|^2)^radial_power
///        * log(1-|z|^2)        if log_radial
///        * beta(z,0)           if beta_factor     (hyperbolic distance to 0)
///        * log 1/(1-<z,b>)     if log_pole        (principal branch)
///        * log 1/(1-<b,z>)     if log_pole_conj
///
/// The two pole factors share the direction b; conjugating a term swaps them
/// (conj log 1/(1-<z,b>) = log 1/(1-<b,z>), since <b,z> = conj <z,b>).
struct SymbolTerm {
  Complex coef{0.0, 0.0};
  MultiIndex holo{};
  MultiIndex anti{};
  double radial_power = 0.0;
  bool log_radial = false;
  bool beta_factor = false;
  bool log_pole = false;
  bool log_pole_conj = false;
  Point pole_dir{};
};

/// A finite sum of SymbolTerms on a fixed B_n.  This is the whole test-symbol
/// class of the lab: rich enough to hold every concrete function the
/// experiments probe (monomials, conjugates, radial weights, the log and
/// beta singularities), small enough that term-by-term differentiation is
/// exact.
class Symbol {
 public:
  Symbol(int dim, std::vector<SymbolTerm> terms);

  static Symbol constant(int dim, Complex value);
  /// z_i (zero-based coordinate index).
  static Symbol coordinate(int dim, int i);
  static Symbol monomial(int dim, Complex coef, const MultiIndex& holo,
                         const MultiIndex& anti = {});
  /// log 1/(1-<z,b>).
  static Symbol log_pole(int dim, const Point& b);

  int dim() const { return dim_; }
  const std::vector<SymbolTerm>& terms() const { return terms_; }

  /// True when no term carries antiholomorphic or radial content (anti
  /// index, radial power, radial log, beta factor, conjugated pole).
  /// Zero-coefficient terms are ignored.
  bool holomorphic() const;

  /// conj(f): swaps holo/anti indices and the two pole flags, conjugates
  /// coefficients.  eval(conjugate(), z) == conj(eval(z)) everywhere.
  Symbol conjugate() const;

  Complex eval(const Point& z) const;

  Symbol operator+(const Symbol& other) const;
  Symbol operator*(Complex scale) const;
  /// Term-by-term product.  Throws when a product term would need a squared
  /// transcendental factor or two pole directions (outside the algebra).
  Symbol operator*(const Symbol& other) const;

 private:
  int dim_;
  std::vector<SymbolTerm> terms_;
};

}  // namespace berglab
