#include "berglab/symbol.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "berglab/metric.hpp"

namespace berglab {

namespace {

// A pole factor blows up logarithmically on the ray where <z,b> -> 1; inside
// this distance of the singular set the principal branch is numerically
// meaningless and evaluation is refused.
constexpr double kPoleMargin = 1e-12;

void check_index_fits(const MultiIndex& m, int dim, const char* what) {
  for (int i = 0; i < 3; ++i) {
    if (m[i] < 0)
      throw std::invalid_argument(std::string(what) +
                                  ": multi-index entries must be >= 0");
    if (i >= dim && m[i] != 0)
      throw std::invalid_argument(std::string(what) +
                                  ": multi-index exceeds the dimension");
  }
}

}  // namespace

Symbol::Symbol(int dim, std::vector<SymbolTerm> terms)
    : dim_(dim), terms_(std::move(terms)) {
  require_dim(dim_, "Symbol");
  for (const SymbolTerm& t : terms_) {
    check_index_fits(t.holo, dim_, "Symbol");
    check_index_fits(t.anti, dim_, "Symbol");
    if ((t.log_pole || t.log_pole_conj) && t.pole_dir.dim() != dim_)
      throw std::invalid_argument("Symbol: pole direction dimension mismatch");
  }
}

Symbol Symbol::constant(int dim, Complex value) {
  SymbolTerm t;
  t.coef = value;
  return Symbol(dim, {t});
}

Symbol Symbol::coordinate(int dim, int i) {
  if (i < 0 || i >= dim)
    throw std::invalid_argument("Symbol::coordinate: index out of range");
  SymbolTerm t;
  t.coef = 1.0;
  t.holo[i] = 1;
  return Symbol(dim, {t});
}

Symbol Symbol::monomial(int dim, Complex coef, const MultiIndex& holo,
                        const MultiIndex& anti) {
  SymbolTerm t;
  t.coef = coef;
  t.holo = holo;
  t.anti = anti;
  return Symbol(dim, {t});
}

Symbol Symbol::log_pole(int dim, const Point& b) {
  SymbolTerm t;
  t.coef = 1.0;
  t.log_pole = true;
  t.pole_dir = b;
  return Symbol(dim, {t});
}

bool Symbol::holomorphic() const {
  for (const SymbolTerm& t : terms_) {
    if (t.coef == Complex(0.0, 0.0)) continue;
    if (t.anti.total() != 0 || t.radial_power != 0.0 || t.log_radial ||
        t.beta_factor || t.log_pole_conj)
      return false;
  }
  return true;
}

Symbol Symbol::conjugate() const {
  std::vector<SymbolTerm> out = terms_;
  for (SymbolTerm& t : out) {
    t.coef = std::conj(t.coef);
    std::swap(t.holo, t.anti);
    std::swap(t.log_pole, t.log_pole_conj);
  }
  return Symbol(dim_, std::move(out));
}

Complex Symbol::eval(const Point& z) const {
  require_interior(z, "Symbol::eval");
  require_dim(z.dim(), "Symbol::eval");
  if (z.dim() != dim_)
    throw std::invalid_argument("Symbol::eval: point dimension mismatch");

  const double omsq = 1.0 - z.norm_sq();
  Complex total = 0.0;
  for (const SymbolTerm& t : terms_) {
    if (t.coef == Complex(0.0, 0.0)) continue;
    Complex v = t.coef * t.holo.eval(z);
    if (t.anti.total() != 0) {
      Complex a = 1.0;
      for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < t.anti[i]; ++k) a *= std::conj(z[i]);
      v *= a;
    }
    if (t.radial_power != 0.0) v *= std::pow(omsq, t.radial_power);
    if (t.log_radial) v *= std::log(omsq);
    if (t.beta_factor) v *= artanh(z.norm());
    if (t.log_pole) {
      const Complex q = Complex(1.0, 0.0) - inner(z, t.pole_dir);
      if (std::abs(q) < kPoleMargin)
        throw std::domain_error("Symbol::eval: within 1e-12 of the pole ray");
      v *= -std::log(q);
    }
    if (t.log_pole_conj) {
      const Complex q = Complex(1.0, 0.0) - inner(t.pole_dir, z);
      if (std::abs(q) < kPoleMargin)
        throw std::domain_error("Symbol::eval: within 1e-12 of the pole ray");
      v *= -std::log(q);
    }
    total += v;
  }
  return total;
}

Symbol Symbol::operator+(const Symbol& other) const {
  if (other.dim_ != dim_)
    throw std::invalid_argument("Symbol::operator+: dimension mismatch");
  std::vector<SymbolTerm> out = terms_;
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return Symbol(dim_, std::move(out));
}

Symbol Symbol::operator*(Complex scale) const {
  std::vector<SymbolTerm> out = terms_;
  for (SymbolTerm& t : out) t.coef *= scale;
  return Symbol(dim_, std::move(out));
}

Symbol Symbol::operator*(const Symbol& other) const {
  if (other.dim_ != dim_)
    throw std::invalid_argument("Symbol::operator*: dimension mismatch");
  std::vector<SymbolTerm> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const SymbolTerm& a : terms_) {
    for (const SymbolTerm& b : other.terms_) {
      // Monomial and radial exponents add; each transcendental factor may
      // come from at most one side (their squares leave the algebra).
      if ((a.log_radial && b.log_radial) || (a.beta_factor && b.beta_factor) ||
          (a.log_pole && b.log_pole) || (a.log_pole_conj && b.log_pole_conj))
        throw std::invalid_argument(
            "Symbol::operator*: product term leaves the algebra (repeated "
            "log/beta factor)");
      // a single pole direction per term
      if ((a.log_pole || a.log_pole_conj) && (b.log_pole || b.log_pole_conj) &&
          sup_dist(a.pole_dir, b.pole_dir) != 0.0)
        throw std::invalid_argument(
            "Symbol::operator*: product term mixes two pole directions");
      SymbolTerm t;
      t.coef = a.coef * b.coef;
      for (int i = 0; i < 3; ++i) {
        t.holo[i] = a.holo[i] + b.holo[i];
        t.anti[i] = a.anti[i] + b.anti[i];
      }
      t.radial_power = a.radial_power + b.radial_power;
      t.log_radial = a.log_radial || b.log_radial;
      t.beta_factor = a.beta_factor || b.beta_factor;
      t.log_pole = a.log_pole || b.log_pole;
      t.log_pole_conj = a.log_pole_conj || b.log_pole_conj;
      t.pole_dir = a.log_pole || a.log_pole_conj ? a.pole_dir : b.pole_dir;
      out.push_back(t);
    }
  }
  return Symbol(dim_, std::move(out));
}

}  // namespace berglab
