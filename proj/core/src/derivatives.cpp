#include "berglab/derivatives.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "berglab/metric.hpp"
#include "berglab/moebius.hpp"
#include "berglab/rng.hpp"

namespace berglab {

namespace {

constexpr double kPoleMargin = 1e-12;

// One multiplicative factor of a term, with its holomorphic partials.
// Antiholomorphic factors carry value only (their d/dz_i vanish).
struct Factor {
  Complex value{1.0, 0.0};
  std::array<Complex, 3> d{};
  bool differentiable = false;
};

}  // namespace

GradientReport gradient(const Symbol& f, const Point& z) {
  require_interior(z, "gradient");
  if (z.dim() != f.dim())
    throw std::invalid_argument("gradient: point dimension mismatch");
  const int n = f.dim();
  const double omsq = 1.0 - z.norm_sq();

  GradientReport report;
  report.z = z;
  report.grad.assign(static_cast<std::size_t>(n), Complex(0.0, 0.0));

  for (const SymbolTerm& t : f.terms()) {
    if (t.coef == Complex(0.0, 0.0)) continue;

    std::vector<Factor> fac;
    fac.reserve(7);

    if (t.holo.total() != 0) {
      Factor m;
      m.value = t.holo.eval(z);
      m.differentiable = true;
      for (int i = 0; i < n; ++i) {
        if (t.holo[i] == 0) continue;
        MultiIndex lowered = t.holo;
        lowered[i] -= 1;
        m.d[i] = static_cast<double>(t.holo[i]) * lowered.eval(z);
      }
      fac.push_back(m);
    }
    if (t.anti.total() != 0) {
      Factor k;
      k.value = 1.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < t.anti[i]; ++j) k.value *= std::conj(z[i]);
      fac.push_back(k);
    }
    if (t.radial_power != 0.0) {
      Factor r;
      r.value = std::pow(omsq, t.radial_power);
      r.differentiable = true;
      const double slope = -t.radial_power * std::pow(omsq, t.radial_power - 1.0);
      for (int i = 0; i < n; ++i) r.d[i] = slope * std::conj(z[i]);
      fac.push_back(r);
    }
    if (t.log_radial) {
      Factor l;
      l.value = std::log(omsq);
      l.differentiable = true;
      for (int i = 0; i < n; ++i) l.d[i] = -std::conj(z[i]) / omsq;
      fac.push_back(l);
    }
    if (t.beta_factor) {
      const double r = z.norm();
      if (r == 0.0)
        throw std::domain_error(
            "gradient: beta(z,0) factor is not differentiable at the origin");
      Factor b;
      b.value = artanh(r);
      b.differentiable = true;
      // d/dz_i artanh|z| = conj(z_i) / (2 |z| (1-|z|^2)).
      for (int i = 0; i < n; ++i) b.d[i] = std::conj(z[i]) / (2.0 * r * omsq);
      fac.push_back(b);
    }
    if (t.log_pole) {
      const Complex q = Complex(1.0, 0.0) - inner(z, t.pole_dir);
      if (std::abs(q) < kPoleMargin)
        throw std::domain_error("gradient: within 1e-12 of the pole ray");
      Factor p;
      p.value = -std::log(q);
      p.differentiable = true;
      for (int i = 0; i < n; ++i) p.d[i] = std::conj(t.pole_dir[i]) / q;
      fac.push_back(p);
    }
    if (t.log_pole_conj) {
      const Complex q = Complex(1.0, 0.0) - inner(t.pole_dir, z);
      if (std::abs(q) < kPoleMargin)
        throw std::domain_error("gradient: within 1e-12 of the pole ray");
      Factor p;
      p.value = -std::log(q);
      fac.push_back(p);
    }

    // Product rule: d_i(term) = sum over factors of (d_i factor) * rest.
    for (std::size_t a = 0; a < fac.size(); ++a) {
      if (!fac[a].differentiable) continue;
      Complex rest = t.coef;
      for (std::size_t b = 0; b < fac.size(); ++b)
        if (b != a) rest *= fac[b].value;
      for (int i = 0; i < n; ++i) report.grad[i] += rest * fac[a].d[i];
    }
  }

  for (int i = 0; i < n; ++i) report.radial += z[i] * report.grad[i];

  Point g = Point::zero(n);
  for (int i = 0; i < n; ++i) g[i] = report.grad[i];
  report.invariant_norm = MoebiusMap(z).derivative_at_zero_transpose(g).norm();

  if (n > 1) {
    Point gbar = Point::zero(n);
    for (int i = 0; i < n; ++i) gbar[i] = std::conj(report.grad[i]);
    const double zsq = z.norm_sq();
    if (zsq == 0.0) {
      report.tangential_norm = gbar.norm();
    } else {
      const Point proj = gbar - z * (inner(gbar, z) / zsq);
      report.tangential_norm = proj.norm();
    }
  }
  return report;
}

double invariant_gradient_norm(const Symbol& f, const Point& z) {
  if (!f.holomorphic())
    throw std::invalid_argument(
        "invariant_gradient_norm: requires a holomorphic symbol");
  return gradient(f, z).invariant_norm;
}

double tangential_gradient_norm(const Symbol& f, const Point& z) {
  if (f.dim() < 2)
    throw std::invalid_argument(
        "tangential_gradient_norm: requires n > 1");
  if (z.norm_sq() == 0.0)
    throw std::invalid_argument(
        "tangential_gradient_norm: undefined at z = 0");
  if (!f.holomorphic())
    throw std::invalid_argument(
        "tangential_gradient_norm: requires a holomorphic symbol");
  return gradient(f, z).tangential_norm;
}

std::vector<Point> sphere_samples(int n, int resolution) {
  require_dim(n, "sphere_samples");
  if (resolution < 0)
    throw std::invalid_argument("sphere_samples: resolution must be >= 0");
  if (resolution == 0) resolution = (n == 1) ? 256 : (n == 2) ? 33 : 24;

  std::vector<Point> out;
  if (n == 1) {
    out.reserve(static_cast<std::size_t>(resolution));
    for (int j = 0; j < resolution; ++j) {
      const double theta = 2.0 * M_PI * j / resolution;
      out.emplace_back(std::polar(1.0, theta));
    }
  } else if (n == 2) {
    const int tn = std::max(resolution, 2);
    constexpr int kPhases = 16;
    out.reserve(static_cast<std::size_t>(tn) * kPhases * kPhases);
    for (int j = 0; j < tn; ++j) {
      const double t = 0.5 * M_PI * j / (tn - 1);
      const double c = std::cos(t), s = std::sin(t);
      for (int p1 = 0; p1 < kPhases; ++p1)
        for (int p2 = 0; p2 < kPhases; ++p2)
          out.emplace_back(std::polar(c, 2.0 * M_PI * p1 / kPhases),
                           std::polar(s, 2.0 * M_PI * p2 / kPhases));
    }
  } else {
    std::mt19937_64 gen(0x5a7e11u);
    const int count = 64 * resolution;
    out.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) out.push_back(random_sphere_point(n, gen));
  }
  return out;
}

BlochEstimate bloch_norm(const Symbol& f, double a, const Lattice& lat,
                         const std::vector<double>& shells,
                         int shell_resolution) {
  if (a < 0.0) throw std::invalid_argument("bloch_norm: requires a >= 0");
  if (!f.holomorphic())
    throw std::invalid_argument("bloch_norm: requires a holomorphic symbol");
  if (f.dim() != lat.dim())
    throw std::invalid_argument("bloch_norm: lattice dimension mismatch");
  const int n = f.dim();

  const bool want_invariant = (n == 1) || (a > 0.5);
  const auto weights = [&](const Point& z) {
    const GradientReport rep = gradient(f, z);
    double gnorm = 0.0;
    for (const Complex& gi : rep.grad) gnorm += std::norm(gi);
    gnorm = std::sqrt(gnorm);
    const double omsq = 1.0 - z.norm_sq();
    return std::pair<double, double>{
        std::pow(omsq, a) * gnorm,
        want_invariant ? std::pow(omsq, a - 1.0) * rep.invariant_norm : 0.0};
  };

  double sup = 0.0, sup_inv = 0.0;
  for (const Point& c : lat.centers()) {
    const auto [w, wi] = weights(c);
    sup = std::max(sup, w);
    sup_inv = std::max(sup_inv, wi);
  }

  BlochEstimate est;
  est.a = a;
  const std::vector<Point> dirs = sphere_samples(n, shell_resolution);
  BlochEstimate::InvariantVariant inv;
  for (const double radius : shells) {
    if (radius < 0.0 || radius >= 1.0)
      throw std::invalid_argument("bloch_norm: shell radii must lie in [0,1)");
    double shell_sup = 0.0, shell_sup_inv = 0.0;
    for (const Point& d : dirs) {
      const auto [w, wi] = weights(d * radius);
      shell_sup = std::max(shell_sup, w);
      shell_sup_inv = std::max(shell_sup_inv, wi);
    }
    est.little_profile.emplace_back(radius, shell_sup);
    inv.profile.emplace_back(radius, shell_sup_inv);
    sup = std::max(sup, shell_sup);
    sup_inv = std::max(sup_inv, shell_sup_inv);
  }

  const double at_zero = std::abs(f.eval(Point::zero(n)));
  est.norm = at_zero + sup;
  if (want_invariant) {
    inv.norm = at_zero + sup_inv;
    est.invariant_variant = std::move(inv);
  }
  return est;
}

std::vector<std::pair<double, double>> max_principle_probe(
    const Symbol& f, const std::vector<double>& shells, int shell_resolution) {
  if (f.dim() < 2)
    throw std::invalid_argument("max_principle_probe: requires n > 1");
  if (!f.holomorphic())
    throw std::invalid_argument(
        "max_principle_probe: requires a holomorphic symbol");

  const std::vector<Point> dirs = sphere_samples(f.dim(), shell_resolution);
  std::vector<std::pair<double, double>> profile;
  profile.reserve(shells.size());
  for (const double radius : shells) {
    if (radius <= 0.0 || radius >= 1.0)
      throw std::invalid_argument(
          "max_principle_probe: shell radii must lie in (0,1)");
    double sup = 0.0;
    for (const Point& d : dirs)
      sup = std::max(sup, gradient(f, d * radius).tangential_norm);
    profile.emplace_back(radius, sup);
  }
  return profile;
}

}  // namespace berglab
