#include "berglab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "berglab/metric.hpp"
#include "berglab/rng.hpp"

namespace berglab {

namespace {

// Candidates on the shell of hyperbolic radius rho.  For n=1 these are
// equally spaced points on the circle |z| = tanh(rho), with angular spacing
// chosen so adjacent candidates are <= r/2 apart along the hyperbolic
// circle (circumference pi*sinh(2 rho)); a golden-ratio phase per shell
// avoids radial alignment across shells.  For n >= 2 the shell is a real
// (2n-1)-sphere and we oversample random directions against a net-size
// estimate; the repair pass catches any gap this leaves.
std::vector<Point> shell_candidates(int n, double rho, double half_r,
                                    int shell_index, std::mt19937_64& gen) {
  std::vector<Point> out;
  if (rho == 0.0) {
    out.push_back(Point::zero(n));
    return out;
  }
  const double R = std::tanh(rho);
  if (n == 1) {
    const double circumference = M_PI * std::sinh(2.0 * rho);
    const int m = std::max(1, static_cast<int>(
                                  std::ceil(circumference / half_r)));
    const double offset = shell_index * 0.6180339887498949;
    out.reserve(m);
    for (int j = 0; j < m; ++j) {
      const double theta = 2.0 * M_PI * (j + offset) / m;
      out.emplace_back(Complex(R * std::cos(theta), R * std::sin(theta)));
    }
    return out;
  }
  // Hyperbolic volume of the beta-ball of radius rho grows like the area
  // of {|z| <= tanh rho} under (1-|z|^2)^-(n+1); a net at spacing half_r on
  // the bounding sphere needs on the order of surface/half_r^(2n-1) points.
  const double omr2 = 1.0 / (std::cosh(rho) * std::cosh(rho));  // 1-R^2
  const double surface =
      2.0 * n * std::pow(M_PI, n) / std::tgamma(n) * std::pow(R, 2 * n - 1) /
      std::pow(omr2, n + 0.5);  // Euclidean area scaled by metric factors
  const double net = std::max(8.0, surface / std::pow(half_r, 2 * n - 1));
  const std::size_t count =
      static_cast<std::size_t>(std::ceil(6.0 * net * std::log(net + 2.0)));
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    Point z = random_sphere_point(n, gen);
    for (int i = 0; i < n; ++i) z[i] *= R;
    out.push_back(z);
  }
  return out;
}

}  // namespace

void Lattice::rebuild_radial_index() {
  by_rho_.clear();
  by_rho_.reserve(centers_.size());
  for (std::size_t i = 0; i < centers_.size(); ++i)
    by_rho_.emplace_back(rho_[i], i);
  std::sort(by_rho_.begin(), by_rho_.end());
}

std::pair<double, std::size_t> Lattice::nearest(const Point& z) const {
  require_interior(z, "Lattice::nearest");
  require_same_dim(z, centers_.front(), "Lattice::nearest");
  const double rho_z = artanh(z.norm());
  // Walk outward from the closest radius; once the radial gap alone exceeds
  // the best distance no further center can win (beta >= |rho_i - rho_z|).
  auto mid = std::lower_bound(by_rho_.begin(), by_rho_.end(),
                              std::make_pair(rho_z, std::size_t{0}));
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_idx = 0;
  auto consider = [&](const std::pair<double, std::size_t>& e) {
    const double d = bergman_distance(z, centers_[e.second]);
    if (d < best) {
      best = d;
      best_idx = e.second;
    }
  };
  auto lo = mid, hi = mid;
  while (true) {
    const bool can_lo = lo != by_rho_.begin() &&
                        rho_z - std::prev(lo)->first < best;
    const bool can_hi = hi != by_rho_.end() && hi->first - rho_z < best;
    if (!can_lo && !can_hi) break;
    if (can_hi && (!can_lo || hi->first - rho_z <= rho_z - std::prev(lo)->first)) {
      consider(*hi);
      ++hi;
    } else {
      --lo;
      consider(*lo);
    }
  }
  return {best, best_idx};
}

int Lattice::count_within(const Point& z, double radius) const {
  require_interior(z, "Lattice::count_within");
  const double rho_z = artanh(z.norm());
  auto lo = std::lower_bound(
      by_rho_.begin(), by_rho_.end(),
      std::make_pair(rho_z - radius, std::size_t{0}));
  int count = 0;
  for (auto it = lo; it != by_rho_.end() && it->first - rho_z <= radius; ++it)
    if (bergman_distance(z, centers_[it->second]) < radius) ++count;
  return count;
}

double Lattice::certify_separation() const {
  if (centers_.size() < 2) return std::numeric_limits<double>::infinity();
  // Seed the bound with consecutive-in-radius pairs, then sweep every pair
  // whose radial gap could still beat it.
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < by_rho_.size(); ++i)
    best = std::min(best, bergman_distance(centers_[by_rho_[i].second],
                                           centers_[by_rho_[i + 1].second]));
  for (std::size_t i = 0; i < by_rho_.size(); ++i)
    for (std::size_t j = i + 1;
         j < by_rho_.size() && by_rho_[j].first - by_rho_[i].first < best; ++j)
      best = std::min(best, bergman_distance(centers_[by_rho_[i].second],
                                             centers_[by_rho_[j].second]));
  return best;
}

Lattice build_lattice(int n, double r, double max_modulus, std::uint64_t seed,
                      int repair_samples) {
  require_dim(n, "build_lattice");
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument(
        "build_lattice: requires 0 < r < 1, got r=" + std::to_string(r));
  if (!(max_modulus > 0.0 && max_modulus < 1.0))
    throw std::invalid_argument(
        "build_lattice: requires 0 < max_modulus < 1, got " +
        std::to_string(max_modulus));
  if (repair_samples < 0)
    throw std::invalid_argument("build_lattice: repair_samples must be >= 0");

  Lattice lat;
  lat.dim_ = n;
  lat.r_ = r;
  lat.max_modulus_ = max_modulus;

  const double half_r = 0.5 * r;
  const double rho_max = artanh(max_modulus);
  std::mt19937_64 gen(subseed(seed, 0));

  // Shell radii: multiples of r/2 up to rho_max, plus the boundary sphere
  // itself when it is not already (nearly) a shell; without it the outermost
  // annulus can sit farther than r/4 from every shell and the net argument
  // behind the covering property breaks down.
  std::vector<double> shell_rho;
  const int K = static_cast<int>(std::floor(rho_max / half_r));
  for (int k = 0; k <= K; ++k) shell_rho.push_back(k * half_r);
  if (rho_max - K * half_r > 0.125 * r) shell_rho.push_back(rho_max);

  // Greedy acceptance.  A candidate on shell rho only needs checking against
  // accepted centers with radius > rho - r/2: beta(a,b) >= |beta(0,a)-beta(0,b)|
  // settles every farther pair.  The window is widened by a rounding margin so
  // adjacent-shell pairs (radial gap exactly r/2 in exact arithmetic, a few
  // ulp under it in doubles) are compared explicitly rather than assumed
  // separated; with this, min pairwise distance >= r/2 holds for the computed
  // distances themselves, not just up to rounding.
  const double prune_margin = 1e-9;
  for (std::size_t si = 0; si < shell_rho.size(); ++si) {
    const double rho = shell_rho[si];
    std::size_t first_to_check = 0;
    while (first_to_check < lat.centers_.size() &&
           rho - lat.rho_[first_to_check] >= half_r + prune_margin)
      ++first_to_check;
    for (const Point& cand :
         shell_candidates(n, rho, half_r, static_cast<int>(si), gen)) {
      bool ok = true;
      for (std::size_t j = first_to_check; j < lat.centers_.size(); ++j) {
        if (bergman_distance(cand, lat.centers_[j]) < half_r) {
          ok = false;
          break;
        }
      }
      if (ok) {
        lat.centers_.push_back(cand);
        lat.shell_.push_back(static_cast<int>(si));
        lat.rho_.push_back(rho);
      }
    }
  }
  lat.rebuild_radial_index();

  // Repair pass: any sampled point of {|z| <= max_modulus} not in some
  // D(a_k, r) becomes a center itself.  Such a point has beta >= r > r/2
  // from every center, so separation is preserved.  Inserted points go to a
  // side list so the sorted radial index need not be maintained per insert.
  std::mt19937_64 repair_gen(subseed(seed, 1));
  std::vector<std::size_t> inserted;
  for (int s = 0; s < repair_samples; ++s) {
    const Point z = random_ball_point(n, repair_gen, max_modulus);
    double d = lat.nearest(z).first;
    for (std::size_t idx : inserted)
      d = std::min(d, bergman_distance(z, lat.centers_[idx]));
    if (d >= r) {
      inserted.push_back(lat.centers_.size());
      lat.centers_.push_back(z);
      lat.shell_.push_back(-1);  // off-shell repair center
      lat.rho_.push_back(artanh(z.norm()));
    }
  }
  if (!inserted.empty()) lat.rebuild_radial_index();

  lat.separation_ = lat.certify_separation();
  if (lat.separation_ < half_r)
    throw std::runtime_error(
        "build_lattice: certification found separation " +
        std::to_string(lat.separation_) + " < r/2 (construction bug)");
  return lat;
}

int covering_multiplicity(const Lattice& lat, double radius_factor,
                          int samples, std::uint64_t seed) {
  if (samples < 1)
    throw std::invalid_argument("covering_multiplicity: samples must be >= 1");
  if (radius_factor <= 0.0)
    throw std::invalid_argument(
        "covering_multiplicity: radius_factor must be positive");
  const double radius = radius_factor * lat.r();
  std::mt19937_64 gen(seed);
  int worst = 0;
  for (int s = 0; s < samples; ++s) {
    const Point z = random_ball_point(lat.dim(), gen, lat.max_modulus());
    worst = std::max(worst, lat.count_within(z, radius));
  }
  return worst;
}

}  // namespace berglab
