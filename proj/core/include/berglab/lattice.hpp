#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "berglab/point.hpp"

namespace berglab {

/// A Bergman-metric r-lattice on B_n: centers whose r-balls cover
/// {|z| <= max_modulus} and whose pairwise Bergman distances are >= r/2.
///
/// Construction is greedy shell packing: candidate points on spheres of
/// hyperbolic radius k*r/2 (plus one boundary shell at artanh(max_modulus)),
/// accepted when at Bergman distance >= r/2 from everything accepted so far.
/// A rejection-sampling repair pass then inserts any sampled point left
/// uncovered; such a point is automatically >= r from all centers, so the
/// separation invariant survives.  The minimum pairwise distance is finally
/// certified by an exhaustive scan (radially pruned, not sampled).
class Lattice {
 public:
  int dim() const { return dim_; }
  double r() const { return r_; }
  double max_modulus() const { return max_modulus_; }
  /// Certified minimum pairwise Bergman distance (>= r/2).
  double separation() const { return separation_; }
  std::size_t size() const { return centers_.size(); }
  const Point& center(std::size_t i) const { return centers_[i]; }
  const std::vector<Point>& centers() const { return centers_; }
  int shell(std::size_t i) const { return shell_[i]; }

  /// Bergman distance from z to the nearest center, with its index.
  std::pair<double, std::size_t> nearest(const Point& z) const;

  /// Number of centers a_k with beta(z, a_k) < radius.
  int count_within(const Point& z, double radius) const;

  /// True when z lies in some open ball D(a_k, r).
  bool covered(const Point& z) const { return nearest(z).first < r_; }

  /// Exhaustive pairwise minimum distance (what separation() was set from);
  /// exposed so tests can re-certify independently of construction.
  double certify_separation() const;

 private:
  friend Lattice build_lattice(int n, double r, double max_modulus,
                               std::uint64_t seed, int repair_samples);
  void rebuild_radial_index();

  int dim_ = 1;
  double r_ = 0.0;
  double max_modulus_ = 0.0;
  double separation_ = 0.0;
  std::vector<Point> centers_;
  std::vector<int> shell_;
  std::vector<double> rho_;  // hyperbolic radii beta(0, a_k)
  // (rho, center index) sorted by rho; radial pruning for queries:
  // |rho_i - rho_z| > R already implies beta > R.
  std::vector<std::pair<double, std::size_t>> by_rho_;
};

/// Greedy construction described on Lattice.  Randomness enters only for
/// n >= 2 (sphere directions) and in the repair pass, both driven by `seed`,
/// so the result is deterministic for fixed arguments.
Lattice build_lattice(int n, double r, double max_modulus,
                      std::uint64_t seed = 0x1a77u, int repair_samples = 10000);

/// Empirical overlap constant of the dilated balls D(a_k, radius_factor * r):
/// max over `samples` uniform points of {|z| <= max_modulus} of the number of
/// dilated balls containing the point.
int covering_multiplicity(const Lattice& lat, double radius_factor,
                          int samples, std::uint64_t seed);

}  // namespace berglab
