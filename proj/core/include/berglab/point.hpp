#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace berglab {

using Complex = std::complex<double>;

// Points are rejected once |z| >= 1 - kBoundaryMargin; every analytic
// quantity in the lab degenerates as |z| -> 1 and nothing meaningful can be
// computed closer to the sphere than this in double precision.
inline constexpr double kBoundaryMargin = 1e-14;

/// A point of C^n, n in {1,2,3}.  Fixed capacity, runtime dimension.
class Point {
 public:
  Point() : dim_(1) {}
  explicit Point(Complex z1) : dim_(1) { c_[0] = z1; }
  Point(Complex z1, Complex z2) : dim_(2) {
    c_[0] = z1;
    c_[1] = z2;
  }
  Point(Complex z1, Complex z2, Complex z3) : dim_(3) {
    c_[0] = z1;
    c_[1] = z2;
    c_[2] = z3;
  }

  static Point zero(int dim);

  int dim() const { return dim_; }
  Complex operator[](int i) const { return c_[i]; }
  Complex& operator[](int i) { return c_[i]; }

  double norm_sq() const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += std::norm(c_[i]);
    return s;
  }
  double norm() const;

  /// True when the point is usable for interior operations.
  bool interior() const { return norm_sq() < 1.0 - 2.0 * kBoundaryMargin; }

  Point operator+(const Point& o) const;
  Point operator-(const Point& o) const;
  Point operator*(Complex s) const;
  Point operator-() const;

  std::string str() const;

 private:
  std::array<Complex, 3> c_{};
  int dim_;
};

/// Hermitian pairing <z,w> = sum_i z_i * conj(w_i).
Complex inner(const Point& z, const Point& w);

/// max_i |z_i - w_i|, used by identity checks.
double sup_dist(const Point& z, const Point& w);

/// Throws std::domain_error unless |z| < 1 - margin.  `what` names the caller.
void require_interior(const Point& z, const char* what);

/// Throws std::invalid_argument unless dim in {1,2,3}.
void require_dim(int n, const char* what);

/// Throws std::invalid_argument unless z and w live in the same C^n.
void require_same_dim(const Point& z, const Point& w, const char* what);

}  // namespace berglab
