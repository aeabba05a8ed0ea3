#include "berglab/point.hpp"

#include <cmath>
#include <sstream>

namespace berglab {

Point Point::zero(int dim) {
  require_dim(dim, "Point::zero");
  Point p;
  p.dim_ = dim;
  return p;
}

double Point::norm() const { return std::sqrt(norm_sq()); }

Point Point::operator+(const Point& o) const {
  Point r = *this;
  for (int i = 0; i < dim_; ++i) r.c_[i] += o.c_[i];
  return r;
}

Point Point::operator-(const Point& o) const {
  Point r = *this;
  for (int i = 0; i < dim_; ++i) r.c_[i] -= o.c_[i];
  return r;
}

Point Point::operator*(Complex s) const {
  Point r = *this;
  for (int i = 0; i < dim_; ++i) r.c_[i] *= s;
  return r;
}

Point Point::operator-() const { return *this * Complex(-1.0, 0.0); }

std::string Point::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < dim_; ++i) {
    if (i) os << ", ";
    os << c_[i].real() << (c_[i].imag() < 0 ? "-" : "+")
       << std::abs(c_[i].imag()) << 'i';
  }
  os << ')';
  return os.str();
}

Complex inner(const Point& z, const Point& w) {
  Complex s = 0.0;
  for (int i = 0; i < z.dim(); ++i) s += z[i] * std::conj(w[i]);
  return s;
}

double sup_dist(const Point& z, const Point& w) {
  double m = 0.0;
  for (int i = 0; i < z.dim(); ++i) m = std::max(m, std::abs(z[i] - w[i]));
  return m;
}

void require_interior(const Point& z, const char* what) {
  if (!z.interior()) {
    throw std::domain_error(std::string(what) + ": point " + z.str() +
                            " too close to the unit sphere (|z| >= 1 - 1e-14)");
  }
}

void require_dim(int n, const char* what) {
  if (n < 1 || n > 3) {
    throw std::invalid_argument(std::string(what) +
                                ": dimension must be 1, 2 or 3, got " +
                                std::to_string(n));
  }
}

void require_same_dim(const Point& z, const Point& w, const char* what) {
  if (z.dim() != w.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch, " +
                                std::to_string(z.dim()) + " vs " +
                                std::to_string(w.dim()));
  }
}

}  // namespace berglab
