#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace cauchy_sketch {

/// Image F(v) of a point under a k x D projection.
class SketchedPoint {
 public:
  SketchedPoint() = default;
  explicit SketchedPoint(std::vector<double> coords);

  std::size_t k() const { return coords_.size(); }
  std::span<const double> coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

 private:
  std::vector<double> coords_;
};

/// Coordinate function xi(a) = ln(1 + sqrt(a)) + ln(1 + a) / 2, a >= 0.
/// Concave, increasing, xi(0) = 0, so it preserves metrics.
double xi(double a);

/// Solves xi(a) = value for a >= 0.
double xi_inverse(double value);

/// Target metric: mean of xi(|u_i - v_i|) over the k coordinates.
double rho(const SketchedPoint& u, const SketchedPoint& v);
double rho(std::span<const double> u, std::span<const double> v);

/// Brackets (sqrt(a), sqrt(a) (1 + a/2)) around xi(a) for 0 < a < 1/6.
std::pair<double, double> xi_small_envelope(double a);

}  // namespace cauchy_sketch
