#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bellga {

inline constexpr double kUnitNormTolerance = 1e-12;

constexpr double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

// Unit vector in R^3. Construction rejects zero or non-unit input instead of
// normalizing it; use Direction::normalized when normalization is intended.
class Direction {
 public:
  Direction(double x, double y, double z) : x_(x), y_(y), z_(z) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
      throw std::invalid_argument("Direction: non-finite component");
    }
    const double norm_sq = x * x + y * y + z * z;
    if (std::abs(norm_sq - 1.0) > kUnitNormTolerance) {
      throw std::invalid_argument("Direction: components must form a unit vector");
    }
  }

  static Direction normalized(double x, double y, double z) {
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(norm) || norm == 0.0) {
      throw std::invalid_argument("Direction::normalized: zero or non-finite input");
    }
    return Direction(x / norm, y / norm, z / norm);
  }

  // cos(angle)*u + sin(angle)*v for an orthonormal pair (u, v).
  static Direction planar(double angle_rad, const Direction& u, const Direction& v);

  // Angle measured from e1 inside the e1-e2 plane.
  static Direction planar_deg(double angle_deg) {
    const double t = deg2rad(angle_deg);
    return Direction(std::cos(t), std::sin(t), 0.0);
  }

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

 private:
  double x_, y_, z_;
};

inline double dot(const Direction& a, const Direction& b) {
  return a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
}

inline std::array<double, 3> cross(const Direction& a, const Direction& b) {
  return {a.y() * b.z() - a.z() * b.y(),
          a.z() * b.x() - a.x() * b.z(),
          a.x() * b.y() - a.y() * b.x()};
}

inline double norm(const std::array<double, 3>& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

inline bool orthonormal_pair(const Direction& u, const Direction& v, double tol = 1e-9) {
  return std::abs(dot(u, v)) <= tol;
}

inline Direction Direction::planar(double angle_rad, const Direction& u, const Direction& v) {
  if (!orthonormal_pair(u, v)) {
    throw std::invalid_argument("Direction::planar: plane directions must be orthonormal");
  }
  const double c = std::cos(angle_rad);
  const double s = std::sin(angle_rad);
  return Direction(c * u.x() + s * v.x(), c * u.y() + s * v.y(), c * u.z() + s * v.z());
}

inline bool approx_equal(const Direction& a, const Direction& b, double tol) {
  return std::abs(a.x() - b.x()) <= tol && std::abs(a.y() - b.y()) <= tol &&
         std::abs(a.z() - b.z()) <= tol;
}

}  // namespace bellga
