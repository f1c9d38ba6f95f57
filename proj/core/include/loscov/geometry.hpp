#pragma once

#include <cmath>

namespace loscov {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

// Undirected road line parameterized by (offset, angle): the set of plane
// points p with p . (cos angle, sin angle) = offset. The angle is normalized
// into [0, pi) at construction; (offset, angle + pi) names the same line as
// (-offset, angle), so each line has exactly one stored representation.
// The point of the line closest to the origin (its foot point) lies at
// distance |offset| from the origin.
class Line {
 public:
  Line() = default;

  Line(double offset, double angle) : offset_(offset), angle_(angle) {
    constexpr double pi = 3.141592653589793238462643383279502884;
    if (angle_ < 0.0 || angle_ >= pi) {
      const double k = std::floor(angle_ / pi);
      angle_ -= k * pi;
      if (angle_ >= pi) angle_ -= pi;  // rounding guard
      if (angle_ < 0.0) angle_ = 0.0;
      if (std::fmod(std::fabs(k), 2.0) != 0.0) offset_ = -offset_;
    }
  }

  double offset() const { return offset_; }
  double angle() const { return angle_; }

 private:
  double offset_ = 0.0;
  double angle_ = 0.0;
};

// Orthogonal projection of the origin onto the line.
inline Vec2 foot_point(const Line& line) {
  return {line.offset() * std::cos(line.angle()),
          line.offset() * std::sin(line.angle())};
}

// Coordinate chart on a line: the abscissa s is arc length along the line
// with s = 0 at the foot point, increasing in the direction
// (-sin angle, cos angle). All on-line positions in this library (transmitter
// abscissas, LOS segment endpoints) use this chart.
struct LineFrame {
  Line line;

  Vec2 direction() const {
    return {-std::sin(line.angle()), std::cos(line.angle())};
  }
  Vec2 normal() const {
    return {std::cos(line.angle()), std::sin(line.angle())};
  }
  Vec2 to_plane(double s) const {
    const Vec2 d = direction();
    const Vec2 f = foot_point(line);
    return {f.x + s * d.x, f.y + s * d.y};
  }
};

// Rectangle [lo, hi] x [-half_width, half_width] in a line's frame;
// lo <= hi and half_width > 0.
struct CoverageRect {
  Line line;
  double lo = 0.0;
  double hi = 0.0;
  double half_width = 0.0;
};

// Closed containment test: the boundary counts as covered. The origin
// projects onto the line at abscissa 0 and sits at perpendicular distance
// |offset|, so the test reduces to two interval checks.
inline bool contains_origin(const CoverageRect& rect) {
  return std::fabs(rect.line.offset()) <= rect.half_width &&
         rect.lo <= 0.0 && 0.0 <= rect.hi;
}

}  // namespace loscov
