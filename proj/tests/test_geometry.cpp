#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "loscov/geometry.hpp"
#include "loscov/rng.hpp"
#include "support/oracles.hpp"

using namespace loscov;
using testsupport::origin_in_convex_quad;
using testsupport::rect_corners;

namespace {
constexpr double pi = std::numbers::pi;

// Brute-force nearest point: scan abscissas and keep the closest plane point.
double min_distance_to_origin(const Line& line, double span, double step) {
  const LineFrame frame{line};
  double best = std::numeric_limits<double>::infinity();
  for (double s = -span; s <= span; s += step)
    best = std::min(best, norm(frame.to_plane(s)));
  return best;
}
}  // namespace

TEST_CASE("foot point basics") {
  CHECK(norm(foot_point(Line(0.0, 0.0))) == doctest::Approx(0.0));

  const Vec2 f = foot_point(Line(7.5, 0.0));
  CHECK(f.x == doctest::Approx(7.5));
  CHECK(f.y == doctest::Approx(0.0));
  CHECK(norm(f) == doctest::Approx(7.5));

  const Line line(3.0, pi / 2.0);
  CHECK(norm(foot_point(line)) == doctest::Approx(3.0));
  // brute-force: the closest sampled point on the line is no closer than the
  // foot point, and the minimum sits at the foot point's abscissa
  const double brute = min_distance_to_origin(line, 50.0, 0.001);
  CHECK(brute == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(norm(LineFrame{line}.to_plane(0.0)) == doctest::Approx(brute).epsilon(1e-6));
}

TEST_CASE("line frame is an isometric chart") {
  StreamRng rng = make_rng(0xF00D);
  for (int i = 0; i < 200; ++i) {
    const Line line(rng.uniform(-100.0, 100.0), rng.uniform(0.0, pi));
    const LineFrame frame{line};
    const Vec2 at0 = frame.to_plane(0.0);
    const Vec2 foot = foot_point(line);
    CHECK(at0.x == doctest::Approx(foot.x).epsilon(1e-12));
    CHECK(at0.y == doctest::Approx(foot.y).epsilon(1e-12));
    const double s = rng.uniform(-500.0, 500.0);
    const Vec2 p = frame.to_plane(s);
    CHECK(std::hypot(p.x - at0.x, p.y - at0.y) == doctest::Approx(std::fabs(s)));
  }
}

TEST_CASE("angle normalization keeps one representation per line") {
  StreamRng rng = make_rng(0xBEEF);
  for (int i = 0; i < 500; ++i) {
    const double offset = rng.uniform(-50.0, 50.0);
    const double angle = rng.uniform(0.0, pi);
    const Line base(offset, angle);
    CHECK(base.angle() >= 0.0);
    CHECK(base.angle() < pi);

    const Line shifted(-offset, angle + pi);
    CHECK(shifted.offset() == doctest::Approx(base.offset()).epsilon(1e-12));
    CHECK(shifted.angle() == doctest::Approx(base.angle()).epsilon(1e-9));

    const int k = static_cast<int>(rng.uniform(-3.0, 4.0));
    const Line wrapped(k % 2 == 0 ? offset : -offset, angle + k * pi);
    CHECK(wrapped.offset() == doctest::Approx(base.offset()).epsilon(1e-9));
    CHECK(wrapped.angle() == doctest::Approx(base.angle()).epsilon(1e-9));
  }
}

TEST_CASE("containment examples") {
  CHECK(contains_origin(CoverageRect{Line(0.0, 0.3), -10.0, 10.0, 50.0}));
  CHECK_FALSE(contains_origin(CoverageRect{Line(60.0, 1.0), -1e6, 1e6, 50.0}));

  const CoverageRect shifted{Line(40.0, 2.0), -1.0, 1.0, 50.0};
  CHECK(contains_origin(shifted));
  CHECK(origin_in_convex_quad(rect_corners(shifted)));
}

TEST_CASE("containment agrees with a point-in-polygon oracle") {
  StreamRng rng = make_rng(0xCAFE);
  int contained = 0;
  for (int i = 0; i < 10000; ++i) {
    const double hw = rng.uniform(0.5, 60.0);
    const double lo = rng.uniform(-150.0, 100.0);
    const CoverageRect rect{Line(rng.uniform(-80.0, 80.0), rng.uniform(0.0, pi)),
                            lo, lo + rng.uniform(0.0, 200.0), hw};
    const bool fast = contains_origin(rect);
    const bool oracle = origin_in_convex_quad(rect_corners(rect));
    CHECK(fast == oracle);
    contained += fast;
  }
  CHECK(contained > 100);  // the sample actually exercises both outcomes
  CHECK(contained < 9900);
}

TEST_CASE("containment is rotation invariant") {
  StreamRng rng = make_rng(0xA11CE);
  for (int i = 0; i < 10000; ++i) {
    const double hw = rng.uniform(0.5, 60.0);
    const double lo = rng.uniform(-150.0, 100.0);
    const double offset = rng.uniform(-80.0, 80.0);
    const double angle = rng.uniform(0.0, pi);
    const CoverageRect rect{Line(offset, angle), lo, lo + rng.uniform(0.0, 200.0), hw};

    const double delta = rng.uniform(-10.0, 10.0);
    const CoverageRect rotated{Line(offset, angle + delta), rect.lo, rect.hi, hw};
    CHECK(contains_origin(rect) == contains_origin(rotated));
  }
}
