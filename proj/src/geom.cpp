#include "trapdist/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace trapdist {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

double cross(const Point2& a, const Point2& b) { return a.x() * b.y() - a.y() * b.x(); }

double interior_angle(const Point2& prev, const Point2& at, const Point2& next) {
  const Point2 u = prev - at;
  const Point2 v = next - at;
  return std::atan2(std::abs(cross(u, v)), u.dot(v));
}

}  // namespace

std::string_view to_string(CaseId id) {
  switch (id) {
    case CaseId::AB: return "AB";
    case CaseId::CD: return "CD";
    case CaseId::EF: return "EF";
    case CaseId::GH: return "GH";
  }
  return "?";
}

std::string_view lower_name(CaseId id) {
  switch (id) {
    case CaseId::AB: return "ab";
    case CaseId::CD: return "cd";
    case CaseId::EF: return "ef";
    case CaseId::GH: return "gh";
  }
  return "?";
}

CaseId parse_case(std::string_view name) {
  for (const CaseId id : kAllCases) {
    if (name == to_string(id) || name == lower_name(id)) return id;
  }
  throw std::invalid_argument("unknown case '" + std::string(name) + "'");
}

Trapezoid::Trapezoid(const std::array<Point2, 4>& vertices) : vertices_(vertices) {
  for (const auto& v : vertices_) {
    if (!v.allFinite()) throw std::invalid_argument("trapezoid vertex is not finite");
  }
  const auto sides = side_lengths();
  constexpr std::array<double, 4> expected = {2.0, 1.0, 1.0, 1.0};
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(sides[i] - expected[i]) > kTolerance) {
      throw std::invalid_argument("trapezoid side " + std::to_string(i) + " has length " +
                                  std::to_string(sides[i]));
    }
  }
  for (const double angle : base_angles()) {
    if (std::abs(angle - std::numbers::pi / 3) > kTolerance) {
      throw std::invalid_argument("trapezoid base angle is not pi/3");
    }
  }
  // Shoelace sign gives the orientation.
  double twice_area = 0;
  for (std::size_t i = 0; i < 4; ++i) twice_area += cross(vertices_[i], vertices_[(i + 1) % 4]);
  if (twice_area <= 0) throw std::invalid_argument("trapezoid vertices are not counterclockwise");
  if (std::abs(0.5 * twice_area - 3 * kSqrt3 / 4) > kTolerance) {
    throw std::invalid_argument("trapezoid area is not 3*sqrt(3)/4");
  }
}

double Trapezoid::area() const {
  double twice_area = 0;
  for (std::size_t i = 0; i < 4; ++i) twice_area += cross(vertices_[i], vertices_[(i + 1) % 4]);
  return 0.5 * std::abs(twice_area);
}

std::array<double, 4> Trapezoid::side_lengths() const {
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = (vertices_[(i + 1) % 4] - vertices_[i]).norm();
  return out;
}

std::array<double, 2> Trapezoid::base_angles() const {
  const auto& v = vertices_;
  return {interior_angle(v[3], v[0], v[1]), interior_angle(v[0], v[1], v[2])};
}

std::array<Triangle, 3> Trapezoid::triangles() const {
  const auto& v = vertices_;
  const Point2 mid = 0.5 * (v[0] + v[1]);
  return {Triangle{v[0], mid, v[3]}, Triangle{mid, v[2], v[3]}, Triangle{mid, v[1], v[2]}};
}

bool Trapezoid::contains(const Point2& p, double eps) const {
  for (std::size_t i = 0; i < 4; ++i) {
    const Point2 edge = vertices_[(i + 1) % 4] - vertices_[i];
    // Edges have length 1 or 2, so the cross product is a scaled distance.
    if (cross(edge, p - vertices_[i]) < -eps * edge.norm()) return false;
  }
  return true;
}

Trapezoid Trapezoid::reflected(const Point2& a, const Point2& b) const {
  std::array<Point2, 4> r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = reflect(vertices_[i], a, b);
  // Reflection flips orientation; r1 -> r0 is the long base counterclockwise.
  return Trapezoid({r[1], r[0], r[3], r[2]});
}

Point2 reflect(const Point2& p, const Point2& a, const Point2& b) {
  const Point2 dir = (b - a).normalized();
  const Point2 rel = p - a;
  return a + 2 * rel.dot(dir) * dir - rel;
}

Trapezoid canonical_trapezoid() {
  const double h = kSqrt3 / 2;
  return Trapezoid({Point2(0, 0), Point2(2, 0), Point2(1.5, h), Point2(0.5, h)});
}

Arrangement make_arrangement(CaseId id) {
  const Trapezoid base = canonical_trapezoid();
  const auto& v = base.vertices();
  switch (id) {
    case CaseId::AB:
      return {id, base, base, 2.0};
    case CaseId::CD:
      return {id, base, base.reflected(v[0], v[1]), 2.0};
    case CaseId::EF:
      return {id, base, base.reflected(v[1], v[2]), 2 * kSqrt3};
    case CaseId::GH:
      return {id, base, base.reflected(v[2], v[3]), std::sqrt(7.0)};
  }
  throw std::invalid_argument("unknown case");
}

double max_cross_distance(const Arrangement& a) {
  double best = 0;
  for (const auto& p : a.source.vertices()) {
    for (const auto& q : a.target.vertices()) best = std::max(best, (p - q).norm());
  }
  return best;
}

double union_diameter(const Arrangement& a) {
  std::array<Point2, 8> all;
  std::copy(a.source.vertices().begin(), a.source.vertices().end(), all.begin());
  std::copy(a.target.vertices().begin(), a.target.vertices().end(), all.begin() + 4);
  double best = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) best = std::max(best, (all[i] - all[j]).norm());
  }
  return best;
}

Point2 sample_triangle(const Triangle& tri, RandomStream& rng) {
  double u = rng.uniform();
  double v = rng.uniform();
  if (u + v > 1) {
    u = 1 - u;
    v = 1 - v;
  }
  return tri[0] + u * (tri[1] - tri[0]) + v * (tri[2] - tri[0]);
}

Point2 sample_point(const Trapezoid& t, RandomStream& rng) {
  const auto tris = t.triangles();
  return sample_triangle(tris[rng.below(3)], rng);
}

std::pair<Point2, Point2> sample_pair(const Arrangement& a, RandomStream& rng) {
  Point2 p = sample_point(a.source, rng);
  Point2 q = sample_point(a.target, rng);
  return {p, q};
}

}  // namespace trapdist
