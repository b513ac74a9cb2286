#ifndef TRAPDIST_GEOM_HPP
#define TRAPDIST_GEOM_HPP

#include <array>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

#include "trapdist/random.hpp"

namespace trapdist {

using Point2 = Eigen::Vector2d;

// The four point-pair configurations:
//   AB - both points in one trapezoid
//   CD - neighbors sharing the long base (union is a regular unit hexagon)
//   EF - neighbors sharing a leg
//   GH - neighbors sharing the short base (union is a concave hexagon)
enum class CaseId { AB, CD, EF, GH };

inline constexpr std::array<CaseId, 4> kAllCases = {CaseId::AB, CaseId::CD,
                                                     CaseId::EF, CaseId::GH};

std::string_view to_string(CaseId id);

// Lower-case name ("ab", ...) as used on the command line and in CSV output.
std::string_view lower_name(CaseId id);

// Accepts "ab"/"AB" etc. Throws std::invalid_argument otherwise.
CaseId parse_case(std::string_view name);

using Triangle = std::array<Point2, 3>;

/// Isosceles trapezoid with long base 2, legs and short base 1 and base
/// angles pi/3, possibly placed by a rigid motion.
///
/// Vertices are stored counterclockwise starting at the long base:
/// v0 -> v1 is the long base, v1 -> v2 a leg, v2 -> v3 the short base and
/// v3 -> v0 the other leg. The constructor rejects anything else.
class Trapezoid {
 public:
  static constexpr double kTolerance = 1e-12;

  explicit Trapezoid(const std::array<Point2, 4>& vertices);

  const std::array<Point2, 4>& vertices() const { return vertices_; }
  const Point2& vertex(std::size_t i) const { return vertices_[i]; }

  double area() const;
  std::array<double, 4> side_lengths() const;
  // Interior angles at v0 and v1.
  std::array<double, 2> base_angles() const;

  // The three unit equilateral triangles that tile the trapezoid.
  std::array<Triangle, 3> triangles() const;

  // Inclusive containment with absolute slack `eps`.
  bool contains(const Point2& p, double eps = 1e-12) const;

  // Mirror image across the line through a and b, re-ordered so that the
  // vertex invariants hold again.
  Trapezoid reflected(const Point2& a, const Point2& b) const;

 private:
  std::array<Point2, 4> vertices_;
};

// Vertices (0,0), (2,0), (3/2, sqrt3/2), (1/2, sqrt3/2).
Trapezoid canonical_trapezoid();

struct Arrangement {
  CaseId case_id;
  Trapezoid source;
  Trapezoid target;
  double d_max;
};

Arrangement make_arrangement(CaseId id);

// Largest distance between a vertex of `source` and a vertex of `target`.
// For convex pieces this is the supremum of |p - q| over p in source and
// q in target.
double max_cross_distance(const Arrangement& a);

// Largest vertex-to-vertex distance over source and target combined.
double union_diameter(const Arrangement& a);

Point2 reflect(const Point2& p, const Point2& a, const Point2& b);

// Uniform point in a triangle via the folded two-variate method.
Point2 sample_triangle(const Triangle& tri, RandomStream& rng);

// Uniform point in the trapezoid: pick one of the three equal-area
// triangles, then sample inside it.
Point2 sample_point(const Trapezoid& t, RandomStream& rng);

// Independent uniform points in a.source and a.target.
std::pair<Point2, Point2> sample_pair(const Arrangement& a, RandomStream& rng);

}  // namespace trapdist

#endif  // TRAPDIST_GEOM_HPP
