#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "om/cocircuits.hpp"

namespace om {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct Vec3 {
  Rat x, y, z;
};

// Rational point configuration; homogenized to (x,y,z,1) for orientation
// tests. General position: no 4x4 homogeneous determinant vanishes.
struct PointConfig {
  std::vector<Vec3> points;  // element e at points[e-1]
  int n() const { return static_cast<int>(points.size()); }
};

Rat det4_homog(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);
Sign sign_of(const Rat& r);

// chi(i,j,k,l) = sign of the orientation determinant, exact arithmetic.
// Throws InvalidInput with the witness tuple on a zero determinant.
Chirotope chirotope_from_points(const PointConfig& p);

enum class SampleMode { Convex, Interior };

// Deterministic for a fixed seed. Convex mode: rational points exactly on the
// unit sphere (stereographic parametrization), hence a matroid polytope;
// interior mode: last point is the centroid of the first four.
PointConfig random_realizable(int n, std::uint64_t seed, SampleMode mode = SampleMode::Convex);

// Moment curve t_e = e, points (t, t^2, t^3).
PointConfig cyclic_points(int n);

struct CircleRecord {
  std::vector<int> triple;
  bool is_line = false;        // projected points exactly collinear
  double cx = 0, cy = 0, r = 0;
  double lx0 = 0, ly0 = 0, lx1 = 0, ly1 = 0;  // line record endpoints
  int orientation = 0;         // exact 2D orientation of the projected triple
};

struct CirclePicture {
  std::vector<std::pair<double, double>> positions;      // display coords per element
  std::vector<std::pair<Rat, Rat>> exact_positions;      // exact projected coords
  std::vector<CircleRecord> circles;                     // one per sorted triple
  Chirotope chirotope;                                   // exact, from P
  bool faithful = false;  // true when the drawing itself is combinatorially exact
  std::string center;     // projection center, for reproducibility
};

// The exact chirotope is computed from P; the drawing is display-precision.
// When the points are cospherical and a rational center on the sphere exists,
// the projection is stereographic from that center and the drawn side
// relations are exact ("faithful").
CirclePicture circle_picture(const PointConfig& p);

}  // namespace om
