#include "om/realization.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace om {

Sign sign_of(const Rat& r) {
  if (r > 0) return +1;
  if (r < 0) return -1;
  return 0;
}

Rat det4_homog(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  // det [[b-a],[c-a],[d-a]] times the homogeneous orientation convention:
  // det of rows (p,1) equals -det3 of the differences.
  Rat m00 = b.x - a.x, m01 = b.y - a.y, m02 = b.z - a.z;
  Rat m10 = c.x - a.x, m11 = c.y - a.y, m12 = c.z - a.z;
  Rat m20 = d.x - a.x, m21 = d.y - a.y, m22 = d.z - a.z;
  Rat det3 = m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) +
             m02 * (m10 * m21 - m11 * m20);
  return -det3;
}

Chirotope chirotope_from_points(const PointConfig& p) {
  const int n = p.n();
  if (n < 4) throw InvalidInput("chirotope_from_points: n >= 4 required");
  std::vector<Sign> vals;
  vals.reserve(binom(n, 4));
  for (const auto& t : sorted_tuples(n, 4)) {
    Rat d = det4_homog(p.points[static_cast<size_t>(t[0] - 1)], p.points[static_cast<size_t>(t[1] - 1)],
                       p.points[static_cast<size_t>(t[2] - 1)], p.points[static_cast<size_t>(t[3] - 1)]);
    Sign s = sign_of(d);
    if (s == 0) {
      std::ostringstream os;
      os << "general-position violation: coplanar quadruple (" << t[0] << "," << t[1] << "," << t[2]
         << "," << t[3] << ")";
      throw InvalidInput(os.str());
    }
    vals.push_back(s);
  }
  return Chirotope(n, 4, std::move(vals));
}

namespace {

// point on the unit sphere from rational stereographic parameters
Vec3 sphere_point(const Rat& u, const Rat& v) {
  Rat s = u * u + v * v;
  Rat den = s + 1;
  return Vec3{2 * u / den, 2 * v / den, (s - 1) / den};
}

bool general_position_with(const PointConfig& p, const Vec3& cand) {
  const int n = p.n();
  for (int i = 0; i < n; ++i)
    if (p.points[static_cast<size_t>(i)].x == cand.x && p.points[static_cast<size_t>(i)].y == cand.y &&
        p.points[static_cast<size_t>(i)].z == cand.z)
      return false;
  if (n < 3) return true;
  for (const auto& t : sorted_tuples(n, 3)) {
    Rat d = det4_homog(p.points[static_cast<size_t>(t[0] - 1)], p.points[static_cast<size_t>(t[1] - 1)],
                       p.points[static_cast<size_t>(t[2] - 1)], cand);
    if (d == 0) return false;
  }
  return true;
}

}  // namespace

PointConfig random_realizable(int n, std::uint64_t seed, SampleMode mode) {
  if (n < 4) throw InvalidInput("random_realizable: n >= 4 required");
  std::mt19937_64 rng(seed);
  auto draw = [&rng]() {
    // numerator in [-128, 128], denominator 64
    int a = static_cast<int>(rng() % 257) - 128;
    return Rat(a, 64);
  };
  const int on_sphere = (mode == SampleMode::Interior) ? n - 1 : n;
  const int max_tries = 400;
  for (int attempt = 0; attempt < 64; ++attempt) {
    PointConfig p;
    bool ok = true;
    for (int i = 0; i < on_sphere && ok; ++i) {
      bool placed = false;
      for (int t = 0; t < max_tries; ++t) {
        Vec3 cand = sphere_point(draw(), draw());
        if (general_position_with(p, cand)) {
          p.points.push_back(cand);
          placed = true;
          break;
        }
      }
      if (!placed) ok = false;
    }
    if (!ok) continue;
    if (mode == SampleMode::Interior) {
      const auto& a = p.points[0];
      const auto& b = p.points[1];
      const auto& c = p.points[2];
      const auto& d = p.points[3];
      Vec3 centroid{(a.x + b.x + c.x + d.x) / 4, (a.y + b.y + c.y + d.y) / 4,
                    (a.z + b.z + c.z + d.z) / 4};
      if (!general_position_with(p, centroid)) continue;
      p.points.push_back(centroid);
    }
    return p;
  }
  throw LimitExceeded("random_realizable: retry limit exceeded");
}

PointConfig cyclic_points(int n) {
  if (n < 4) throw InvalidInput("cyclic_points: n >= 4 required");
  PointConfig p;
  for (int e = 1; e <= n; ++e) {
    Rat t(e);
    p.points.push_back(Vec3{t, t * t, t * t * t});
  }
  return p;
}

namespace {

Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
Vec3 sub(const Vec3& a, const Vec3& b) { return Vec3{a.x - b.x, a.y - b.y, a.z - b.z}; }

bool off_all_planes(const PointConfig& p, const Vec3& c) {
  for (const auto& t : sorted_tuples(p.n(), 3)) {
    Rat d = det4_homog(p.points[static_cast<size_t>(t[0] - 1)], p.points[static_cast<size_t>(t[1] - 1)],
                       p.points[static_cast<size_t>(t[2] - 1)], c);
    if (d == 0) return false;
  }
  return true;
}

// sphere through four points: |p|^2 + D x + E y + F z + G = 0
struct SphereEq {
  Rat d, e, f, g;
  Rat eval(const Vec3& p) const {
    return dot(p, p) + d * p.x + e * p.y + f * p.z + g;
  }
};

std::optional<SphereEq> sphere_through(const Vec3& p0, const Vec3& p1, const Vec3& p2, const Vec3& p3) {
  // solve the 4x4 linear system by Gaussian elimination over Rat
  Rat m[4][5];
  const Vec3* ps[4] = {&p0, &p1, &p2, &p3};
  for (int i = 0; i < 4; ++i) {
    m[i][0] = ps[i]->x;
    m[i][1] = ps[i]->y;
    m[i][2] = ps[i]->z;
    m[i][3] = 1;
    m[i][4] = -dot(*ps[i], *ps[i]);
  }
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int k = 0; k < 5; ++k) std::swap(m[piv][k], m[col][k]);
    for (int r = 0; r < 4; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (int k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
    }
  }
  SphereEq s;
  s.d = m[0][4] / m[0][0];
  s.e = m[1][4] / m[1][1];
  s.f = m[2][4] / m[2][2];
  s.g = m[3][4] / m[3][3];
  return s;
}

std::optional<Rat> rational_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return Rat(0);
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rat(sn, sd);
}

// deterministic small integer directions, no zero vector
std::vector<Vec3> candidate_directions() {
  std::vector<Vec3> out;
  for (int range = 1; range <= 3; ++range)
    for (int x = -range; x <= range; ++x)
      for (int y = -range; y <= range; ++y)
        for (int z = -range; z <= range; ++z) {
          if (x == 0 && y == 0 && z == 0) continue;
          if (std::max({std::abs(x), std::abs(y), std::abs(z)}) != range) continue;
          out.push_back(Vec3{Rat(x), Rat(y), Rat(z)});
        }
  return out;
}

}  // namespace

CirclePicture circle_picture(const PointConfig& p) {
  CirclePicture pic;
  pic.chirotope = chirotope_from_points(p);  // throws on degeneracy
  const int n = p.n();

  // cosphericality: the sphere through the first four points, if all lie on it
  std::optional<SphereEq> sphere;
  if (auto s = sphere_through(p.points[0], p.points[1], p.points[2], p.points[3])) {
    bool all = true;
    for (const auto& q : p.points)
      if (s->eval(q) != 0) all = false;
    if (all) sphere = s;
  }

  std::optional<Vec3> center;
  if (sphere) {
    // rational point on the sphere along a candidate ray from its midpoint
    Vec3 mid{-sphere->d / 2, -sphere->e / 2, -sphere->f / 2};
    Rat r2 = dot(mid, mid) - sphere->g;
    for (const auto& dir : candidate_directions()) {
      Rat dd = dot(dir, dir);
      auto t = rational_sqrt(r2 / dd);
      if (!t) continue;
      Vec3 cand{mid.x + *t * dir.x, mid.y + *t * dir.y, mid.z + *t * dir.z};
      if (off_all_planes(p, cand)) {
        center = cand;
        pic.faithful = true;
        break;
      }
    }
  }
  if (!center) {
    // exact center outside the bounding sphere (display-only drawing)
    Rat max2(0);
    for (const auto& q : p.points) max2 = std::max(max2, dot(q, q));
    for (const auto& dir : candidate_directions()) {
      Rat dd = dot(dir, dir);
      // scale m with m^2 * dd > max2
      BigInt m(2);
      while (Rat(m * m) * dd <= max2 * 4) m *= 2;
      Vec3 cand{Rat(m) * dir.x, Rat(m) * dir.y, Rat(m) * dir.z};
      if (off_all_planes(p, cand)) {
        center = cand;
        break;
      }
    }
  }
  if (!center) throw SearchFailure("circle_picture: no valid projection center within candidate budget");

  const Vec3 c = *center;
  {
    std::ostringstream os;
    os << "(" << c.x << ", " << c.y << ", " << c.z << ")";
    pic.center = os.str();
  }

  // Projection plane: perpendicular to the diameter through c (faithful,
  // stereographic) or to c itself (display branch), with a rational 2D basis.
  Vec3 plane_origin{Rat(0), Rat(0), Rat(0)};
  Vec3 axis_dir = c;
  if (pic.faithful) {
    Vec3 mid{-sphere->d / 2, -sphere->e / 2, -sphere->f / 2};
    plane_origin = mid;
    axis_dir = sub(c, mid);
  }
  Vec3 up = (axis_dir.x == 0 && axis_dir.y == 0) ? Vec3{Rat(1), Rat(0), Rat(0)}
                                                 : Vec3{Rat(0), Rat(0), Rat(1)};
  Vec3 b1 = cross(axis_dir, up);
  Vec3 b2 = cross(axis_dir, b1);
  if (pic.faithful) {
    // similarity coords need |b2| = |b1|; |a x b1| = |a||b1| since a _|_ b1
    auto alen = rational_sqrt(dot(axis_dir, axis_dir));
    if (alen)
      b2 = Vec3{b2.x / *alen, b2.y / *alen, b2.z / *alen};
    else
      pic.faithful = false;  // |axis| irrational: keep display-only skewed coords
  }

  Rat t_num = dot(sub(plane_origin, c), axis_dir);
  for (const auto& q : p.points) {
    Rat denom = dot(sub(q, c), axis_dir);
    if (denom == 0) throw Error("circle_picture: point projects to infinity");
    Rat t = t_num / denom;
    if (t <= 0) throw Error("circle_picture: point not in the projection range");
    Vec3 f{c.x + t * (q.x - c.x), c.y + t * (q.y - c.y), c.z + t * (q.z - c.z)};
    Vec3 rel = sub(f, plane_origin);
    pic.exact_positions.emplace_back(dot(rel, b1), dot(rel, b2));
  }
  for (const auto& [u, v] : pic.exact_positions)
    pic.positions.emplace_back(static_cast<double>(u), static_cast<double>(v));

  for (const auto& t : sorted_tuples(n, 3)) {
    CircleRecord rec;
    rec.triple = t;
    const auto& [ax, ay] = pic.exact_positions[static_cast<size_t>(t[0] - 1)];
    const auto& [bx, by] = pic.exact_positions[static_cast<size_t>(t[1] - 1)];
    const auto& [cx2, cy2] = pic.exact_positions[static_cast<size_t>(t[2] - 1)];
    Rat orient = (bx - ax) * (cy2 - ay) - (by - ay) * (cx2 - ax);
    rec.orientation = sign_of(orient);
    if (orient == 0) {
      rec.is_line = true;
      rec.lx0 = static_cast<double>(ax);
      rec.ly0 = static_cast<double>(ay);
      rec.lx1 = static_cast<double>(cx2);
      rec.ly1 = static_cast<double>(cy2);
    } else {
      // exact circumcenter, then display precision
      Rat a2 = ax * ax + ay * ay, b2c = bx * bx + by * by, c2c = cx2 * cx2 + cy2 * cy2;
      Rat dpt = 2 * (ax * (by - cy2) + bx * (cy2 - ay) + cx2 * (ay - by));
      Rat ux = (a2 * (by - cy2) + b2c * (cy2 - ay) + c2c * (ay - by)) / dpt;
      Rat uy = (a2 * (cx2 - bx) + b2c * (ax - cx2) + c2c * (bx - ax)) / dpt;
      rec.cx = static_cast<double>(ux);
      rec.cy = static_cast<double>(uy);
      double dx = static_cast<double>(ax) - rec.cx, dy = static_cast<double>(ay) - rec.cy;
      rec.r = std::sqrt(dx * dx + dy * dy);
    }
    pic.circles.push_back(std::move(rec));
  }
  return pic;
}

}  // namespace om
