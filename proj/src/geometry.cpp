#include "pentaca/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace pentaca {

namespace {

constexpr double kPi = std::numbers::pi;

double cross(DiskPoint a, DiskPoint b) { return a.real() * b.imag() - a.imag() * b.real(); }

// Center of the circle orthogonal to the unit circle through a and b.
// Empty when a, b and the origin are collinear (the geodesic is a diameter).
std::optional<DiskPoint> orthogonal_center(DiskPoint a, DiskPoint b) {
  double det = cross(a, b);
  if (std::abs(det) < 1e-14) return std::nullopt;
  double ra = (std::norm(a) + 1.0) / 2.0;
  double rb = (std::norm(b) + 1.0) / 2.0;
  double cx = (ra * b.imag() - rb * a.imag()) / det;
  double cy = (a.real() * rb - b.real() * ra) / det;
  return DiskPoint(cx, cy);
}

DiskPoint mobius_to_origin(DiskPoint z, DiskPoint v) { return (z - v) / (1.0 - std::conj(v) * z); }

double angle_for_radius(double r) {
  GeoTile t;
  for (int k = 0; k < 5; ++k) t.vertices[k] = std::polar(r, kPi / 2 + 2 * kPi * k / 5);
  return interior_angle(t, 0);
}

struct BucketKey {
  long long x, y;
  bool operator==(const BucketKey&) const = default;
};

struct BucketHash {
  size_t operator()(const BucketKey& k) const {
    return std::hash<long long>()(k.x * 1000003LL) ^ std::hash<long long>()(k.y);
  }
};

class PointIndex {
 public:
  explicit PointIndex(double cell) : cell_(cell) {}

  void insert(DiskPoint p, int tag) { map_[key(p)].push_back({p, tag}); }

  template <class F>
  void near(DiskPoint p, double tol, F&& f) const {
    BucketKey k = key(p);
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = map_.find({k.x + dx, k.y + dy});
        if (it == map_.end()) continue;
        for (auto& [q, tag] : it->second)
          if (std::abs(q - p) < tol) f(tag);
      }
  }

 private:
  BucketKey key(DiskPoint p) const {
    return {std::llround(p.real() / cell_), std::llround(p.imag() / cell_)};
  }
  double cell_;
  std::unordered_map<BucketKey, std::vector<std::pair<DiskPoint, int>>, BucketHash> map_;
};

} // namespace

double interior_angle(const GeoTile& t, int k) {
  DiskPoint v = t.vertices[k];
  DiskPoint n = mobius_to_origin(t.vertices[(k + 1) % 5], v);
  DiskPoint p = mobius_to_origin(t.vertices[(k + 4) % 5], v);
  return std::abs(std::arg(n / p));
}

double circumradius() {
  double lo = 0.0, hi = 0.99;
  // angle decreases from 108 degrees towards 0 as the pentagon grows
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    double mid = (lo + hi) / 2;
    if (angle_for_radius(mid) > kPi / 2) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / 2;
}

double circumradius_closed_form() {
  double cosh_r = 1.0 / std::tan(kPi / 5);
  return std::tanh(std::acosh(cosh_r) / 2);
}

GeoTile central_pentagon() {
  static const double r = circumradius();
  GeoTile t;
  t.id = 0;
  t.center = 0.0;
  for (int k = 0; k < 5; ++k) t.vertices[k] = std::polar(r, kPi / 2 + 2 * kPi * k / 5);
  return t;
}

DiskPoint reflect_point(DiskPoint p, DiskPoint a, DiskPoint b) {
  if (auto c = orthogonal_center(a, b)) {
    double rho2 = std::norm(*c) - 1.0;
    return *c + rho2 / std::conj(p - *c);
  }
  DiskPoint u = std::abs(a) > std::abs(b) ? a : b;
  u /= std::abs(u);
  return u * u * std::conj(p);
}

GeoTile reflect(const GeoTile& t, int side_index) {
  if (side_index < 1 || side_index > 5) throw std::invalid_argument("side index must be in 1..5");
  int i = side_index - 1;
  DiskPoint a = t.vertices[i], b = t.vertices[(i + 1) % 5];
  GeoTile r;
  r.id = t.id;
  r.center = reflect_point(t.center, a, b);
  // reversed to stay counter-clockwise; side i keeps its index
  for (int k = 0; k < 5; ++k) r.vertices[k] = reflect_point(t.vertices[((2 * i + 1 - k) % 5 + 5) % 5], a, b);
  r.vertices[i] = b;
  r.vertices[(i + 1) % 5] = a;
  return r;
}

Patch build_patch(int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  if (radius > kMaxRadius) throw std::invalid_argument("radius above " + std::to_string(kMaxRadius));
  Patch p;
  p.radius = radius;
  PointIndex centers(1e-5);
  p.tiles.push_back(central_pentagon());
  p.generation.push_back(0);
  centers.insert(0.0, 0);
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int cur = q.front();
    q.pop();
    if (p.generation[cur] >= radius) continue;
    for (int s = 1; s <= 5; ++s) {
      GeoTile r = reflect(p.tiles[cur], s);
      int found = -1;
      centers.near(r.center, kDedupTolerance, [&](int tag) { found = tag; });
      if (found >= 0) {
        const GeoTile& o = p.tiles[found];
        for (auto& v : r.vertices) {
          bool hit = false;
          for (auto& w : o.vertices) hit = hit || std::abs(v - w) < kVertexTolerance * 100;
          if (!hit) throw GeometryError("tiles with coinciding centers differ (numerical breakdown)");
        }
        continue;
      }
      r.id = static_cast<int>(p.tiles.size());
      centers.insert(r.center, r.id);
      p.tiles.push_back(r);
      p.generation.push_back(p.generation[cur] + 1);
      q.push(r.id);
    }
  }

  PointIndex verts(1e-6);
  for (auto& t : p.tiles)
    for (int k = 0; k < 5; ++k) verts.insert(t.vertices[k], t.id * 5 + k);
  for (auto& t : p.tiles) {
    std::unordered_map<int, std::vector<int>> shared;
    for (int k = 0; k < 5; ++k)
      verts.near(t.vertices[k], kVertexTolerance, [&](int tag) {
        if (tag / 5 != t.id) shared[tag / 5].push_back(k);
      });
    for (auto& [other, ks] : shared) {
      if (ks.size() == 1) {
        t.vertex_neighbors[ks[0]] = other;
      } else if (ks.size() == 2) {
        int a = ks[0], b = ks[1];
        int side = ((b - a + 5) % 5 == 1) ? a : b;
        t.side_neighbors[side] = other;
      } else {
        throw GeometryError("tiles share more than two vertices");
      }
    }
  }
  return p;
}

std::vector<DiskPoint> geodesic_points(DiskPoint a, DiskPoint b, int segments) {
  std::vector<DiskPoint> out;
  out.reserve(segments + 1);
  auto c = orthogonal_center(a, b);
  if (!c) {
    for (int i = 0; i <= segments; ++i) out.push_back(a + (b - a) * (double(i) / segments));
    return out;
  }
  double rho = std::abs(a - *c);
  double alpha = std::arg(a - *c);
  double delta = std::remainder(std::arg(b - *c) - alpha, 2 * kPi);
  for (int i = 0; i <= segments; ++i) out.push_back(*c + std::polar(rho, alpha + delta * i / segments));
  out.front() = a;
  out.back() = b;
  return out;
}

double hyperbolic_distance(DiskPoint a, DiskPoint b) {
  return 2.0 * std::atanh(std::abs(a - b) / std::abs(1.0 - std::conj(a) * b));
}

std::string dump_patch(const Patch& p) {
  std::ostringstream os;
  char buf[64];
  for (auto& t : p.tiles) {
    os << t.id;
    std::snprintf(buf, sizeof buf, " %.12f %.12f", t.center.real(), t.center.imag());
    os << buf;
    for (auto& v : t.vertices) {
      std::snprintf(buf, sizeof buf, " %.12f %.12f", v.real(), v.imag());
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

} // namespace pentaca
