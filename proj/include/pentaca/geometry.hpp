#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentaca {

using DiskPoint = std::complex<double>;

struct GeoTile {
  int id = 0;
  DiskPoint center;
  // counter-clockwise; side i joins vertices i and i+1
  std::array<DiskPoint, 5> vertices;
  std::array<std::optional<int>, 5> side_neighbors;
  // vertex_neighbors[i] touches this tile at vertices[i] only
  std::array<std::optional<int>, 5> vertex_neighbors;
};

struct Patch {
  std::vector<GeoTile> tiles;
  int radius = 0;
  std::vector<int> generation; // reflections needed to reach each tile
};

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDedupTolerance = 1e-6;
inline constexpr double kVertexTolerance = 1e-7;
inline constexpr int kMaxRadius = 8;

// Euclidean distance from the origin to the vertices of the right-angled
// regular pentagon, found by bisection on the vertex angle.
double circumradius();

// Closed form tanh(acosh(cot(pi/5))/2), kept only as a cross-check.
double circumradius_closed_form();

// Interior angle at vertex k (radians), measured between the two geodesic sides.
double interior_angle(const GeoTile& t, int k);

GeoTile central_pentagon();

// Mirror image of a point in the geodesic through a and b.
DiskPoint reflect_point(DiskPoint p, DiskPoint a, DiskPoint b);

// side_index is 1-based as in the cell numbering: side 1 is vertices[0]-vertices[1].
GeoTile reflect(const GeoTile& t, int side_index);

Patch build_patch(int radius);

// Points along the geodesic from a to b, both ends included, segments+1 points.
std::vector<DiskPoint> geodesic_points(DiskPoint a, DiskPoint b, int segments);

double hyperbolic_distance(DiskPoint a, DiskPoint b);

std::string dump_patch(const Patch& p);

} // namespace pentaca
