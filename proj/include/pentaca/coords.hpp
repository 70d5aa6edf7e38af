#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pentaca/geometry.hpp"

namespace pentaca {

// nu(sigma): tile nu of sector sigma; the central tile is 0(0).
struct TileCoord {
  int sector = 0;
  int index = 0;
  auto operator<=>(const TileCoord&) const = default;
};

inline constexpr TileCoord kCenter{0, 0};

class CoordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TileCoord parse_coord(std::string_view text);
std::string to_string(TileCoord c);

enum class NodeKind { Black, White };

// Level sizes 0..n of a sector tree rooted at a white node.
std::vector<long long> tree_level_sizes(int n);

// Positions 0..4 are sides 1..5, positions 5..9 are vertices 6..10.
using NeighborMap = std::array<std::optional<TileCoord>, 10>;

// Relabel so that canonical side shift+1 becomes local side 1.
NeighborMap reorient(const NeighborMap& nm, int shift);

// Index of a canonical position seen from a cell oriented by shift.
inline int local_to_canonical(int pos, int shift) {
  return pos < 5 ? (pos + shift) % 5 : 5 + (pos - 5 + shift) % 5;
}

// All tiles with tree level <= depth in every sector, plus the central tile.
class Grid {
 public:
  explicit Grid(int depth);

  int depth() const { return depth_; }
  int size() const { return 1 + 5 * per_sector_; }
  bool contains(TileCoord c) const;
  int id(TileCoord c) const;
  TileCoord coord(int id) const;

  // -1 for the central tile
  int level(TileCoord c) const;
  NodeKind kind(TileCoord c) const;
  std::optional<TileCoord> father(TileCoord c) const;

  // Canonical orientation: side 1 faces the father, counter-clockwise after it.
  NeighborMap neighbors(TileCoord c) const;
  const std::array<int, 10>& neighbor_ids(int id) const { return nbr_[id]; }
  // every one of the 10 neighbours lies inside the grid
  bool interior(int id) const { return interior_[id]; }

 private:
  int depth_;
  int per_sector_ = 0;
  std::vector<NodeKind> kind_;
  std::vector<int> father_;
  std::vector<int> first_child_;
  std::vector<int> level_;
  std::vector<int> level_start_;
  std::vector<std::array<int, 10>> nbr_;
  std::vector<bool> interior_;

  int node_id(int sector, int nu) const { return (sector - 1) * per_sector_ + nu; }
  int prev_id(int id) const;
  int next_id(int id) const;
  int first_child_id(int id) const;
  std::array<int, 5> side_ids(int id) const;
};

struct Correspondence {
  std::map<TileCoord, int> to_geo;
  std::vector<std::optional<TileCoord>> to_coord;
  // geometric side index (0..4) shared with the father, per mapped coordinate
  std::map<TileCoord, int> father_side;
};

// Walks the sector trees over the patch, children taken counter-clockwise
// from the side after the father side.
Correspondence build_correspondence(const Patch& patch, int depth);

NeighborMap geometric_neighbors(TileCoord c, const Patch& patch, const Correspondence& corr);

} // namespace pentaca
