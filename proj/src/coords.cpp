#include "pentaca/coords.hpp"

#include <charconv>
#include <set>

namespace pentaca {

TileCoord parse_coord(std::string_view text) {
  auto bad = [&] { return CoordError("bad coordinate '" + std::string(text) + "'"); };
  auto open = text.find('(');
  if (open == std::string_view::npos || text.size() < open + 3 || text.back() != ')') throw bad();
  int nu = 0, sigma = 0;
  auto r1 = std::from_chars(text.data(), text.data() + open, nu);
  auto r2 = std::from_chars(text.data() + open + 1, text.data() + text.size() - 1, sigma);
  if (r1.ec != std::errc() || r1.ptr != text.data() + open) throw bad();
  if (r2.ec != std::errc() || r2.ptr != text.data() + text.size() - 1) throw bad();
  if (sigma == 0 && nu == 0) return kCenter;
  if (sigma < 1 || sigma > 5 || nu < 1) throw bad();
  return {sigma, nu};
}

std::string to_string(TileCoord c) {
  return std::to_string(c.index) + "(" + std::to_string(c.sector) + ")";
}

std::vector<long long> tree_level_sizes(int n) {
  if (n < 0) throw std::invalid_argument("negative level count");
  std::vector<long long> out;
  long long white = 1, black = 0;
  for (int l = 0; l <= n; ++l) {
    out.push_back(white + black);
    long long nw = 2 * white + black;
    long long nb = white + black;
    white = nw;
    black = nb;
  }
  return out;
}

NeighborMap reorient(const NeighborMap& nm, int shift) {
  shift = ((shift % 5) + 5) % 5;
  NeighborMap out;
  for (int k = 0; k < 10; ++k) out[k] = nm[local_to_canonical(k, shift)];
  return out;
}

Grid::Grid(int depth) : depth_(depth) {
  if (depth < 0) throw std::invalid_argument("negative grid depth");
  // one sector tree, nodes 1..per_sector_ in breadth-first order
  kind_ = {NodeKind::White, NodeKind::White};
  father_ = {0, 0};
  level_ = {-1, 0};
  level_start_ = {1};
  std::vector<int> frontier = {1};
  for (int l = 0; l < depth; ++l) {
    std::vector<int> next;
    level_start_.push_back(static_cast<int>(kind_.size()));
    for (int v : frontier) {
      auto add = [&](NodeKind k) {
        kind_.push_back(k);
        father_.push_back(v);
        level_.push_back(l + 1);
        next.push_back(static_cast<int>(kind_.size()) - 1);
      };
      add(NodeKind::Black);
      add(NodeKind::White);
      if (kind_[v] == NodeKind::White) add(NodeKind::White);
    }
    frontier = std::move(next);
  }
  level_start_.push_back(static_cast<int>(kind_.size()));
  per_sector_ = static_cast<int>(kind_.size()) - 1;
  first_child_.assign(kind_.size(), 0);
  for (int v = static_cast<int>(kind_.size()) - 1; v >= 2; --v) first_child_[father_[v]] = v;

  int n = size();
  nbr_.assign(n, {});
  interior_.assign(n, false);
  std::vector<std::array<int, 5>> sides(n);
  for (int id = 0; id < n; ++id) sides[id] = side_ids(id);
  for (int id = 0; id < n; ++id) {
    auto& out = nbr_[id];
    for (int k = 0; k < 5; ++k) out[k] = sides[id][k];
    for (int j = 0; j < 5; ++j) {
      int a = sides[id][(j + 4) % 5], b = sides[id][j];
      int found = -1;
      if (a >= 0 && b >= 0)
        for (int x : sides[a])
          if (x >= 0 && x != id)
            for (int y : sides[b])
              if (x == y) found = x;
      out[5 + j] = found;
    }
    bool all = true;
    for (int x : out) all = all && x >= 0;
    interior_[id] = all;
  }
}

bool Grid::contains(TileCoord c) const {
  if (c == kCenter) return true;
  return c.sector >= 1 && c.sector <= 5 && c.index >= 1 && c.index <= per_sector_;
}

int Grid::id(TileCoord c) const {
  if (!contains(c)) throw CoordError("coordinate " + to_string(c) + " outside grid of depth " + std::to_string(depth_));
  return c == kCenter ? 0 : node_id(c.sector, c.index);
}

TileCoord Grid::coord(int id) const {
  if (id < 0 || id >= size()) throw CoordError("tile id out of range");
  if (id == 0) return kCenter;
  return {(id - 1) / per_sector_ + 1, (id - 1) % per_sector_ + 1};
}

int Grid::level(TileCoord c) const {
  if (c == kCenter) return -1;
  id(c);
  return level_[c.index];
}

NodeKind Grid::kind(TileCoord c) const {
  if (c == kCenter) return NodeKind::White;
  id(c);
  return kind_[c.index];
}

std::optional<TileCoord> Grid::father(TileCoord c) const {
  if (c == kCenter) return std::nullopt;
  id(c);
  if (c.index == 1) return kCenter;
  return TileCoord{c.sector, father_[c.index]};
}

NeighborMap Grid::neighbors(TileCoord c) const {
  NeighborMap out;
  auto& ids = nbr_[id(c)];
  for (int k = 0; k < 10; ++k)
    if (ids[k] >= 0) out[k] = coord(ids[k]);
  return out;
}

int Grid::prev_id(int id) const {
  TileCoord c = coord(id);
  int l = level_[c.index];
  if (c.index > level_start_[l]) return node_id(c.sector, c.index - 1);
  return node_id(c.sector == 1 ? 5 : c.sector - 1, level_start_[l + 1] - 1);
}

int Grid::next_id(int id) const {
  TileCoord c = coord(id);
  int l = level_[c.index];
  if (c.index + 1 < level_start_[l + 1]) return node_id(c.sector, c.index + 1);
  return node_id(c.sector == 5 ? 1 : c.sector + 1, level_start_[l]);
}

int Grid::first_child_id(int id) const {
  TileCoord c = coord(id);
  int fc = first_child_[c.index];
  return fc ? node_id(c.sector, fc) : -1;
}

std::array<int, 5> Grid::side_ids(int id) const {
  if (id == 0) return {node_id(1, 1), node_id(2, 1), node_id(3, 1), node_id(4, 1), node_id(5, 1)};
  TileCoord c = coord(id);
  int f = c.index == 1 ? 0 : node_id(c.sector, father_[c.index]);
  int fc = first_child_id(id);
  auto child = [&](int k) { return fc < 0 ? -1 : fc + k; };
  int last = first_child_id(next_id(id));
  if (kind_[c.index] == NodeKind::White) return {f, child(0), child(1), child(2), last};
  return {f, prev_id(f), child(0), child(1), last};
}

Correspondence build_correspondence(const Patch& patch, int depth) {
  Correspondence corr;
  corr.to_coord.assign(patch.tiles.size(), std::nullopt);
  Grid grid(depth);
  auto bind = [&](TileCoord c, int geo, int father_side) {
    if (corr.to_coord[geo]) throw CoordError("tile mapped twice: " + to_string(c) + " and " + to_string(*corr.to_coord[geo]));
    corr.to_geo[c] = geo;
    corr.to_coord[geo] = c;
    corr.father_side[c] = father_side;
  };
  bind(kCenter, 0, 0);
  std::vector<TileCoord> queue;
  const GeoTile& center = patch.tiles[0];
  for (int s = 1; s <= 5; ++s) {
    auto g = center.side_neighbors[s - 1];
    if (!g) {
      if (depth >= 0) throw CoordError("patch too small for sector heads");
      continue;
    }
    const GeoTile& t = patch.tiles[*g];
    int fs = -1;
    for (int k = 0; k < 5; ++k)
      if (t.side_neighbors[k] == 0) fs = k;
    bind({s, 1}, *g, fs);
    queue.push_back({s, 1});
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    TileCoord c = queue[qi];
    if (grid.level(c) >= depth) continue;
    const GeoTile& t = patch.tiles[corr.to_geo[c]];
    int fs = corr.father_side[c];
    auto nm = grid.neighbors(c);
    bool white = grid.kind(c) == NodeKind::White;
    for (int side = white ? 1 : 2; side <= 3; ++side) {
      TileCoord child = *nm[side];
      auto g = t.side_neighbors[(fs + side) % 5];
      if (!g) throw CoordError("patch too small for " + to_string(child));
      const GeoTile& ct = patch.tiles[*g];
      int cfs = -1;
      for (int k = 0; k < 5; ++k)
        if (ct.side_neighbors[k] == t.id) cfs = k;
      bind(child, *g, cfs);
      queue.push_back(child);
    }
  }
  return corr;
}

NeighborMap geometric_neighbors(TileCoord c, const Patch& patch, const Correspondence& corr) {
  auto it = corr.to_geo.find(c);
  if (it == corr.to_geo.end()) throw CoordError("unmapped coordinate " + to_string(c));
  const GeoTile& t = patch.tiles[it->second];
  int fs = corr.father_side.at(c);
  NeighborMap out;
  auto name = [&](std::optional<int> g) -> std::optional<TileCoord> {
    if (!g) return std::nullopt;
    return corr.to_coord[*g];
  };
  for (int j = 0; j < 5; ++j) out[j] = name(t.side_neighbors[(fs + j) % 5]);
  for (int j = 0; j < 5; ++j) out[5 + j] = name(t.vertex_neighbors[(fs + j) % 5]);
  return out;
}

} // namespace pentaca
