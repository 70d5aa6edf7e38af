#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentaca/coords.hpp"
#include "pentaca/rules.hpp"

namespace pentaca {

struct Configuration {
  std::set<TileCoord> black;
  bool is_black(TileCoord c) const { return black.count(c) > 0; }
  State state(TileCoord c) const { return is_black(c) ? State::B : State::W; }
  bool operator==(const Configuration&) const = default;
};

// side-1 shift per cell; missing cells use the canonical orientation
using OrientationMap = std::map<TileCoord, int>;

struct StepTrace {
  int step = 0;
  std::map<TileCoord, int> applied;
  bool operator==(const StepTrace&) const = default;
};

class NoRuleError : public std::runtime_error {
 public:
  NoRuleError(TileCoord c, State s, const NeighborWord& w, int step);
  TileCoord cell;
  State state;
  NeighborWord word;
  int step;
};

class BoundaryError : public std::runtime_error {
 public:
  BoundaryError(TileCoord c, int step);
  TileCoord cell;
  int step;
};

class InferenceError : public std::runtime_error {
 public:
  enum class Kind { NoFit, Ambiguous };
  InferenceError(Kind k, TileCoord c, const std::string& what) : std::runtime_error(what), kind(k), cell(c) {}
  Kind kind;
  TileCoord cell;
};

NeighborWord neighborhood_word(const Grid& grid, TileCoord c, const Configuration& cfg, const OrientationMap& om);

enum class ScanMode { Sparse, Full };

// Synchronous update. Only active cells are evaluated; every other cell keeps
// its state. By default every interior cell of the grid is active.
class Engine {
 public:
  Engine(const Grid& grid, const RuleTable& rules, const OrientationMap& orientations = {},
         const std::optional<std::vector<TileCoord>>& active = std::nullopt);

  std::pair<Configuration, StepTrace> step(const Configuration& cfg, const std::vector<TileCoord>& tracked,
                                           int step_index = 0, ScanMode mode = ScanMode::Sparse) const;

  // Applies `steps` updates starting at step index first_step. When frames is
  // given it receives the configuration before every update and the final one.
  std::vector<StepTrace> run(const Configuration& initial, int steps, const std::vector<TileCoord>& tracked,
                             int first_step = 0, ScanMode mode = ScanMode::Sparse,
                             std::vector<Configuration>* frames = nullptr) const;

  const Grid& grid() const { return grid_; }
  int shift(TileCoord c) const { return shift_[grid_.id(c)]; }
  bool active(TileCoord c) const { return active_[grid_.id(c)]; }

 private:
  using Dense = std::vector<std::uint8_t>;
  Dense to_dense(const Configuration& cfg) const;
  Configuration from_dense(const Dense& d) const;
  void check_margin(const Dense& d, int step) const;
  void advance(const Dense& cur, Dense& next, const std::vector<int>& tracked, StepTrace& trace, int step,
               ScanMode mode) const;

  const Grid& grid_;
  RuleTable rules_;
  std::vector<std::uint8_t> shift_;
  std::vector<bool> active_;
  std::vector<int> active_ids_;
  std::vector<std::array<int, 10>> local_;
  mutable std::vector<int> stamp_;
  mutable int stamp_value_ = 0;
};

struct OrientationSkeleton {
  Configuration initial;
  std::vector<TileCoord> tracked;
  // expected rule id per tracked cell, first entry is step 0
  std::map<TileCoord, std::vector<int>> expected;
  std::optional<std::vector<TileCoord>> active;
  // orientations of untracked cells, kept as given
  OrientationMap fixed;
};

OrientationMap infer_orientations(const Grid& grid, const OrientationSkeleton& sk, const RuleTable& rules);

std::string trace_tsv(const std::vector<StepTrace>& traces, const RuleTable& rules);

} // namespace pentaca
