#include "pentaca/engine.hpp"

#include <algorithm>

namespace pentaca {

NoRuleError::NoRuleError(TileCoord c, State s, const NeighborWord& w, int step_)
    : std::runtime_error("no rule for " + to_string(c) + " at step " + std::to_string(step_) + ": " + to_char(s) + " " +
                         to_string(w)),
      cell(c), state(s), word(w), step(step_) {}

BoundaryError::BoundaryError(TileCoord c, int step_)
    : std::runtime_error("black cell " + to_string(c) + " too close to the grid edge at step " + std::to_string(step_)),
      cell(c), step(step_) {}

NeighborWord neighborhood_word(const Grid& grid, TileCoord c, const Configuration& cfg, const OrientationMap& om) {
  auto it = om.find(c);
  int s = it == om.end() ? 0 : it->second;
  auto nm = grid.neighbors(c);
  NeighborWord w;
  for (int k = 0; k < 10; ++k) {
    auto& n = nm[local_to_canonical(k, s)];
    if (!n) throw CoordError("cell " + to_string(c) + " lacks neighbour " + std::to_string(k + 1) + " in this grid");
    w[k] = cfg.state(*n);
  }
  return w;
}

Engine::Engine(const Grid& grid, const RuleTable& rules, const OrientationMap& orientations,
               const std::optional<std::vector<TileCoord>>& active)
    : grid_(grid), rules_(rules) {
  int n = grid.size();
  shift_.assign(n, 0);
  active_.assign(n, false);
  stamp_.assign(n, 0);
  for (auto& [c, s] : orientations) {
    if (s < 0 || s > 4) throw std::invalid_argument("orientation of " + to_string(c) + " must be in 0..4");
    shift_[grid.id(c)] = static_cast<std::uint8_t>(s);
  }
  if (active) {
    for (auto c : *active) {
      int id = grid.id(c);
      if (!grid.interior(id)) throw BoundaryError(c, 0);
      active_[id] = true;
    }
  } else {
    for (int id = 0; id < n; ++id) active_[id] = grid.interior(id);
  }
  local_.assign(n, {});
  for (int id = 0; id < n; ++id) {
    if (!active_[id]) continue;
    active_ids_.push_back(id);
    auto& canon = grid.neighbor_ids(id);
    for (int k = 0; k < 10; ++k) local_[id][k] = canon[local_to_canonical(k, shift_[id])];
  }
}

Engine::Dense Engine::to_dense(const Configuration& cfg) const {
  Dense d(grid_.size(), 0);
  for (auto c : cfg.black) d[grid_.id(c)] = 1;
  return d;
}

Configuration Engine::from_dense(const Dense& d) const {
  Configuration cfg;
  for (int id = 0; id < static_cast<int>(d.size()); ++id)
    if (d[id]) cfg.black.insert(grid_.coord(id));
  return cfg;
}

// a black cell must keep all of its neighbours evaluable
void Engine::check_margin(const Dense& d, int step) const {
  for (int id = 0; id < static_cast<int>(d.size()); ++id) {
    if (!d[id]) continue;
    for (int x : grid_.neighbor_ids(id))
      if (x < 0 || !grid_.interior(x)) throw BoundaryError(grid_.coord(id), step);
  }
}

void Engine::advance(const Dense& cur, Dense& next, const std::vector<int>& tracked, StepTrace& trace, int step,
                     ScanMode mode) const {
  next = cur;
  std::vector<int> todo;
  if (mode == ScanMode::Full) {
    todo = active_ids_;
  } else {
    ++stamp_value_;
    auto visit = [&](int id) {
      if (id >= 0 && active_[id] && stamp_[id] != stamp_value_) {
        stamp_[id] = stamp_value_;
        todo.push_back(id);
      }
    };
    for (int id = 0; id < static_cast<int>(cur.size()); ++id) {
      if (!cur[id]) continue;
      visit(id);
      for (int x : grid_.neighbor_ids(id)) visit(x);
    }
    std::sort(todo.begin(), todo.end());
  }
  std::vector<int> applied(cur.size(), 0);
  for (int id : todo) {
    std::uint16_t packed = 0;
    for (int k = 0; k < 10; ++k)
      if (cur[local_[id][k]]) packed |= std::uint16_t(1u << k);
    State s = cur[id] ? State::B : State::W;
    const Rule* r = rules_.lookup(s, packed);
    if (!r) {
      NeighborWord w;
      for (int k = 0; k < 10; ++k) w[k] = cur[local_[id][k]] ? State::B : State::W;
      throw NoRuleError(grid_.coord(id), s, w, step);
    }
    next[id] = r->next == State::B;
    applied[id] = r->id;
  }
  trace.step = step;
  trace.applied.clear();
  for (int id : tracked) {
    // a quiescent cell outside the scan is governed by the all-white rule
    int rid = applied[id];
    if (!rid && active_[id]) {
      State s = cur[id] ? State::B : State::W;
      if (const Rule* r = rules_.lookup(s, std::uint16_t(0))) rid = r->id;
    }
    trace.applied[grid_.coord(id)] = rid;
  }
}

std::pair<Configuration, StepTrace> Engine::step(const Configuration& cfg, const std::vector<TileCoord>& tracked,
                                                 int step_index, ScanMode mode) const {
  Dense cur = to_dense(cfg), next;
  check_margin(cur, step_index);
  std::vector<int> ids;
  for (auto c : tracked) ids.push_back(grid_.id(c));
  StepTrace tr;
  advance(cur, next, ids, tr, step_index, mode);
  return {from_dense(next), tr};
}

std::vector<StepTrace> Engine::run(const Configuration& initial, int steps, const std::vector<TileCoord>& tracked,
                                   int first_step, ScanMode mode, std::vector<Configuration>* frames) const {
  if (steps < 0) throw std::invalid_argument("negative step count");
  std::vector<int> ids;
  for (auto c : tracked) ids.push_back(grid_.id(c));
  Dense cur = to_dense(initial), next;
  std::vector<StepTrace> out;
  out.reserve(steps);
  for (int t = 0; t < steps; ++t) {
    check_margin(cur, first_step + t);
    if (frames) frames->push_back(from_dense(cur));
    StepTrace tr;
    advance(cur, next, ids, tr, first_step + t, mode);
    out.push_back(std::move(tr));
    cur.swap(next);
  }
  check_margin(cur, first_step + steps);
  if (frames) frames->push_back(from_dense(cur));
  return out;
}

namespace {

std::vector<int> fitting_shifts(const Grid& grid, const RuleTable& rules, TileCoord c, const Configuration& cfg,
                                int expected) {
  std::vector<int> out;
  for (int s = 0; s < 5; ++s) {
    auto w = neighborhood_word(grid, c, cfg, {{c, s}});
    const Rule* r = rules.lookup(cfg.state(c), w);
    if (r && r->id == expected) out.push_back(s);
  }
  return out;
}

} // namespace

OrientationMap infer_orientations(const Grid& grid, const OrientationSkeleton& sk, const RuleTable& rules) {
  OrientationMap om = sk.fixed;
  std::map<TileCoord, std::vector<int>> open;
  for (auto c : sk.tracked) {
    auto it = sk.expected.find(c);
    if (it == sk.expected.end() || it->second.empty())
      throw InferenceError(InferenceError::Kind::NoFit, c, "no expected rule for " + to_string(c));
    auto fits = fitting_shifts(grid, rules, c, sk.initial, it->second[0]);
    if (fits.empty())
      throw InferenceError(InferenceError::Kind::NoFit, c,
                           "no orientation of " + to_string(c) + " applies rule " + std::to_string(it->second[0]));
    om[c] = fits[0];
    if (fits.size() > 1 && it->second.size() > 1) open[c] = fits;
  }
  // Shifts that tie at step 0 are tested against the next column. Survivors
  // that read the same word there are interchangeable.
  for (auto& [c, fits] : open) {
    auto& exp = sk.expected.at(c);
    std::vector<int> good;
    std::optional<NeighborWord> seen;
    bool agree = true;
    for (int s : fits) {
      OrientationMap trial = om;
      trial[c] = s;
      try {
        Engine e(grid, rules, trial, sk.active);
        Configuration next = e.step(sk.initial, {}).first;
        auto w = neighborhood_word(grid, c, next, trial);
        const Rule* r = rules.lookup(next.state(c), w);
        if (!r || r->id != exp[1]) continue;
        if (seen && *seen != w) agree = false;
        seen = w;
        good.push_back(s);
      } catch (const NoRuleError&) {
      }
    }
    if (good.empty() || !agree)
      throw InferenceError(InferenceError::Kind::Ambiguous, c,
                           std::to_string(fits.size()) + " orientations of " + to_string(c) +
                               " fit the first column and the second does not single one out");
    om[c] = good[0];
  }
  return om;
}

std::string trace_tsv(const std::vector<StepTrace>& traces, const RuleTable& rules) {
  std::string s = "step\tcell\trule\tstate\n";
  for (auto& tr : traces)
    for (auto& [c, id] : tr.applied) {
      const Rule* r = rules.find(id);
      s += std::to_string(tr.step) + "\t" + to_string(c) + "\t" + std::to_string(id) + "\t" +
           (r ? std::string(1, to_char(r->next)) : std::string("?")) + "\n";
    }
  return s;
}

} // namespace pentaca
