#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentaca/coords.hpp"
#include "pentaca/engine.hpp"
#include "pentaca/rules.hpp"

namespace pentaca {

enum class CellRole { Track, Special, Milestone };

const char* to_string(CellRole r);

struct Scenario {
  std::string name;
  std::string group;
  std::string title;
  std::vector<std::string> notes;
  int start = 0; // step index of the first expected column
  int steps = 0;
  std::vector<std::pair<TileCoord, CellRole>> cells;
  OrientationMap orientations;
  std::set<TileCoord> initial;
  std::set<TileCoord> locomotive;
  std::vector<TileCoord> tracked;
  std::map<TileCoord, std::vector<int>> expected;

  bool operator==(const Scenario&) const = default;

  // cells the engine evaluates; milestones and the background stay put
  std::vector<TileCoord> active_cells() const;
  Configuration initial_configuration() const { return {initial}; }
};

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(const std::string& where, int line, const std::string& what)
      : std::runtime_error(where + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Scenario parse_scenario(const std::string& text, const std::string& where = "<scenario>");
std::string format_scenario(const Scenario& s);
Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& s, const std::string& path);

// Sorted by name.
const std::vector<Scenario>& builtin_scenarios();
const Scenario* find_builtin(const std::string& name);

enum class LocoKind { Simple, Double };
enum class Direction { Down, Up };
enum class NodeColour { Black, White };
enum class Chirality { Clockwise, CounterClockwise };
enum class EntrySide { Left, Right };
enum class ControlMode { Passage, Signal };

Scenario vertical_track(Direction d, LocoKind k);
Scenario horizontal_track(NodeColour node, Chirality c, LocoKind k);
Scenario fixed_switch(EntrySide side, LocoKind k);
Scenario doubler();
Scenario fork();
Scenario selector(LocoKind k);
// signal mode: colour is the colour of 1(1) before the signal arrives
Scenario controller(NodeColour colour, ControlMode mode);
// there is no white-sensor signal fixture
Scenario controller_sensor(NodeColour colour, ControlMode mode);

// Structure family used for the idle property: vertical, horizontal, fixed,
// doubler, fork, selector, controller, sensor.
std::string family(const Scenario& s);
std::vector<std::string> families();

Scenario idle(const Scenario& s);

// Depth of the grid every scenario runs on.
inline constexpr int kScenarioDepth = 9;
const Grid& scenario_grid();

Engine make_engine(const Scenario& s, const RuleTable& rules);

// Runs `steps` updates (the scenario's own count when negative) from its start.
std::vector<StepTrace> run(const Scenario& s, const RuleTable& rules, int steps = -1,
                           ScanMode mode = ScanMode::Sparse, std::vector<Configuration>* frames = nullptr);

struct Mismatch {
  TileCoord cell;
  int step;
  int expected;
  int actual;
};

struct VerifyReport {
  std::string name;
  std::vector<Mismatch> mismatches;
  std::optional<std::string> error;
  bool passed() const { return mismatches.empty() && !error; }
  std::string describe() const;
};

VerifyReport verify(const Scenario& s, const RuleTable& rules);

struct GroupReport {
  std::string group;
  std::vector<VerifyReport> members;
  bool passed() const;
};

// One entry per trace table, ordered by group name.
std::vector<GroupReport> verify_groups(const std::vector<Scenario>& scenarios, const RuleTable& rules);

} // namespace pentaca
